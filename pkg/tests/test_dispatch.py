"""Define tests for the dispatch module."""
import asyncio
from concurrent.futures import ThreadPoolExecutor
import functools

import pytest

from pyfekete import const
from pyfekete.dispatch import Dispatcher, ProgressEvent
from pyfekete.error import DomainError


def _prime_event(prime, position=1, total=1, result=None):
    return ProgressEvent(
        const.COMMAND_GAUSS,
        const.EVENT_PRIME_FINISHED,
        subject=prime,
        position=position,
        total=total,
        result=result,
    )


def test_event_properties():
    """Tests a per-prime event carries its batch position."""
    # Act
    event = _prime_event(13, 3, 4, {"p": 13})
    # Assert
    assert event.command == const.COMMAND_GAUSS
    assert event.kind == const.EVENT_PRIME_FINISHED
    assert event.subject == 13
    assert event.result == {"p": 13}
    assert event.fraction == 0.75
    assert "p=13 3/4" in repr(event)


def test_suite_event_has_no_fraction():
    """Tests a suite boundary has no batch."""
    # Act
    event = ProgressEvent(const.COMMAND_RS, const.EVENT_SUITE_STARTED)
    # Assert
    assert event.subject is None
    assert event.fraction is None
    assert repr(event) == "<ProgressEvent rs suite_started>"


def test_unknown_kind():
    """Tests events and listeners need a known kind."""
    with pytest.raises(DomainError):
        ProgressEvent(const.COMMAND_RS, "prime_started")
    with pytest.raises(DomainError):
        Dispatcher().connect("prime_started", print)


def test_connect(handler):
    """Tests the connect function."""
    # Arrange
    dispatcher = Dispatcher()
    # Act
    dispatcher.connect(const.EVENT_PRIME_FINISHED, handler)
    # Assert
    assert dispatcher.listeners(const.EVENT_PRIME_FINISHED) == [handler]
    assert dispatcher.listeners(const.EVENT_SUITE_STARTED) == []


def test_disconnect(handler):
    """Tests the disconnect function, which can be called more than once."""
    # Arrange
    dispatcher = Dispatcher()
    disconnect = dispatcher.connect(const.EVENT_PRIME_FINISHED, handler)
    # Act
    disconnect()
    disconnect()
    # Assert
    assert handler not in dispatcher.listeners(const.EVENT_PRIME_FINISHED)


def test_disconnect_all(handler):
    """Tests the disconnect all function."""
    # Arrange
    dispatcher = Dispatcher()
    dispatcher.connect(const.EVENT_PRIME_FINISHED, handler)
    dispatcher.connect(const.EVENT_PRIME_FINISHED, handler)
    dispatcher.connect(const.EVENT_SUITE_FINISHED, handler)
    # Act
    dispatcher.disconnect_all()
    # Assert
    for kind in const.EVENT_KINDS:
        assert dispatcher.listeners(kind) == []


@pytest.mark.asyncio
async def test_emit_async_handler(async_handler):
    """Tests emitting to an async listener."""
    # Arrange
    dispatcher = Dispatcher()
    dispatcher.connect(const.EVENT_PRIME_FINISHED, async_handler)
    event = _prime_event(7)
    # Act
    await dispatcher.emit(event)
    # Assert
    assert async_handler.fired
    assert async_handler.args == (event,)


@pytest.mark.asyncio
async def test_emit_only_matching_kind(async_handler):
    """Tests listeners only see their own kind."""
    # Arrange
    dispatcher = Dispatcher()
    dispatcher.connect(const.EVENT_SUITE_FINISHED, async_handler)
    # Act
    await dispatcher.emit(_prime_event(7))
    # Assert
    assert not async_handler.fired


@pytest.mark.asyncio
async def test_emit_async_partial_handler(async_handler):
    """Tests emitting to a partial wrapping an async listener."""
    # Arrange
    dispatcher = Dispatcher()
    dispatcher.connect(
        const.EVENT_SUITE_STARTED, functools.partial(async_handler, "zeros")
    )
    event = ProgressEvent(const.COMMAND_ZEROS, const.EVENT_SUITE_STARTED)
    # Act
    await dispatcher.emit(event)
    # Assert
    assert async_handler.args == ("zeros", event)


@pytest.mark.asyncio
async def test_emit_uses_executor(handler):
    """Tests sync listeners run on the configured executor."""
    # Arrange
    with ThreadPoolExecutor(max_workers=1) as executor:
        dispatcher = Dispatcher(executor=executor)
        dispatcher.connect(const.EVENT_PRIME_FINISHED, handler)
        result = object()
        # Act
        await dispatcher.emit(_prime_event(13, result=result))
    # Assert
    assert handler.fired
    assert handler.args[0].result is result


@pytest.mark.asyncio
async def test_emit_delivers_in_turn():
    """Tests a slow listener finishes before the next one starts."""
    # Arrange
    dispatcher = Dispatcher()
    seen = []

    async def slow(event):
        await asyncio.sleep(0.01)
        seen.append(("slow", event.subject))

    dispatcher.connect(const.EVENT_PRIME_FINISHED, slow)
    dispatcher.connect(
        const.EVENT_PRIME_FINISHED, lambda event: seen.append(("fast", event.subject))
    )
    # Act
    for prime in (3, 5):
        await dispatcher.emit(_prime_event(prime))
    # Assert
    assert seen == [("slow", 3), ("fast", 3), ("slow", 5), ("fast", 5)]


@pytest.mark.asyncio
async def test_emit_survives_failing_listener(async_handler, caplog):
    """Tests a failing listener is logged and later listeners still run."""
    # Arrange
    dispatcher = Dispatcher()

    async def broken(event):
        raise RuntimeError("listener broke")

    dispatcher.connect(const.EVENT_SUITE_FINISHED, broken)
    dispatcher.connect(const.EVENT_SUITE_FINISHED, async_handler)
    # Act
    await dispatcher.emit(ProgressEvent(const.COMMAND_RS, const.EVENT_SUITE_FINISHED))
    # Assert
    assert async_handler.fired
    assert "listener broke" in caplog.text


def test_emit_outside_loop(handler):
    """Tests emitting requires a running loop."""
    # Arrange
    dispatcher = Dispatcher()
    dispatcher.connect(const.EVENT_PRIME_FINISHED, handler)
    coroutine = dispatcher.emit(_prime_event(3))
    # Act / Assert
    with pytest.raises(RuntimeError):
        coroutine.send(None)
    coroutine.close()
