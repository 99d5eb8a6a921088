"""Define the progress events of a suite run and the dispatcher that delivers them."""
import asyncio
from collections import defaultdict
from concurrent.futures import Executor
import functools
import logging
from typing import Any, Callable, Dict, List, Optional

from . import const
from .error import DomainError

_LOGGER = logging.getLogger(__name__)

ListenerType = Callable[["ProgressEvent"], Any]
DisconnectType = Callable[[], None]


class ProgressEvent:
    """Define one step of a suite run: a suite boundary or a finished prime."""

    def __init__(
        self,
        command: Optional[str],
        kind: str,
        *,
        subject: Optional[int] = None,
        position: Optional[int] = None,
        total: Optional[int] = None,
        result: Any = None
    ):
        """Init the event."""
        if kind not in const.EVENT_KINDS:
            raise DomainError("unknown event kind: {}".format(kind))
        self._command = command  # type: Optional[str]
        self._kind = kind  # type: str
        self._subject = subject  # type: Optional[int]
        self._position = position  # type: Optional[int]
        self._total = total  # type: Optional[int]
        self._result = result

    def __repr__(self):
        """Get a debug representation of the event."""
        if self._subject is None:
            return "<ProgressEvent {} {}>".format(self._command, self._kind)
        return "<ProgressEvent {} {} p={} {}/{}>".format(
            self._command, self._kind, self._subject, self._position, self._total
        )

    @property
    def command(self) -> Optional[str]:
        """Get the command of the suite that emitted the event."""
        return self._command

    @property
    def kind(self) -> str:
        """Get the event kind."""
        return self._kind

    @property
    def subject(self) -> Optional[int]:
        """Get the prime, or Rudin-Shapiro order, the event belongs to."""
        return self._subject

    @property
    def position(self) -> Optional[int]:
        """Get the 1-based position of the prime in its batch."""
        return self._position

    @property
    def total(self) -> Optional[int]:
        """Get the size of the batch."""
        return self._total

    @property
    def result(self) -> Any:
        """Get the per-prime result."""
        return self._result

    @property
    def fraction(self) -> Optional[float]:
        """Get the completed share of the batch."""
        if not self._total:
            return None
        return self._position / self._total


def _is_coroutine(listener: ListenerType) -> bool:
    check_target = listener
    while isinstance(check_target, functools.partial):
        check_target = check_target.func
    return asyncio.iscoroutinefunction(check_target)


class Dispatcher:
    """Define the dispatcher; listeners see the events of a run in order."""

    def __init__(self, *, executor: Optional[Executor] = None):
        """Create a new dispatcher; the event loop is resolved when emitting."""
        self._listeners = defaultdict(list)  # type: Dict[str, List[ListenerType]]
        self._executor = executor
        self._disconnects = []  # type: List[DisconnectType]

    def connect(self, kind: str, listener: ListenerType) -> DisconnectType:
        """Connect a listener to an event kind and return its disconnect."""
        if kind not in const.EVENT_KINDS:
            raise DomainError("unknown event kind: {}".format(kind))
        self._listeners[kind].append(listener)

        def disconnect() -> None:
            """Remove the listener."""
            try:
                self._listeners[kind].remove(listener)
            except ValueError:
                # already removed
                pass

        self._disconnects.append(disconnect)
        return disconnect

    def disconnect_all(self):
        """Disconnect every listener."""
        disconnects = self._disconnects.copy()
        self._disconnects.clear()
        for disconnect in disconnects:
            disconnect()

    async def emit(self, event: ProgressEvent):
        """Deliver the event to each listener in turn.  Must be run in the event loop.

        Coroutine listeners are awaited; plain callables run on the executor.
        A listener that raises is logged and does not stop the run.
        """
        loop = asyncio.get_running_loop()
        for listener in list(self._listeners[event.kind]):
            try:
                if _is_coroutine(listener):
                    await listener(event)
                else:
                    await loop.run_in_executor(self._executor, listener, event)
            except Exception:  # pylint: disable=broad-except
                _LOGGER.exception("Listener %r failed on %r", listener, event)

    def listeners(self, kind: str) -> List[ListenerType]:
        """Get the listeners connected to an event kind."""
        return list(self._listeners[kind])
