"""Define the suite runner that fans per-prime work out to worker threads."""
import asyncio
from concurrent.futures import ThreadPoolExecutor
import functools
import logging
from typing import Any, Callable, Dict, Iterable, List, Optional

from . import const
from .dispatch import Dispatcher, ProgressEvent
from .error import DomainError, NumericalFailureError
from .report import RunReport
from .suites import SUITES

_LOGGER = logging.getLogger(__name__)


class SuiteRunner:
    """The SuiteRunner class runs verification suites and collects reports."""

    def __init__(
        self,
        *,
        threads: int = const.DEFAULT_THREADS,
        timestamps: bool = True,
        dispatcher: Optional[Dispatcher] = None
    ):
        """Init a new runner."""
        if threads < 1:
            raise DomainError("threads must be at least 1")
        self._threads = threads  # type: int
        self._timestamps = timestamps  # type: bool
        self._executor = ThreadPoolExecutor(max_workers=threads)
        self._dispatcher = dispatcher or Dispatcher(executor=self._executor)
        self._command = None  # type: Optional[str]

    async def __aenter__(self) -> "SuiteRunner":
        """Enter the runner context."""
        return self

    async def __aexit__(self, *exc_info):
        """Shut the worker threads down."""
        self.close()

    def close(self):
        """Shut the worker threads down."""
        self._dispatcher.disconnect_all()
        self._executor.shutdown(wait=True)

    async def call(self, func: Callable, *args, **kwargs) -> Any:
        """Run a blocking computation on a worker thread."""
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(
            self._executor, functools.partial(func, *args, **kwargs)
        )

    async def map_primes(
        self, func: Callable, primes: Iterable, *args, **kwargs
    ) -> List[Any]:
        """Run func(prime, ...) for every prime; results follow the input order.

        The primes run concurrently on the worker threads; their events are
        emitted in input order, each once its own result and every earlier one
        are in.
        """
        primes = list(primes)
        tasks = [
            asyncio.ensure_future(self.call(func, prime, *args, **kwargs))
            for prime in primes
        ]
        results = []
        try:
            for position, (prime, task) in enumerate(zip(primes, tasks), 1):
                result = await task
                results.append(result)
                await self._dispatcher.emit(
                    ProgressEvent(
                        self._command,
                        const.EVENT_PRIME_FINISHED,
                        subject=int(prime),
                        position=position,
                        total=len(primes),
                        result=result,
                    )
                )
        finally:
            for task in tasks:
                task.cancel()
        return results

    async def run(self, command: str, params: Optional[Dict[str, Any]] = None) -> RunReport:
        """Run the suite registered for command and return its report."""
        if command not in SUITES:
            raise DomainError("unknown command: {}".format(command))
        params = dict(params or {})
        report = RunReport(
            command, params, seed=params.get("seed"), timestamps=self._timestamps
        )
        previous, self._command = self._command, command
        report.start()
        await self._dispatcher.emit(ProgressEvent(command, const.EVENT_SUITE_STARTED))
        _LOGGER.debug("Running suite %s with %s", command, params)
        try:
            await SUITES[command](self, report, **params)
        except NumericalFailureError as error:
            _LOGGER.error("Suite %s stopped: %s", command, error)
            report.numerical_failure(error)
        finally:
            self._command = previous
        report.finish()
        await self._dispatcher.emit(
            ProgressEvent(command, const.EVENT_SUITE_FINISHED, result=report)
        )
        return report

    @property
    def dispatcher(self) -> Dispatcher:
        """Get the dispatcher."""
        return self._dispatcher

    @property
    def threads(self) -> int:
        """Get the worker thread count."""
        return self._threads

    @property
    def timestamps(self) -> bool:
        """Return True if reports carry timestamps."""
        return self._timestamps
