"""Define the report module: findings, run reports and CSV tables."""
import csv
from datetime import datetime, timezone
import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import const

_LOGGER = logging.getLogger(__name__)


def _plain(value: Any) -> Any:
    """Convert numpy scalars, tuples and non-finite floats to JSON values."""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(item) for item in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


class Finding:
    """Define the outcome of one verified or observed statement."""

    def __init__(
        self,
        check_id: str,
        status: str,
        measured: Any = None,
        expected: Any = None,
        tolerance: Optional[float] = None,
        subject: Any = None,
    ):
        """Init the finding."""
        if status not in const.VALID_STATUSES:
            raise ValueError("unknown finding status: " + status)
        self._check_id = check_id  # type: str
        self._status = status  # type: str
        self._measured = measured
        self._expected = expected
        self._tolerance = tolerance  # type: Optional[float]
        self._subject = subject

    def __repr__(self):
        """Get a debug representation of the finding."""
        return "<Finding {} {} subject={}>".format(
            self._check_id, self._status, self._subject
        )

    def to_dict(self) -> dict:
        """Get a JSON-ready representation."""
        return _plain(
            {
                "check_id": self._check_id,
                "status": self._status,
                "measured": self._measured,
                "expected": self._expected,
                "tolerance": self._tolerance,
                "subject": self._subject,
            }
        )

    @property
    def check_id(self) -> str:
        """Get the check identifier."""
        return self._check_id

    @property
    def status(self) -> str:
        """Get pass, fail or observe."""
        return self._status

    @property
    def passed(self) -> bool:
        """Return True unless the finding failed."""
        return self._status != const.STATUS_FAIL

    @property
    def measured(self) -> Any:
        """Get the measured value."""
        return self._measured

    @property
    def expected(self) -> Any:
        """Get the expected value or bound."""
        return self._expected

    @property
    def tolerance(self) -> Optional[float]:
        """Get the tolerance the check used."""
        return self._tolerance

    @property
    def subject(self) -> Any:
        """Get what the finding is about, usually a prime."""
        return self._subject


class ReportTable:
    """Define a CSV table with a fixed column order."""

    def __init__(self, name: str, columns: Sequence[str]):
        """Init an empty table."""
        self._name = name  # type: str
        self._columns = tuple(columns)
        self._rows = []  # type: List[Dict[str, Any]]

    def __len__(self) -> int:
        """Get the number of rows."""
        return len(self._rows)

    def add_row(self, **values):
        """Append a row; every column must be given."""
        missing = set(self._columns) - set(values)
        extra = set(values) - set(self._columns)
        if missing or extra:
            raise ValueError(
                "row for {} does not match its columns (missing {}, extra {})".format(
                    self._name, sorted(missing), sorted(extra)
                )
            )
        self._rows.append(values)

    @staticmethod
    def _cell(value: Any) -> str:
        value = _plain(value)
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            return repr(value)
        return str(value)

    def to_csv(self) -> str:
        """Render the table with a header row and LF line endings."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self._columns)
        for row in self._rows:
            writer.writerow([self._cell(row[column]) for column in self._columns])
        return buffer.getvalue()

    @property
    def name(self) -> str:
        """Get the table name."""
        return self._name

    @property
    def columns(self) -> tuple:
        """Get the column names in output order."""
        return self._columns

    @property
    def rows(self) -> List[Dict[str, Any]]:
        """Get the rows."""
        return self._rows


class RunReport:
    """Define the report of one suite run."""

    def __init__(
        self,
        command: str,
        params: Optional[Dict[str, Any]] = None,
        *,
        seed: Optional[int] = None,
        timestamps: bool = True
    ):
        """Init an empty report."""
        self._command = command  # type: str
        self._params = dict(params or {})  # type: Dict[str, Any]
        self._seed = seed  # type: Optional[int]
        self._timestamps = timestamps  # type: bool
        self._started = None  # type: Optional[str]
        self._ended = None  # type: Optional[str]
        self._findings = []  # type: List[Finding]
        self._tables = {}  # type: Dict[str, ReportTable]
        self._results = {}  # type: Dict[str, Any]
        self._numerical_failures = []  # type: List[str]

    def __repr__(self):
        """Get a debug representation of the report."""
        return "<RunReport {} findings={} exit={}>".format(
            self._command, len(self._findings), self.exit_code
        )

    def start(self):
        """Record the start time."""
        if self._timestamps:
            self._started = datetime.now(timezone.utc).isoformat()

    def finish(self):
        """Record the end time."""
        if self._timestamps:
            self._ended = datetime.now(timezone.utc).isoformat()

    def add(self, finding: Finding) -> Finding:
        """Append a finding."""
        self._findings.append(finding)
        if not finding.passed:
            _LOGGER.info("Check %s failed for %s", finding.check_id, finding.subject)
        return finding

    def check(
        self,
        check_id: str,
        holds: bool,
        measured: Any = None,
        expected: Any = None,
        tolerance: Optional[float] = None,
        subject: Any = None,
    ) -> Finding:
        """Record a pass or fail finding."""
        status = const.STATUS_PASS if holds else const.STATUS_FAIL
        return self.add(
            Finding(check_id, status, measured, expected, tolerance, subject)
        )

    def observe(
        self, check_id: str, measured: Any, expected: Any = None, subject: Any = None
    ) -> Finding:
        """Record an observation that never fails the run."""
        return self.add(
            Finding(check_id, const.STATUS_OBSERVE, measured, expected, None, subject)
        )

    def numerical_failure(self, error: Exception, subject: Any = None):
        """Record a numerical failure; the run exits with its own code."""
        self._numerical_failures.append(str(error))
        self.check(const.CHECK_NUMERICAL_FAILURE, False, str(error), subject=subject)

    def table(self, name: str, columns: Sequence[str]) -> ReportTable:
        """Get or create a named table."""
        if name not in self._tables:
            self._tables[name] = ReportTable(name, columns)
        return self._tables[name]

    def set_result(self, key: str, value: Any):
        """Attach a structured result to the JSON output."""
        self._results[key] = value

    def to_dict(self) -> dict:
        """Get the JSON-ready report."""
        data = {
            "command": self._command,
            "params": self._params,
            "findings": [finding.to_dict() for finding in self._findings],
            "results": self._results,
            "summary": {
                "pass": self.count(const.STATUS_PASS),
                "fail": self.count(const.STATUS_FAIL),
                "observe": self.count(const.STATUS_OBSERVE),
                "exit_code": self.exit_code,
            },
            "tables": sorted(self._tables),
        }
        if self._seed is not None:
            data["seed"] = self._seed
            data["generator"] = const.GENERATOR_ID
        if self._timestamps:
            data["started"] = self._started
            data["ended"] = self._ended
        return _plain(data)

    def to_json(self) -> str:
        """Render the report with sorted keys."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def write(self, out_dir) -> List[Path]:
        """Write the JSON report and every table into out_dir."""
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        paths = [directory / "{}.json".format(self._command)]
        paths[0].write_text(self.to_json(), encoding="utf-8")
        for name in sorted(self._tables):
            path = directory / "{}_{}.csv".format(self._command, name)
            with open(path, "w", encoding="utf-8", newline="") as handle:
                handle.write(self._tables[name].to_csv())
            paths.append(path)
        _LOGGER.debug("Wrote %s", ", ".join(str(path) for path in paths))
        return paths

    def count(self, status: str) -> int:
        """Count findings with the given status."""
        return sum(1 for finding in self._findings if finding.status == status)

    @property
    def command(self) -> str:
        """Get the command."""
        return self._command

    @property
    def params(self) -> Dict[str, Any]:
        """Get the effective parameters."""
        return self._params

    @property
    def findings(self) -> List[Finding]:
        """Get the findings in recording order."""
        return self._findings

    @property
    def tables(self) -> Dict[str, ReportTable]:
        """Get the tables by name."""
        return self._tables

    @property
    def results(self) -> Dict[str, Any]:
        """Get the structured results."""
        return self._results

    @property
    def exit_code(self) -> int:
        """Get 3 on numerical failure, 1 on any failed check, else 0."""
        if self._numerical_failures:
            return const.EXIT_NUMERICAL
        if self.count(const.STATUS_FAIL):
            return const.EXIT_FAIL
        return const.EXIT_OK
