from __future__ import annotations

import dataclasses
import datetime
import logging
import time
from abc import ABC
from typing import TYPE_CHECKING

import humanize

if TYPE_CHECKING:
    from knotperm.preferences import Preferences
    from knotperm.util.json_lib import JsonObject

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 10


@dataclasses.dataclass(frozen=True)
class VerifyContext:
    max_n: int
    preferences: Preferences
    progress: bool = False

    def clamp(self, cap: int) -> int:
        return min(self.max_n, cap)


@dataclasses.dataclass()
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = dataclasses.field(default_factory=list)
    findings: list[str] = dataclasses.field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        """Counts one check; records `message` when it fails."""
        self.checked += 1
        if not condition:
            logger.debug("%s: %s", self.name, message)
            self.failures.append(message)

    def describe(self) -> str:
        status = "pass" if self.passed else "FAIL"
        took = humanize.naturaldelta(datetime.timedelta(seconds=self.elapsed), minimum_unit="milliseconds")
        lines = [f"{status}  {self.name}: {self.checked} checks in {took}"]
        lines.extend(f"    failure: {f}" for f in self.failures[:MAX_REPORTED_FAILURES])
        if len(self.failures) > MAX_REPORTED_FAILURES:
            lines.append(f"    ... and {len(self.failures) - MAX_REPORTED_FAILURES} more")
        lines.extend(f"    finding: {f}" for f in self.findings)
        return "\n".join(lines)

    def to_json(self) -> JsonObject:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": list(self.failures),
            "findings": list(self.findings),
        }


class Suite(ABC):
    """A group of property checks run by `verify`. Each suite bounds its own sizes by the relevant cap."""

    name: str

    def check(self, context: VerifyContext, result: SuiteResult) -> None:
        """Runs the checks, recording them in `result`."""
        raise NotImplementedError

    def describe(self) -> str:
        """One line on what this suite covers."""
        raise NotImplementedError

    def run(self, context: VerifyContext) -> SuiteResult:
        result = SuiteResult(self.name)
        start = time.perf_counter()
        self.check(context, result)
        result.elapsed = time.perf_counter() - start
        logger.info("%s: %d checks, %d failures", self.name, result.checked, len(result.failures))
        return result
