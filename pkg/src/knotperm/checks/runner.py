from __future__ import annotations

import logging
import typing

from knotperm.checks.bijection import BijectionSuite
from knotperm.checks.counting import CountingSuite
from knotperm.checks.dg import DgSuite
from knotperm.checks.topology import TopologySuite
from knotperm.exceptions import CapExceeded

if typing.TYPE_CHECKING:
    from knotperm.checks.base import Suite, SuiteResult, VerifyContext

logger = logging.getLogger(__name__)


def default_suites() -> list[Suite]:
    return [BijectionSuite(), TopologySuite(), CountingSuite(), DgSuite()]


def run_suites(context: VerifyContext, suites: list[Suite] | None = None) -> list[SuiteResult]:
    """Runs every suite in order. `max_n` is held to the cycle cap; each suite then bounds itself."""
    if context.max_n > context.preferences.cycle_cap:
        raise CapExceeded(context.max_n, context.preferences.cycle_cap, "verify")
    if suites is None:
        suites = default_suites()

    results = []
    for suite in suites:
        logger.info("running %s: %s", suite.name, suite.describe())
        results.append(suite.run(context))
    return results
