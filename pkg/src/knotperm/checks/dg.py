from __future__ import annotations

import typing

from knotperm.checks.base import Suite
from knotperm.counting.tables import dg_experiment

if typing.TYPE_CHECKING:
    from knotperm.checks.base import SuiteResult, VerifyContext

MAX_N = 7


class DgSuite(Suite):
    """Disagreement between the two sets is a finding to report, never a failure."""

    name = "diaconis-graham"

    def describe(self) -> str:
        return "permutations meeting the Diaconis-Graham bound with equality against unlinked permutations"

    def check(self, context: VerifyContext, result: SuiteResult) -> None:
        preferences = context.preferences
        for n in range(1, min(context.clamp(preferences.permutation_cap), MAX_N) + 1):
            report = dg_experiment(
                n, cap=preferences.permutation_cap, threads=preferences.threads, progress=context.progress
            )
            result.checked += 1
            if not report.equal:
                result.findings.append(
                    f"n={n}: only DG-tight {[list(p) for p in report.only_dg]}, "
                    f"only unlinked {[list(p) for p in report.only_unlinked]}"
                )
