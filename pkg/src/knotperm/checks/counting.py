from __future__ import annotations

import math
import typing

from knotperm.checks.base import Suite
from knotperm.counting import expected
from knotperm.counting.enumeration import enumerate_cycles, enumerate_derangements, visit_all
from knotperm.counting.series import catalan_diagonal, schroder, series_F, series_G
from knotperm.counting.tables import (
    catalan_numbers,
    count_unknotted_cycles,
    count_unlinked,
    derangement_count,
    unlink_key,
)

if typing.TYPE_CHECKING:
    from knotperm.checks.base import SuiteResult, VerifyContext

CUBIC_DEGREE = 20
PARALLEL_N = 7


def derangements_by_recurrence(n: int) -> int:
    previous, current = 1, 0
    for k in range(2, n + 1):
        previous, current = current, (k - 1) * (current + previous)
    return current if n >= 1 else previous


class CountingSuite(Suite):
    name = "counting"

    def describe(self) -> str:
        return "enumeration totals against Schröder numbers, F, G and the vendored sequences"

    def check(self, context: VerifyContext, result: SuiteResult) -> None:
        preferences = context.preferences
        options = {"threads": preferences.threads, "progress": context.progress}

        for n in range(2, 10):
            result.check(
                schroder(n) == schroder(n - 1) + sum(schroder(i) * schroder(n - i) for i in range(1, n)),
                f"S_{n} breaks the Schröder recursion",
            )
            result.check(schroder(n) == expected.SCHRODER[n], f"S_{n} = {schroder(n)}")

        for n in range(2, context.clamp(preferences.cycle_cap) + 1):
            visited = enumerate_cycles(n, visit_all, cap=preferences.cycle_cap, **options).visited
            result.check(visited == math.factorial(n - 1), f"{visited} cycles of length {n} visited")
            count = count_unknotted_cycles(n, cap=preferences.cycle_cap, **options)
            result.check(count == schroder(n - 1), f"{count} unknotted {n}-cycles, expected S_{n - 1}")

        derangement_n = context.clamp(preferences.derangement_cap)
        f = series_F(max(CUBIC_DEGREE, derangement_n))
        for n in range(1, derangement_n + 1):
            row = count_unlinked(n, by_components=True, cap=preferences.derangement_cap, **options)
            visited = enumerate_derangements(n, visit_all, cap=preferences.derangement_cap, **options).visited
            result.check(
                visited == derangement_count(n) == derangements_by_recurrence(n),
                f"{visited} derangements of length {n} visited",
            )
            if n in expected.UNLINKED_DERANGEMENTS:
                result.check(
                    row.total == expected.UNLINKED_DERANGEMENTS[n],
                    f"{row.total} unlinked derangements of length {n}",
                )
            for k in range(1, n + 1):
                result.check(
                    row.stratum(k) == f.coefficient(k, n),
                    f"n={n}, k={k}: enumerated {row.stratum(k)}, series {f.coefficient(k, n)}",
                )

        permutation_n = context.clamp(preferences.permutation_cap)
        g = series_G(permutation_n)
        for n in range(1, permutation_n + 1):
            row = count_unlinked(
                n, by_components=True, include_fixed_points=True, cap=preferences.permutation_cap, **options
            )
            result.check(row.total == sum(g.x_coefficient(n)), f"{row.total} unlinked permutations of length {n}")
            for k in range(1, n + 1):
                result.check(row.stratum(k) == g.coefficient(k, n), f"n={n}, k={k} disagrees with G")

        result.check(catalan_diagonal(5) == catalan_numbers(5), "2-cycle diagonal of F is not Catalan")

        if preferences.threads > 1:
            n = min(derangement_n, PARALLEL_N)
            single = enumerate_derangements(n, unlink_key, cap=preferences.derangement_cap)
            parallel = enumerate_derangements(
                n, unlink_key, cap=preferences.derangement_cap, threads=preferences.threads
            )
            result.check(single.counts == parallel.counts, f"threaded counts differ at n={n}")
