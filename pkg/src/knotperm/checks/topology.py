from __future__ import annotations

import typing

from knotperm.checks.base import Suite
from knotperm.counting.enumeration import enumerate_derangements
from knotperm.decider import component_blocks, is_unknotted_cycle, unlink_components
from knotperm.diagram import crossing_count, inter_component_crossings, thurston_bennequin, ur_indices
from knotperm.exceptions import ComponentsCross, InternalInconsistency
from knotperm.permutation import Permutation, cycle_count
from knotperm.seifert import seifert_circles

if typing.TYPE_CHECKING:
    from knotperm.checks.base import SuiteResult, VerifyContext
    from knotperm.counting.enumeration import Images

MAX_N = 8


def topology_violation(images: Images) -> str | None:
    """First broken diagram property of a derangement, or None."""
    p = Permutation(images)
    decomposition = seifert_circles(p)
    ur = ur_indices(p)
    if len(decomposition) != len(ur):
        return f"{p}: {len(decomposition)} Seifert circles but {len(ur)} UR indices"
    if any(c.ur_index < 0 or c.ll_index < 0 for c in decomposition.circles):
        return f"{p}: a Seifert circle without exactly one UR and one LL corner"

    if cycle_count(p) == 1:
        if len(decomposition.maximal_circles()) != 1:
            return f"{p}: {len(decomposition.maximal_circles())} maximal Seifert circles"
        crossings = crossing_count(p)
        if min(abs(v - i) for i, v in enumerate(images, start=1)) >= 2:
            if crossings < len(ur):
                return f"{p}: {crossings} crossings, fewer than {len(ur)} UR indices without a kink"
            maximal = decomposition.maximal_circles()
            for k in range(len(decomposition)):
                if len(decomposition.associated_crossings(k)) == 1 and k not in maximal:
                    return f"{p}: circle {k} has one associated crossing but is not maximal"
        if is_unknotted_cycle(images) and thurston_bennequin(p) > -1:
            return f"{p}: unknot with tb {thurston_bennequin(p)}"
        return None

    counts = inter_component_crossings(p)
    if any(count % 2 for count in counts.values()):
        return f"{p}: odd crossing count between two components"
    if unlink_components(images, count_fixed_points=False) is not None and any(counts.values()):
        return f"{p}: unlink with a nonzero linking number"
    if not any(counts.values()):
        try:
            component_blocks(p)
        except (ComponentsCross, InternalInconsistency) as e:
            return str(e)
    return None


class TopologySuite(Suite):
    name = "topology"

    def describe(self) -> str:
        return "Seifert circles, corners, crossings, tb and component blocks over every derangement"

    def check(self, context: VerifyContext, result: SuiteResult) -> None:
        preferences = context.preferences
        for n in range(2, min(context.clamp(preferences.derangement_cap), MAX_N) + 1):
            summary = enumerate_derangements(
                n,
                topology_violation,
                cap=preferences.derangement_cap,
                threads=preferences.threads,
                progress=context.progress,
            )
            result.checked += summary.visited
            result.failures.extend(sorted(summary.counts))
