from __future__ import annotations

import random
import typing

from knotperm.checks.base import Suite
from knotperm.counting.enumeration import enumerate_cycles
from knotperm.counting.series import schroder
from knotperm.decider import Status, collapse_kink, decide_unknot, find_kinks
from knotperm.permutation import Permutation, inverse, is_cycle
from knotperm.trees import (
    all_trees,
    canonical_form,
    class_representatives,
    insert_node,
    negate,
    rotation_closure,
    tree_to_cycle,
)

if typing.TYPE_CHECKING:
    from knotperm.checks.base import SuiteResult, VerifyContext
    from knotperm.counting.enumeration import Images
    from knotperm.decider import Kink
    from knotperm.trees import Path, SignedTree

# tree sizes past this take minutes, not seconds
MAX_NODES = 7
RANDOM_ORDERS = 20
MAX_COLLAPSE_N = 8


def random_insertion_order(t: SignedTree, rng: random.Random) -> list[Path]:
    """A uniformly chosen next node among those whose parent is already placed, until none remain."""
    paths = t.preorder()
    children: dict[Path, list[Path]] = {}
    for path in paths:
        children.setdefault(path[:-1], []).append(path)

    order: list[Path] = []
    frontier = list(children.get((), []))
    while frontier:
        path = frontier.pop(rng.randrange(len(frontier)))
        order.append(path)
        frontier.extend(children.get(path, []))
    return order


def _last(kinks: list[Kink]) -> Kink:
    return kinks[-1]


def collapse_violation(images: Images) -> str | None:
    """First broken collapse property of a cycle, or None. Reinserting any collapsed kink restores
    the cycle, and collapsing first kinks or last kinks gives the same verdict."""
    p = Permutation(images)
    if p.n >= 3:
        for kink in find_kinks(p):
            if insert_node(collapse_kink(p, kink), kink.slot, kink.sign) != p:
                return f"{p}: reinserting the collapsed kink {kink} does not restore it"
    first, last = decide_unknot(p), decide_unknot(p, choose=_last)
    if first.status is not last.status or first.tree != last.tree:
        return f"{p}: collapsing the first kink gives {first.label}, the last gives {last.label}"
    return None


class BijectionSuite(Suite):
    name = "bijection"

    def __init__(self, seed: int = 0):
        self.seed = seed

    def describe(self) -> str:
        return "tree to cycle on rotation classes, kink collapse against insertion, and collapse order"

    def check(self, context: VerifyContext, result: SuiteResult) -> None:
        rng = random.Random(self.seed)
        max_nodes = min(context.clamp(context.preferences.cycle_cap) - 1, MAX_NODES)
        for k in range(1, max_nodes + 1):
            representatives = list(class_representatives(k))
            result.check(
                len(representatives) == schroder(k),
                f"{len(representatives)} rotation classes with {k} nodes, expected {schroder(k)}",
            )

            covered = 0
            cycles = set()
            for tree in representatives:
                cycle = tree_to_cycle(tree)
                cycles.add(cycle)
                result.check(is_cycle(cycle) and cycle.n == k + 1, f"{tree} gives {cycle}, not a {k + 1}-cycle")

                closure = rotation_closure(tree)
                covered += len(closure)
                for other in closure:
                    result.check(tree_to_cycle(other) == cycle, f"{other} and {tree} are equivalent, cycles differ")

                for _ in range(RANDOM_ORDERS):
                    order = random_insertion_order(tree, rng)
                    result.check(tree_to_cycle(tree, order) == cycle, f"{tree} in order {order} does not give {cycle}")

                result.check(
                    tree_to_cycle(negate(tree)) == inverse(cycle),
                    f"negating {tree} does not invert {cycle}",
                )

                verdict = decide_unknot(cycle)
                result.check(
                    verdict.status is Status.UNKNOT
                    and verdict.tree is not None
                    and canonical_form(verdict.tree) == canonical_form(tree),
                    f"deciding {cycle} does not recover the class of {tree}",
                )

            result.check(len(cycles) == len(representatives), f"distinct classes with {k} nodes share a cycle")
            total = sum(1 for _ in all_trees(k))
            result.check(covered == total, f"rotation classes with {k} nodes cover {covered} of {total} trees")

        preferences = context.preferences
        for n in range(3, min(context.clamp(preferences.cycle_cap), MAX_COLLAPSE_N) + 1):
            summary = enumerate_cycles(
                n,
                collapse_violation,
                cap=preferences.cycle_cap,
                threads=preferences.threads,
                progress=context.progress,
            )
            result.checked += summary.visited
            result.failures.extend(sorted(summary.counts))
