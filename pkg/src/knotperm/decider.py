from __future__ import annotations

import dataclasses
import enum
import logging
import typing

from knotperm.diagram import crossing_pairs, require_derangement
from knotperm.exceptions import (
    ComponentsCross,
    InternalInconsistency,
    NotACycle,
    NotAKink,
    SupportNotInvariant,
    TooSmall,
)
from knotperm.permutation import Permutation, cycle_decomposition, cycles_of_images, format_cycle, parse_permutation
from knotperm.trees import SignedTree, Sign, canonical_form, insert_leaf, parse_tree
from knotperm.util.json_lib import drop_none

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Collection, Sequence

    from knotperm.util.json_lib import JsonObject

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Kink:
    """An index one step off the diagonal: σ(i) = i + 1 (positive) or σ(i) = i - 1 (negative)."""

    index: int
    sign: Sign

    @property
    def slot(self) -> int:
        """Relative position of the tree leaf whose insertion creates this kink."""
        return self.index if self.sign is Sign.PLUS else self.index - 1

    def __str__(self) -> str:
        return f"({self.index},{self.sign.symbol})"


class Status(enum.Enum):
    UNKNOT = "unknot"
    KNOTTED = "knotted"
    UNLINK = "unlink"
    LINKED = "linked"


@dataclasses.dataclass(frozen=True)
class Verdict:
    status: Status
    components: int | None = None
    tree: SignedTree | None = None
    reduced: Permutation | None = None
    crossing: tuple[int, int] | None = None
    cycles: tuple[tuple[int, ...], ...] | None = None

    @property
    def label(self) -> str:
        if self.status is Status.UNLINK:
            return f"unlink({self.components})"
        return self.status.value

    @property
    def positive(self) -> bool:
        return self.status in (Status.UNKNOT, Status.UNLINK)

    def witness_json(self) -> JsonObject | None:
        if self.crossing is not None:
            assert self.cycles is not None
            return {"components": [list(c) for c in self.cycles], "pair": list(self.crossing)}
        if self.cycles is not None:
            return {"knotted": list(self.cycles[0])}
        if self.reduced is not None:
            return {"reduced": self.reduced.one_line()}
        return None

    def describe_witness(self) -> str | None:
        if self.crossing is not None:
            assert self.cycles is not None
            a, b = self.cycles
            return f"{format_cycle(a)}{format_cycle(b)} cross at C-pair {self.crossing}"
        if self.cycles is not None:
            return f"component {format_cycle(self.cycles[0])} is knotted"
        if self.reduced is not None:
            return f"no kink left in {self.reduced}"
        return None

    def to_json(self) -> JsonObject:
        return drop_none({
            "status": self.status.value,
            "components": self.components,
            "tree": str(self.tree) if self.tree is not None else None,
            "witness": self.witness_json(),
        })

    @classmethod
    def from_json(cls, data: JsonObject) -> typing.Self:
        witness = typing.cast(dict[str, typing.Any], data.get("witness") or {})
        cycles = None
        if "components" in witness:
            cycles = tuple(tuple(c) for c in witness["components"])
        elif "knotted" in witness:
            cycles = (tuple(witness["knotted"]),)
        return cls(
            status=Status(data["status"]),
            components=typing.cast(int | None, data.get("components")),
            tree=parse_tree(typing.cast(str, data["tree"])) if "tree" in data else None,
            reduced=parse_permutation(witness["reduced"]) if "reduced" in witness else None,
            crossing=tuple(witness["pair"]) if "pair" in witness else None,
            cycles=cycles,
        )


def _kink_at(images: Sequence[int], i: int) -> Kink | None:
    v = images[i - 1]
    if v == i + 1:
        return Kink(i, Sign.PLUS)
    if v == i - 1:
        return Kink(i, Sign.MINUS)
    return None


def find_kinks(p: Permutation) -> list[Kink]:
    return [k for i in range(1, p.n + 1) if (k := _kink_at(p.images, i)) is not None]


def _collapse(images: Sequence[int], position: int) -> tuple[int, ...]:
    # removes the entry at `position` and closes the gap its value leaves
    removed = images[position - 1]
    return tuple(v - 1 if v > removed else v for k, v in enumerate(images, start=1) if k != position)


def collapse_kink(p: Permutation, k: Kink) -> Permutation:
    """Undoes the insertion that created the kink: the inverse of `insert_node` at `k.slot`."""
    if _kink_at(p.images, k.index) != k:
        raise NotAKink(f"{k} is not a kink of {p}")
    if p.n < 3:
        raise TooSmall(f"{p} has no room to collapse")
    return Permutation(_collapse(p.images, k.index))


KinkChooser: typing.TypeAlias = "Callable[[list[Kink]], Kink]"


def _smallest(kinks: list[Kink]) -> Kink:
    return kinks[0]


def collapse_sequence(p: Permutation, choose: KinkChooser = _smallest) -> tuple[list[Kink], Permutation]:
    """Collapses kinks until none is left or the cycle is 21. Returns the kinks used and what remains."""
    used: list[Kink] = []
    current = p
    while current.n > 2:
        kinks = find_kinks(current)
        if not kinks:
            break
        kink = choose(kinks)
        current = collapse_kink(current, kink)
        logger.debug("collapsed %s, now %s", kink, current)
        used.append(kink)
    return used, current


def _require_cycle(p: Permutation) -> None:
    if p.n < 2 or len(cycles_of_images(p.images)) != 1:
        raise NotACycle(f"{p} is not a single cycle of length at least 2")


def rebuild_tree(collapses: Sequence[Kink]) -> SignedTree:
    """Replays collapses backwards as leaf insertions, starting from the root-only tree."""
    tree = SignedTree()
    for kink in reversed(collapses):
        tree = insert_leaf(tree, kink.slot, kink.sign)
    return tree


def decide_unknot(p: Permutation, choose: KinkChooser = _smallest) -> Verdict:
    """Decides whether the knot of a cycle is trivial.

    A cycle that still has three or more elements and no kink cannot be an unknot, so the first
    stuck state settles the answer.
    """
    _require_cycle(p)
    collapses, remainder = collapse_sequence(p, choose)
    if remainder.n > 2:
        return Verdict(Status.KNOTTED, components=1, reduced=remainder)
    if remainder.images != (2, 1):
        raise InternalInconsistency(f"collapsing {p} ended at {remainder}")
    return Verdict(Status.UNKNOT, components=1, tree=canonical_form(rebuild_tree(collapses)))


def is_unknotted_cycle(images: Sequence[int]) -> bool:
    """Kink-collapse test on raw one-line images of a cycle, with no witness."""
    current = tuple(images)
    while len(current) > 2:
        for i, v in enumerate(current, start=1):
            if v == i + 1 or v == i - 1:
                current = _collapse(current, i)
                break
        else:
            return False
    return True


def relabel_to_dense(p: Permutation, support: Collection[int]) -> Permutation:
    """The order-isomorphic permutation that `p` induces on `support`, relabelled to 1..|support|."""
    ordered = sorted(support)
    rank = {v: k for k, v in enumerate(ordered, start=1)}
    try:
        return Permutation(tuple(rank[p(v)] for v in ordered))
    except KeyError:
        raise SupportNotInvariant(f"{p} does not map {ordered} to itself") from None


def _dense_images(images: Sequence[int], cycle: Sequence[int]) -> tuple[int, ...]:
    ordered = sorted(cycle)
    rank = {v: k for k, v in enumerate(ordered, start=1)}
    return tuple(rank[images[v - 1]] for v in ordered)


def is_unlinked(p: Permutation, count_fixed_points: bool = False) -> Verdict:
    """Unlink iff no two components cross and every component is an unknotted cycle."""
    if not count_fixed_points:
        require_derangement(p)

    decomposition = cycle_decomposition(p)
    component = {i: cycle for cycle in decomposition for i in cycle}
    for i, j in crossing_pairs(p.images):
        a, b = component[i], component[j]
        if a is not b:
            return Verdict(Status.LINKED, crossing=(i, j), cycles=tuple(sorted((a, b))))

    for cycle in decomposition.nontrivial():
        if not is_unknotted_cycle(_dense_images(p.images, cycle)):
            return Verdict(Status.LINKED, cycles=(cycle,))

    count = len(decomposition) if count_fixed_points else len(decomposition.nontrivial())
    return Verdict(Status.UNLINK, components=count)


def unlink_components(images: Sequence[int], count_fixed_points: bool) -> int | None:
    """Component count when the one-line `images` give an unlink, otherwise None. Enumeration kernel."""
    cycles = cycles_of_images(images)
    owner = [0] * (len(images) + 1)
    for k, cycle in enumerate(cycles):
        for i in cycle:
            owner[i] = k
    for i, j in crossing_pairs(images):
        if owner[i] != owner[j]:
            return None

    nontrivial = 0
    for cycle in cycles:
        if len(cycle) > 1:
            nontrivial += 1
            if not is_unknotted_cycle(_dense_images(images, cycle)):
                return None
        elif not count_fixed_points:
            return None
    return len(cycles) if count_fixed_points else nontrivial


@dataclasses.dataclass(frozen=True)
class ComponentBlocks:
    """The component through 1, with the other components grouped by the gap of its support they sit in.
    Gap k lies strictly between the k-th and (k+1)-th support elements; the last gap is everything after."""

    first: tuple[int, ...]
    gaps: tuple[tuple[tuple[int, ...], ...], ...]


def component_blocks(p: Permutation) -> ComponentBlocks:
    require_derangement(p)
    decomposition = cycle_decomposition(p)
    component = {i: cycle for cycle in decomposition for i in cycle}
    for i, j in crossing_pairs(p.images):
        if component[i] is not component[j]:
            raise ComponentsCross(f"{p}: C-pair {(i, j)} joins two components")

    first = decomposition.cycles[0]
    bounds = sorted(first)
    gaps: list[list[tuple[int, ...]]] = [[] for _ in bounds]
    for cycle in decomposition.cycles[1:]:
        low, high = min(cycle), max(cycle)
        gap = sum(1 for b in bounds if b < low) - 1
        upper = bounds[gap + 1] if gap + 1 < len(bounds) else p.n + 1
        if high >= upper:
            raise InternalInconsistency(f"{format_cycle(cycle)} straddles {bounds[gap + 1]} in {p}")
        gaps[gap].append(cycle)
    return ComponentBlocks(first, tuple(tuple(g) for g in gaps))
