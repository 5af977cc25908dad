from __future__ import annotations

import dataclasses
import enum
import itertools
import typing

from knotperm.exceptions import HasFixedPoint, NotAPermutation, OddCrossingCount, SameComponent
from knotperm.permutation import Permutation, cycle_decomposition, inverse, is_derangement
from knotperm.util.json_lib import drop_none

if typing.TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from knotperm.util.json_lib import JsonObject

Point: typing.TypeAlias = tuple[int, int]
CyclePair: typing.TypeAlias = tuple[tuple[int, ...], tuple[int, ...]]


class Orientation(enum.Enum):
    UP = "up"
    DOWN = "down"
    LEFT = "left"
    RIGHT = "right"


@dataclasses.dataclass(frozen=True)
class Segment:
    """One leg of the connector drawn for index `index`: the vertical from (i, i) to (i, σ(i))
    or the horizontal from (i, σ(i)) to (σ(i), σ(i)). `start` to `end` follows the orientation."""

    index: int
    vertical: bool
    start: Point
    end: Point

    @property
    def orientation(self) -> Orientation:
        dx, dy = self.end[0] - self.start[0], self.end[1] - self.start[1]
        if self.vertical:
            return Orientation.UP if dy > 0 else Orientation.DOWN
        return Orientation.RIGHT if dx > 0 else Orientation.LEFT

    @property
    def above_diagonal(self) -> bool:
        return self.orientation in (Orientation.UP, Orientation.RIGHT)


@dataclasses.dataclass(frozen=True)
class Crossing:
    """The C-pair (i, j): the horizontal leg of i passes under the vertical leg of j at `point`."""

    i: int
    j: int
    point: Point
    above: bool

    @property
    def pair(self) -> tuple[int, int]:
        return self.i, self.j

    @property
    def under(self) -> int:
        return self.i

    @property
    def over(self) -> int:
        return self.j


@dataclasses.dataclass(frozen=True)
class CrossingSet:
    pairs: tuple[Crossing, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Crossing]:
        return iter(self.pairs)

    def index_pairs(self) -> list[tuple[int, int]]:
        return [c.pair for c in self.pairs]


@dataclasses.dataclass(frozen=True)
class CycleDiagram:
    perm: Permutation
    points: frozenset[Point]
    segments: tuple[Segment, ...]
    crossings: CrossingSet

    @property
    def n(self) -> int:
        return self.perm.n

    def vertical(self, i: int) -> Segment:
        return next(s for s in self.segments if s.index == i and s.vertical)

    def horizontal(self, i: int) -> Segment:
        return next(s for s in self.segments if s.index == i and not s.vertical)


def _images(p: Permutation | Sequence[int]) -> Sequence[int]:
    return p.images if isinstance(p, Permutation) else p


def build_diagram(p: Permutation) -> CycleDiagram:
    segments = []
    points = set()
    for i, s in enumerate(p.images, start=1):
        if s == i:
            continue
        points.add((i, s))
        segments.append(Segment(i, True, (i, i), (i, s)))
        segments.append(Segment(i, False, (i, s), (s, s)))
    return CycleDiagram(p, frozenset(points), tuple(segments), c_pairs(p))


def crossing_pairs(images: Sequence[int]) -> Iterator[tuple[int, int]]:
    """Yields every C-pair (i, j) of the one-line `images`, by double scan."""
    n = len(images)
    for i in range(1, n + 1):
        si = images[i - 1]
        if si > i:
            for j in range(i + 1, si):
                if images[j - 1] > si:
                    yield i, j
        elif si < i:
            for j in range(si + 1, i):
                if images[j - 1] < si:
                    yield i, j


def c_pairs(p: Permutation) -> CrossingSet:
    images = p.images
    return CrossingSet(
        tuple(
            Crossing(i, j, (j, images[i - 1]), images[i - 1] > i)
            for i, j in crossing_pairs(images)
        )
    )


def crossing_count(p: Permutation | Sequence[int]) -> int:
    return sum(1 for _ in crossing_pairs(_images(p)))


def ur_indices(p: Permutation) -> frozenset[int]:
    """Upper-right corners on the diagonal: σ(i) < i and σ⁻¹(i) < i."""
    inv = inverse(p)
    return frozenset(i for i in range(1, p.n + 1) if p(i) < i and inv(i) < i)


def ll_indices(p: Permutation) -> frozenset[int]:
    """Lower-left corners on the diagonal: σ(i) > i and σ⁻¹(i) > i."""
    inv = inverse(p)
    return frozenset(i for i in range(1, p.n + 1) if p(i) > i and inv(i) > i)


def writhe(p: Permutation) -> int:
    # every crossing of a cycle diagram is negative
    return -crossing_count(p)


def require_derangement(p: Permutation) -> None:
    if not is_derangement(p):
        fixed = [i for i, v in enumerate(p.images, start=1) if v == i]
        raise HasFixedPoint(f"{p} fixes {fixed}; only derangements have a link diagram")


def thurston_bennequin(p: Permutation) -> int:
    """tb of the Legendrian front built from the diagram, C(D) - UR(D)."""
    require_derangement(p)
    return crossing_count(p) - len(ur_indices(p))


def _component_index(p: Permutation) -> dict[int, tuple[int, ...]]:
    return {i: cycle for cycle in cycle_decomposition(p) for i in cycle}


def inter_component_crossings(p: Permutation) -> dict[CyclePair, int]:
    """Crossing counts for every unordered pair of distinct cycles, keyed by the pair sorted by minimum."""
    require_derangement(p)
    component = _component_index(p)
    cycles = cycle_decomposition(p).cycles
    result: dict[CyclePair, int] = {pair: 0 for pair in itertools.combinations(cycles, 2)}
    for i, j in crossing_pairs(p.images):
        a, b = component[i], component[j]
        if a is not b:
            result[(a, b) if a[0] < b[0] else (b, a)] += 1
    return result


def _as_cycle_of(p: Permutation, component: dict[int, tuple[int, ...]], cycle: Sequence[int]) -> tuple[int, ...]:
    if not cycle:
        raise NotAPermutation("empty cycle")
    found = component[min(cycle)]
    if set(found) != set(cycle):
        raise NotAPermutation(f"{tuple(cycle)} is not a cycle of {p}")
    return found


def linking_number(p: Permutation, cycle_a: Sequence[int], cycle_b: Sequence[int]) -> int:
    """Half the signed count of crossings between two components; all such crossings are negative."""
    require_derangement(p)
    component = _component_index(p)
    a = _as_cycle_of(p, component, cycle_a)
    b = _as_cycle_of(p, component, cycle_b)
    if a is b:
        raise SameComponent(f"{a} and {b} are the same component")

    members_a, members_b = set(a), set(b)
    count = sum(
        1 for i, j in crossing_pairs(p.images)
        if (i in members_a and j in members_b) or (i in members_b and j in members_a)
    )
    if count % 2:
        raise OddCrossingCount(f"{count} crossings between {a} and {b} in {p}")
    return -(count // 2)


@dataclasses.dataclass(frozen=True)
class TopologySummary:
    n: int
    crossings: int
    ur_indices: tuple[int, ...]
    writhe: int
    seifert_circle_count: int | None
    tb: int | None

    def to_json(self) -> JsonObject:
        return drop_none({
            "n": self.n,
            "crossings": self.crossings,
            "ur_indices": list(self.ur_indices),
            "writhe": self.writhe,
            "seifert_circle_count": self.seifert_circle_count,
            "tb": self.tb,
        })

    @classmethod
    def from_json(cls, data: JsonObject) -> typing.Self:
        return cls(
            n=typing.cast(int, data["n"]),
            crossings=typing.cast(int, data["crossings"]),
            ur_indices=tuple(typing.cast(list[int], data["ur_indices"])),
            writhe=typing.cast(int, data["writhe"]),
            seifert_circle_count=typing.cast(int | None, data.get("seifert_circle_count")),
            tb=typing.cast(int | None, data.get("tb")),
        )


def topology_summary(p: Permutation) -> TopologySummary:
    """Crossing and corner statistics; Seifert count and tb only when the diagram is a link diagram."""
    from knotperm.seifert import seifert_circles

    linked = is_derangement(p)
    return TopologySummary(
        n=p.n,
        crossings=crossing_count(p),
        ur_indices=tuple(sorted(ur_indices(p))),
        writhe=writhe(p),
        seifert_circle_count=len(seifert_circles(p).circles) if linked else None,
        tb=thurston_bennequin(p) if linked else None,
    )
