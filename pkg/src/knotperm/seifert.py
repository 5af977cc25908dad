from __future__ import annotations

import dataclasses
import typing
from collections import defaultdict

from knotperm.diagram import build_diagram, ll_indices, ur_indices

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

    from knotperm.diagram import CycleDiagram, Point, Segment
    from knotperm.permutation import Permutation

SegmentKey: typing.TypeAlias = tuple[int, bool]
ArcKey: typing.TypeAlias = tuple[int, bool, int]

# offset from a diagonal vertex into the open lattice square above and to its right
_INSET = 0.25


@dataclasses.dataclass(frozen=True)
class SeifertCircle:
    vertices: tuple[Point, ...]
    crossings: frozenset[tuple[int, int]]
    ur_index: int
    ll_index: int

    def interior_point(self) -> tuple[float, float]:
        d = self.ur_index
        return d + _INSET, d + _INSET

    def encloses(self, point: tuple[float, float]) -> bool:
        return point_in_polygon(point, self.vertices)


@dataclasses.dataclass(frozen=True)
class SeifertDecomposition:
    circles: tuple[SeifertCircle, ...]
    membership: dict[tuple[int, int], tuple[int, int]]
    containment: frozenset[tuple[int, int]]
    """Pairs (inner, outer) of circle indices: `inner` lies in the bounded region of `outer`."""

    def __len__(self) -> int:
        return len(self.circles)

    def maximal_circles(self) -> list[int]:
        inner = {a for a, _ in self.containment}
        return [k for k in range(len(self.circles)) if k not in inner]

    def associated_crossings(self, k: int) -> frozenset[tuple[int, int]]:
        return frozenset(pair for pair, owners in self.membership.items() if k in owners)

    def encloses(self, outer: int, inner: int) -> bool:
        return (inner, outer) in self.containment


def point_in_polygon(point: tuple[float, float], vertices: Sequence[Point]) -> bool:
    """Ray casting towards +x against a rectilinear polygon; `point` must be off the lattice lines."""
    px, py = point
    inside = False
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:] + vertices[:1]):
        if x0 == x1 and x0 > px and min(y0, y1) < py < max(y0, y1):
            inside = not inside
    return inside


def _split_points(diagram: CycleDiagram) -> dict[SegmentKey, list[Point]]:
    """Breakpoints of every segment, ordered along its orientation, endpoints included."""
    cuts: dict[SegmentKey, list[Point]] = defaultdict(list)
    for crossing in diagram.crossings:
        cuts[(crossing.under, False)].append(crossing.point)
        cuts[(crossing.over, True)].append(crossing.point)

    result = {}
    for segment in diagram.segments:
        key = (segment.index, segment.vertical)
        inner = sorted(cuts.get(key, []), key=lambda pt, s=segment: _distance_along(s, pt))
        result[key] = [segment.start, *inner, segment.end]
    return result


def _distance_along(segment: Segment, point: Point) -> int:
    return abs(point[0] - segment.start[0]) + abs(point[1] - segment.start[1])


def seifert_circles(p: Permutation) -> SeifertDecomposition:
    """Smooths every crossing and collects the resulting closed curves.

    At a crossing the strand arriving along the vertical leaves along the horizontal and the
    strand arriving along the horizontal leaves along the vertical. Fixed points contribute nothing.
    """
    diagram = build_diagram(p)
    pieces = _split_points(diagram)

    # which arc of each segment starts at a given point
    starting: dict[tuple[SegmentKey, Point], ArcKey] = {}
    for (index, vertical), points in pieces.items():
        for k, point in enumerate(points[:-1]):
            starting[((index, vertical), point)] = (index, vertical, k)

    crossing_at: dict[Point, tuple[int, int]] = {c.point: c.pair for c in diagram.crossings}
    under_of: dict[Point, int] = {c.point: c.under for c in diagram.crossings}
    over_of: dict[Point, int] = {c.point: c.over for c in diagram.crossings}

    def successor(arc: ArcKey) -> ArcKey:
        index, vertical, k = arc
        points = pieces[(index, vertical)]
        end = points[k + 1]
        if k + 1 < len(points) - 1:
            # ends on a crossing: continue on the other strand
            if vertical:
                return starting[((under_of[end], False), end)]
            return starting[((over_of[end], True), end)]
        if vertical:
            return index, False, 0
        return p(index), True, 0

    arcs = sorted(starting.values())
    circle_of: dict[ArcKey, int] = {}
    raw_circles: list[tuple[list[Point], set[tuple[int, int]]]] = []
    for first in arcs:
        if first in circle_of:
            continue
        vertices: list[Point] = []
        touched: set[tuple[int, int]] = set()
        arc = first
        while arc not in circle_of:
            circle_of[arc] = len(raw_circles)
            index, vertical, k = arc
            start = pieces[(index, vertical)][k]
            vertices.append(start)
            if start in crossing_at:
                touched.add(crossing_at[start])
            arc = successor(arc)
        raw_circles.append((vertices, touched))

    ur = ur_indices(p)
    ll = ll_indices(p)
    unsorted = [
        SeifertCircle(
            vertices=tuple(vertices),
            crossings=frozenset(touched),
            ur_index=_single(x for x, y in vertices if x == y and x in ur),
            ll_index=_single(x for x, y in vertices if x == y and x in ll),
        )
        for vertices, touched in raw_circles
    ]
    order = sorted(range(len(unsorted)), key=lambda k: unsorted[k].ur_index)
    renumber = {old: new for new, old in enumerate(order)}
    circles = tuple(unsorted[k] for k in order)

    membership = {}
    for crossing in diagram.crossings:
        arriving_vertical = _arc_ending_at(pieces, (crossing.over, True), crossing.point)
        arriving_horizontal = _arc_ending_at(pieces, (crossing.under, False), crossing.point)
        membership[crossing.pair] = (
            renumber[circle_of[arriving_vertical]],
            renumber[circle_of[arriving_horizontal]],
        )

    containment = frozenset(
        (inner, outer)
        for inner, a in enumerate(circles)
        for outer, b in enumerate(circles)
        if inner != outer and b.encloses(a.interior_point())
    )
    return SeifertDecomposition(circles, membership, containment)


def _arc_ending_at(pieces: dict[SegmentKey, list[Point]], key: SegmentKey, point: Point) -> ArcKey:
    k = pieces[key].index(point)
    return key[0], key[1], k - 1


def _single(values: typing.Iterable[int]) -> int:
    """The unique value, or -1 when the circle breaks the one-corner-per-circle property."""
    found = list(values)
    return found[0] if len(found) == 1 else -1
