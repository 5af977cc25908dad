"""Character rendering on a (2n - 1)-square grid, row n at the top.

`+` marks corners and dots, `-` and `|` the connectors, `^` a crossing (the vertical strand
passes over) and `.` a fixed point.
"""

from __future__ import annotations

import typing

from knotperm.diagram import build_diagram

if typing.TYPE_CHECKING:
    from knotperm.diagram import Point
    from knotperm.permutation import Permutation
    from knotperm.render.spec import RenderSpec


def render_ascii(p: Permutation, spec: RenderSpec) -> str:
    n = p.n
    size = 2 * n - 1
    grid = [[" "] * size for _ in range(size)]

    def put(point: Point, offset: tuple[int, int], glyph: str) -> None:
        column = 2 * (point[0] - 1) + offset[0]
        row = 2 * (n - point[1]) - offset[1]
        grid[row][column] = glyph

    diagram = build_diagram(p)
    for segment in sorted(diagram.segments, key=lambda s: s.vertical):
        (x0, y0), (x1, y1) = segment.start, segment.end
        glyph = "|" if segment.vertical else "-"
        if segment.vertical:
            low, high = sorted((y0, y1))
            for step in range(2 * (high - low) - 1):
                put((x0, low), (0, step + 1), glyph)
        else:
            low, high = sorted((x0, x1))
            for step in range(2 * (high - low) - 1):
                put((low, y0), (step + 1, 0), glyph)

    if spec.show_crossings:
        for crossing in diagram.crossings:
            put(crossing.point, (0, 0), "^")
    for i, s in enumerate(p.images, start=1):
        if s == i:
            put((i, i), (0, 0), ".")
        else:
            put((i, i), (0, 0), "+")
            put((i, s), (0, 0), "+")

    return "".join("".join(row).rstrip() + "\n" for row in grid)
