from __future__ import annotations

import typing

from knotperm.diagram import build_diagram
from knotperm.seifert import seifert_circles

if typing.TYPE_CHECKING:
    from knotperm.permutation import Permutation
    from knotperm.render.spec import RenderSpec

NS_SVG = "http://www.w3.org/2000/svg"

STYLE = """
.grid { stroke: #d0d0d0; stroke-width: 1; }
.diagonal { stroke: #909090; stroke-width: 1; stroke-dasharray: 4 4; }
.strand { stroke: #000000; stroke-width: 2; fill: none; }
.dot { fill: #000000; }
.fixed { fill: none; stroke: #000000; stroke-width: 1; }
.seifert { fill: none; stroke: #d04040; stroke-width: 2; stroke-opacity: 0.7; }
"""

# half the break left in a horizontal strand where a vertical passes over it, in cells
GAP = 0.2


def _number(value: float) -> str:
    rounded = round(value, 6)
    if rounded == int(rounded):
        return str(int(rounded))
    return f"{rounded:g}"


class Element:
    """An SVG node; attributes are written in insertion order, so output is reproducible."""

    def __init__(self, tag: str, children: list[Element | str] | None = None, **attr: str | float):
        self.tag = tag
        self.children = children or []
        self.attr = attr

    def svg(self) -> str:
        props = "".join(
            f' {key.rstrip("_").replace("_", "-")}="{_number(v) if isinstance(v, float | int) else v}"'
            for key, v in self.attr.items()
        )
        if not self.children:
            return f"<{self.tag}{props} />"
        inner = "".join(c if isinstance(c, str) else c.svg() for c in self.children)
        return f"<{self.tag}{props}>{inner}</{self.tag}>"


def _line(x1: float, y1: float, x2: float, y2: float, class_: str) -> Element:
    return Element("line", x1=x1, y1=y1, x2=x2, y2=y2, class_=class_)


def render_svg(p: Permutation, spec: RenderSpec) -> str:
    n = p.n
    cell = spec.cell_size
    extent = n * cell

    def px(i: float) -> float:
        return (i - 0.5) * cell

    def py(j: float) -> float:
        return (n - j + 0.5) * cell

    children: list[Element | str] = [Element("style", [STYLE])]
    grid = [_line(k * cell, 0, k * cell, extent, "grid") for k in range(n + 1)]
    grid += [_line(0, k * cell, extent, k * cell, "grid") for k in range(n + 1)]
    children.append(Element("g", grid, class_="lattice"))
    if spec.show_diagonal:
        children.append(_line(px(1), py(1), px(n), py(n), "diagonal"))

    diagram = build_diagram(p)
    gaps: dict[int, list[int]] = {}
    if spec.show_crossings:
        for crossing in diagram.crossings:
            gaps.setdefault(crossing.under, []).append(crossing.point[0])

    strands: list[Element | str] = []
    for segment in diagram.segments:
        (x0, y0), (x1, y1) = segment.start, segment.end
        if segment.vertical:
            strands.append(_line(px(x0), py(y0), px(x1), py(y1), "strand"))
            continue
        low, high = sorted((x0, x1))
        breaks = [px(low)]
        for x in sorted(gaps.get(segment.index, [])):
            breaks.extend((px(x) - GAP * cell, px(x) + GAP * cell))
        breaks.append(px(high))
        for a, b in zip(breaks[::2], breaks[1::2]):
            strands.append(_line(a, py(y0), b, py(y0), "strand"))
    children.append(Element("g", strands, class_="strands"))

    radius = cell / 8
    marks: list[Element | str] = []
    for i, s in enumerate(p.images, start=1):
        css = "fixed" if s == i else "dot"
        marks.append(Element("circle", cx=px(i), cy=py(s), r=radius, class_=css))
    children.append(Element("g", marks, class_="marks"))

    if spec.show_seifert:
        overlay: list[Element | str] = []
        for circle in seifert_circles(p).circles:
            path = " ".join(
                f"{'M' if k == 0 else 'L'} {_number(px(x))} {_number(py(y))}"
                for k, (x, y) in enumerate(circle.vertices)
            )
            overlay.append(Element("path", d=path + " Z", class_="seifert"))
        children.append(Element("g", overlay, class_="seifert-circles"))

    document = Element(
        "svg", children, xmlns=NS_SVG, width=extent, height=extent, viewBox=f"0 0 {extent} {extent}"
    )
    return document.svg() + "\n"
