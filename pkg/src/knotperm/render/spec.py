from __future__ import annotations

import dataclasses
import enum

from knotperm.exceptions import InvalidRenderSpec

MIN_SVG_CELL_SIZE = 4


class RenderFormat(enum.Enum):
    ASCII = "ascii"
    SVG = "svg"


@dataclasses.dataclass(frozen=True)
class RenderSpec:
    """How to draw a cycle diagram. `cell_size` is pixels per lattice unit and only matters for SVG."""

    format: RenderFormat = RenderFormat.ASCII
    cell_size: int = 40
    show_diagonal: bool = True
    show_crossings: bool = True
    show_seifert: bool = False

    def __post_init__(self) -> None:
        if self.format is RenderFormat.SVG and self.cell_size < MIN_SVG_CELL_SIZE:
            raise InvalidRenderSpec(f"cell size {self.cell_size} is below {MIN_SVG_CELL_SIZE} pixels")
        if self.format is RenderFormat.ASCII and self.show_seifert:
            raise InvalidRenderSpec("Seifert circles can only be drawn as SVG")
