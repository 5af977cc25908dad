from __future__ import annotations

import dataclasses
import logging
import typing

import sympy

from knotperm.counting.enumeration import enumerate_cycles, enumerate_derangements, enumerate_permutations
from knotperm.counting.series import schroder
from knotperm.decider import is_unknotted_cycle, unlink_components
from knotperm.exceptions import InternalInconsistency
from knotperm.permutation import Permutation, dg_gap

if typing.TYPE_CHECKING:
    from collections.abc import Iterable

    from knotperm.counting.enumeration import Images
    from knotperm.util.json_lib import JsonObject

logger = logging.getLogger(__name__)


def unknot_key(images: Images) -> bool | None:
    return True if is_unknotted_cycle(images) else None


def unlink_key(images: Images) -> int | None:
    return unlink_components(images, count_fixed_points=False)


def unlink_with_fixed_key(images: Images) -> int | None:
    return unlink_components(images, count_fixed_points=True)


def dg_key(images: Images) -> tuple[bool, bool, Images | None] | None:
    """(DG-tight, unlinked, images when the two disagree), or None when neither holds."""
    tight = dg_gap(Permutation(images)) == 0
    unlinked = unlink_components(images, count_fixed_points=True) is not None
    if not tight and not unlinked:
        return None
    return tight, unlinked, None if tight == unlinked else images


@dataclasses.dataclass(frozen=True)
class CountRow:
    n: int
    total: int
    by_components: dict[int, int] | None = None

    def __post_init__(self) -> None:
        if self.by_components is not None and sum(self.by_components.values()) != self.total:
            raise InternalInconsistency(f"strata {self.by_components} do not add up to {self.total} at n={self.n}")

    def stratum(self, k: int) -> int:
        if self.by_components is None:
            raise ValueError("row was counted without stratification")
        return self.by_components.get(k, 0)

    def to_json(self) -> JsonObject:
        result: JsonObject = {"n": self.n, "total": self.total}
        if self.by_components is not None:
            result["by_components"] = {str(k): v for k, v in sorted(self.by_components.items())}
        return result


@dataclasses.dataclass(frozen=True)
class CountTable:
    target: str
    rows: tuple[CountRow, ...]

    def row(self, n: int) -> CountRow:
        for row in self.rows:
            if row.n == n:
                return row
        raise KeyError(n)

    def totals(self) -> list[int]:
        return [row.total for row in self.rows]

    def max_components(self) -> int:
        return max((max(row.by_components, default=0) for row in self.rows if row.by_components), default=0)

    def to_json(self) -> JsonObject:
        return {"target": self.target, "rows": [row.to_json() for row in self.rows]}

    def format(self) -> str:
        """One line per n: n, the total, then one column per component count when stratified."""
        header = ["n", "all"]
        ks = range(1, self.max_components() + 1)
        header.extend(f"k={k}" for k in ks)
        lines = [header]
        for row in self.rows:
            line = [str(row.n), str(row.total)]
            if row.by_components is not None:
                line.extend(str(row.by_components.get(k, 0)) for k in ks)
            lines.append(line)

        widths = [max(len(line[c]) for line in lines if c < len(line)) for c in range(len(header))]
        return "\n".join(
            "  ".join(cell.rjust(widths[c]) for c, cell in enumerate(line)) for line in lines
        ) + "\n"


def count_unknotted_cycles(n: int, *, cap: int = 11, threads: int = 1, progress: bool = False) -> int:
    return enumerate_cycles(n, unknot_key, cap=cap, threads=threads, progress=progress).total()


def count_unlinked(
    n: int,
    by_components: bool = False,
    include_fixed_points: bool = False,
    *,
    cap: int | None = None,
    threads: int = 1,
    progress: bool = False,
) -> CountRow:
    """Unlinked derangements of length n, or with `include_fixed_points` all unlinked permutations
    with every fixed point counted as a component of its own."""
    if include_fixed_points:
        summary = enumerate_permutations(
            n, unlink_with_fixed_key, cap=8 if cap is None else cap, threads=threads, progress=progress
        )
    else:
        summary = enumerate_derangements(
            n, unlink_key, cap=10 if cap is None else cap, threads=threads, progress=progress
        )
    strata = dict(sorted(summary.counts.items()))
    return CountRow(n, summary.total(), strata if by_components else None)


def unknotted_cycle_table(ns: Iterable[int], *, cap: int = 11, threads: int = 1, progress: bool = False) -> CountTable:
    rows = tuple(
        CountRow(n, count_unknotted_cycles(n, cap=cap, threads=threads, progress=progress)) for n in ns
    )
    return CountTable("unknotted-cycles", rows)


def unlinked_table(
    ns: Iterable[int],
    by_components: bool = False,
    include_fixed_points: bool = False,
    *,
    cap: int | None = None,
    threads: int = 1,
    progress: bool = False,
) -> CountTable:
    rows = tuple(
        count_unlinked(
            n, by_components, include_fixed_points, cap=cap, threads=threads, progress=progress
        )
        for n in ns
    )
    return CountTable("unlinked-with-fixed" if include_fixed_points else "unlinked", rows)


def unknot_probability(n: int) -> sympy.Rational:
    """Chance that a uniformly random n-cycle gives the unknot: S_(n-1) / (n-1)!."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return sympy.Rational(schroder(n - 1), sympy.factorial(n - 1))


def derangement_count(n: int) -> int:
    return int(sympy.subfactorial(n))


def catalan_numbers(count: int) -> list[int]:
    return [int(sympy.catalan(k)) for k in range(1, count + 1)]


@dataclasses.dataclass(frozen=True)
class DgReport:
    n: int
    dg_tight: int
    unlinked: int
    only_dg: tuple[Images, ...]
    only_unlinked: tuple[Images, ...]

    @property
    def equal(self) -> bool:
        return not self.only_dg and not self.only_unlinked

    def to_json(self) -> JsonObject:
        return {
            "n": self.n,
            "equal": self.equal,
            "dg_tight": self.dg_tight,
            "unlinked": self.unlinked,
            "only_dg": [list(p) for p in self.only_dg],
            "only_unlinked": [list(p) for p in self.only_unlinked],
        }


def dg_experiment(n: int, *, cap: int = 8, threads: int = 1, progress: bool = False) -> DgReport:
    """Compares the permutations meeting inv + (n - cyc) = td with the unlinked ones, fixed
    points counted as components. Disagreements are reported with the permutations involved."""
    summary = enumerate_permutations(n, dg_key, cap=cap, threads=threads, progress=progress)
    dg_tight = unlinked = 0
    only_dg: list[Images] = []
    only_unlinked: list[Images] = []
    for (tight, linked_free, witness), count in summary.counts.items():
        dg_tight += count if tight else 0
        unlinked += count if linked_free else 0
        if witness is not None:
            (only_dg if tight else only_unlinked).append(witness)
    if only_dg or only_unlinked:
        logger.warning("n=%d: %d DG-tight only, %d unlinked only", n, len(only_dg), len(only_unlinked))
    return DgReport(n, dg_tight, unlinked, tuple(sorted(only_dg)), tuple(sorted(only_unlinked)))
