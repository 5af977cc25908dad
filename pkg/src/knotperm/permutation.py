from __future__ import annotations

import dataclasses
import itertools
import re
import typing

from knotperm.exceptions import MalformedInput, NotABijection

if typing.TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from knotperm.util.json_lib import JsonArray

_SEPARATORS = re.compile(r"[,\s]+")


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation: `images[i - 1]` is σ(i)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.images:
            raise NotABijection("a permutation needs at least one element")
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise NotABijection(f"{list(self.images)} is not a bijection on 1..{len(self.images)}")

    @classmethod
    def of(cls, images: Sequence[int]) -> typing.Self:
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def one_line(self, separator: str = ",") -> str:
        return separator.join(str(v) for v in self.images)

    def to_json(self) -> JsonArray:
        return list(self.images)

    def __str__(self) -> str:
        return self.one_line()


@dataclasses.dataclass(frozen=True)
class CycleDecomposition:
    """Cycles in traversal order, each starting at its minimum, sorted by minimum.
    Fixed points appear as cycles of length one."""

    cycles: tuple[tuple[int, ...], ...]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.cycles if len(c) > 1)

    def cycle_of(self, i: int) -> tuple[int, ...]:
        for cycle in self.cycles:
            if i in cycle:
                return cycle
        raise KeyError(i)

    def to_permutation(self) -> Permutation:
        n = sum(len(c) for c in self.cycles)
        images = [0] * n
        for cycle in self.cycles:
            for k, i in enumerate(cycle):
                images[i - 1] = cycle[(k + 1) % len(cycle)]
        return Permutation(tuple(images))

    def __str__(self) -> str:
        return "".join(format_cycle(c) for c in self.cycles)


def format_cycle(cycle: Sequence[int]) -> str:
    return "(" + " ".join(str(i) for i in cycle) + ")"


def parse_permutation(text: str) -> Permutation:
    """Parses `4,6,7,5,1,3,2,9,8`, `4 6 7 ...` or the digit shorthand `467513298` (n <= 9 only)."""
    stripped = text.strip()
    if not stripped:
        raise MalformedInput("empty permutation text")

    if _SEPARATORS.search(stripped):
        tokens = [t for t in _SEPARATORS.split(stripped) if t]
    elif stripped.isdigit():
        if len(stripped) > 9:
            raise MalformedInput(f"digit shorthand is ambiguous beyond 9 elements: {stripped!r}")
        tokens = list(stripped)
    else:
        tokens = [stripped]

    try:
        images = tuple(int(t) for t in tokens)
    except ValueError:
        raise MalformedInput(f"not a list of integers: {text!r}") from None

    return Permutation(images)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def cycles_of_images(images: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * (len(images) + 1)
    result = []
    for start in range(1, len(images) + 1):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = images[i - 1]
        result.append(tuple(cycle))
    return result


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    # scanning starts from the smallest unseen index, so both orderings come for free
    return CycleDecomposition(tuple(cycles_of_images(p.images)))


def cycle_count(p: Permutation) -> int:
    return len(cycles_of_images(p.images))


def is_cycle(p: Permutation) -> bool:
    return p.n >= 2 and cycle_count(p) == 1


def is_derangement(p: Permutation) -> bool:
    return all(v != i for i, v in enumerate(p.images, start=1))


def support(p: Permutation) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(p.images, start=1) if v != i)


def inverse(p: Permutation) -> Permutation:
    result = [0] * p.n
    for i, v in enumerate(p.images, start=1):
        result[v - 1] = i
    return Permutation(tuple(result))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p ∘ q)(i) = p(q(i))."""
    if p.n != q.n:
        raise MalformedInput(f"cannot compose permutations of sizes {p.n} and {q.n}")
    return Permutation(tuple(p.images[v - 1] for v in q.images))


def inversions(p: Permutation) -> int:
    return sum(1 for a, b in itertools.combinations(p.images, 2) if a > b)


def total_displacement(p: Permutation) -> int:
    return sum(abs(v - i) for i, v in enumerate(p.images, start=1))


def dg_gap(p: Permutation) -> int:
    """Slack in the Diaconis-Graham inequality inv + (n - cyc) <= td."""
    return total_displacement(p) - (inversions(p) + p.n - cycle_count(p))
