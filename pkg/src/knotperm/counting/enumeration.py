"""Exhaustive enumeration of cycles, derangements and permutations, split into chunks by σ(1).

A visitor maps the one-line images of each item to a hashable key, or None to skip it; the
summary counts how often each key came back. Visitors run in worker processes when more than
one thread is requested, so they must be picklable (module-level functions or partials of them).
"""

from __future__ import annotations

import collections
import dataclasses
import enum
import itertools
import logging
import multiprocessing
import typing

import tqdm

from knotperm.exceptions import CapExceeded

if typing.TYPE_CHECKING:
    from collections.abc import Callable, Hashable, Iterator

    from knotperm.util.json_lib import JsonObject

logger = logging.getLogger(__name__)

Images: typing.TypeAlias = tuple[int, ...]
Visitor: typing.TypeAlias = "Callable[[Images], Hashable | None]"


class Family(enum.Enum):
    CYCLES = "cycles"
    DERANGEMENTS = "derangements"
    PERMUTATIONS = "permutations"


@dataclasses.dataclass(frozen=True)
class EnumerationSummary:
    family: Family
    n: int
    visited: int
    counts: collections.Counter

    def count(self, key: Hashable) -> int:
        return self.counts[key]

    def total(self) -> int:
        """Items for which the visitor returned a key."""
        return sum(self.counts.values())

    def to_json(self) -> JsonObject:
        return {
            "family": self.family.value,
            "n": self.n,
            "visited": self.visited,
            "total": self.total(),
        }


def _cycles_from(n: int, second: int) -> Iterator[Images]:
    """n-cycles (1 second ...), built by chaining 1 through every ordering of the rest."""
    rest = [v for v in range(2, n + 1) if v != second]
    for ordering in itertools.permutations(rest):
        chain = (1, second, *ordering)
        images = [0] * n
        for k, v in enumerate(chain):
            images[v - 1] = chain[(k + 1) % n]
        yield tuple(images)


def _derangements_from(n: int, first: int) -> Iterator[Images]:
    images = [first] + [0] * (n - 1)
    used = [False] * (n + 1)
    used[first] = True

    def place(position: int) -> Iterator[Images]:
        if position > n:
            yield tuple(images)
            return
        for v in range(1, n + 1):
            if not used[v] and v != position:
                used[v] = True
                images[position - 1] = v
                yield from place(position + 1)
                used[v] = False

    yield from place(2)


def _permutations_from(n: int, first: int) -> Iterator[Images]:
    rest = [v for v in range(1, n + 1) if v != first]
    for ordering in itertools.permutations(rest):
        yield first, *ordering


_GENERATORS = {
    Family.CYCLES: _cycles_from,
    Family.DERANGEMENTS: _derangements_from,
    Family.PERMUTATIONS: _permutations_from,
}


def _chunk_heads(family: Family, n: int) -> list[int]:
    if family is Family.PERMUTATIONS:
        return list(range(1, n + 1))
    return list(range(2, n + 1))


def _run_chunk(family: Family, n: int, head: int, visitor: Visitor) -> tuple[int, collections.Counter]:
    visited = 0
    counts: collections.Counter = collections.Counter()
    for images in _GENERATORS[family](n, head):
        visited += 1
        key = visitor(images)
        if key is not None:
            counts[key] += 1
    return visited, counts


def _run_chunk_star(args: tuple[Family, int, int, Visitor]) -> tuple[int, collections.Counter]:
    return _run_chunk(*args)


def enumerate_family(
    family: Family,
    n: int,
    visitor: Visitor,
    *,
    cap: int,
    threads: int = 1,
    progress: bool = False,
) -> EnumerationSummary:
    if n > cap:
        raise CapExceeded(n, cap, family.value)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    tasks = [(family, n, head, visitor) for head in _chunk_heads(family, n)]
    logger.debug("enumerating %s of size %d in %d chunks on %d workers", family.value, n, len(tasks), threads)

    visited = 0
    counts: collections.Counter = collections.Counter()
    if threads > 1 and len(tasks) > 1:
        context = multiprocessing.get_context("spawn")
        with context.Pool(min(threads, len(tasks))) as pool:
            results = pool.imap_unordered(_run_chunk_star, tasks)
            for chunk_visited, chunk_counts in tqdm.tqdm(results, total=len(tasks), disable=not progress):
                visited += chunk_visited
                counts.update(chunk_counts)
    else:
        for task in tqdm.tqdm(tasks, disable=not progress):
            chunk_visited, chunk_counts = _run_chunk_star(task)
            visited += chunk_visited
            counts.update(chunk_counts)

    logger.debug("visited %d %s, %d keyed", visited, family.value, sum(counts.values()))
    return EnumerationSummary(family, n, visited, counts)


def enumerate_cycles(
    n: int, visitor: Visitor, *, cap: int = 11, threads: int = 1, progress: bool = False
) -> EnumerationSummary:
    if n < 2:
        raise ValueError(f"cycles of length {n} have no diagram, need n >= 2")
    return enumerate_family(Family.CYCLES, n, visitor, cap=cap, threads=threads, progress=progress)


def enumerate_derangements(
    n: int, visitor: Visitor, *, cap: int = 10, threads: int = 1, progress: bool = False
) -> EnumerationSummary:
    return enumerate_family(Family.DERANGEMENTS, n, visitor, cap=cap, threads=threads, progress=progress)


def enumerate_permutations(
    n: int, visitor: Visitor, *, cap: int = 8, threads: int = 1, progress: bool = False
) -> EnumerationSummary:
    return enumerate_family(Family.PERMUTATIONS, n, visitor, cap=cap, threads=threads, progress=progress)


def visit_all(images: Images) -> bool:
    """Keys every item the same way; for counting what an enumeration visits."""
    return True
