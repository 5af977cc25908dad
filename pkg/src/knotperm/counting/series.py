"""Truncated power series in x whose coefficients are integer polynomials in u.

Series are elements of the sparse ring ZZ[u, x], kept modulo x^(degree + 1) with sympy's
`ring_series` helpers. Everything here is exact.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import typing

from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul, rs_pow, rs_trunc
from sympy.polys.rings import ring

from knotperm.exceptions import InternalInconsistency, NoSeriesRoot

if typing.TYPE_CHECKING:
    from collections.abc import Sequence

    from sympy.polys.rings import PolyElement

logger = logging.getLogger(__name__)

Poly: typing.TypeAlias = tuple[int, ...]

SERIES_RING, U, X = ring("u,x", ZZ)


def _trim(coefficients: Sequence[int]) -> Poly:
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return tuple(coefficients[:end])


@dataclasses.dataclass(frozen=True)
class BivariateSeries:
    """`poly` modulo x^(degree + 1); u never appears to a higher power than x in any term."""

    poly: PolyElement
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"degree must be non-negative, got {self.degree}")
        for k, n in self.poly.monoms():
            if n > self.degree:
                raise ValueError(f"x^{n} is past the truncation degree {self.degree}")
            if k > n:
                raise ValueError(f"u^{k} appears next to x^{n}")

    @classmethod
    def from_terms(cls, degree: int, terms: dict[tuple[int, int], int]) -> typing.Self:
        """Builds a series from {(u power, x power): coefficient}; terms past `degree` are dropped."""
        poly = SERIES_RING.zero
        for (k, n), c in terms.items():
            if n <= degree:
                poly += c * U**k * X**n
        return cls(poly, degree)

    @classmethod
    def constant(cls, degree: int, value: int = 1) -> typing.Self:
        return cls(SERIES_RING(value), degree)

    @property
    def coefficients(self) -> tuple[Poly, ...]:
        """The u-polynomial of every x^n, lowest u power first, n = 0..degree."""
        rows = [[0] * (n + 1) for n in range(self.degree + 1)]
        for (k, n), c in self.poly.terms():
            rows[n][k] = int(c)
        return tuple(_trim(row) for row in rows)

    def coefficient(self, k: int, n: int) -> int:
        """[u^k x^n]."""
        if n > self.degree:
            raise IndexError(f"x^{n} is past the truncation degree {self.degree}")
        return int(self.poly.get((k, n), 0)) if k >= 0 else 0

    def x_coefficient(self, n: int) -> Poly:
        return self.coefficients[n]

    def at_u_one(self) -> tuple[int, ...]:
        return tuple(sum(poly) for poly in self.coefficients)

    def truncate(self, degree: int) -> BivariateSeries:
        if degree > self.degree:
            raise ValueError(f"cannot extend a series truncated at {self.degree} to {degree}")
        return BivariateSeries(rs_trunc(self.poly, X, degree + 1), degree)

    def with_coefficient(self, n: int, poly: Poly) -> BivariateSeries:
        """The same series with the u-polynomial of x^n replaced."""
        others = self.poly - (rs_trunc(self.poly, X, n + 1) - rs_trunc(self.poly, X, n))
        for k, c in enumerate(poly):
            others += c * U**k * X**n
        return BivariateSeries(others, self.degree)

    def is_zero(self) -> bool:
        return not self.poly

    def _other(self, other: BivariateSeries | int) -> PolyElement:
        if isinstance(other, int):
            return SERIES_RING(other)
        if other.degree != self.degree:
            raise ValueError(f"truncation degrees differ: {self.degree} and {other.degree}")
        return other.poly

    def __add__(self, other: BivariateSeries | int) -> BivariateSeries:
        return BivariateSeries(self.poly + self._other(other), self.degree)

    __radd__ = __add__

    def __neg__(self) -> BivariateSeries:
        return BivariateSeries(-self.poly, self.degree)

    def __sub__(self, other: BivariateSeries | int) -> BivariateSeries:
        return BivariateSeries(self.poly - self._other(other), self.degree)

    def __rsub__(self, other: int) -> BivariateSeries:
        return BivariateSeries(self._other(other) - self.poly, self.degree)

    def __mul__(self, other: BivariateSeries | int) -> BivariateSeries:
        return BivariateSeries(rs_mul(self.poly, self._other(other), X, self.degree + 1), self.degree)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BivariateSeries:
        if exponent == 0:
            return BivariateSeries.constant(self.degree)
        return BivariateSeries(rs_pow(self.poly, exponent, X, self.degree + 1), self.degree)

    def substitute_into(self, outer: Sequence[int]) -> BivariateSeries:
        """Σ outer[m] · self^m. `self` must have no constant term, so only m up to the degree matter."""
        if self.x_coefficient(0):
            raise ValueError("cannot substitute a series with a constant term")
        prec = self.degree + 1
        result = SERIES_RING(outer[0] if outer else 0)
        power = SERIES_RING.one
        for m in range(1, min(len(outer), prec)):
            power = rs_mul(power, self.poly, X, prec)
            if outer[m]:
                result += outer[m] * power
        return BivariateSeries(result, self.degree)

    def __str__(self) -> str:
        return str(self.poly)


def monomial(degree: int, u_power: int, x_power: int, value: int = 1) -> BivariateSeries:
    return BivariateSeries.from_terms(degree, {(u_power, x_power): value})


@functools.cache
def _schroder_prefix(count: int) -> tuple[int, ...]:
    values = [0, 1]
    for n in range(2, count + 1):
        values.append(values[n - 1] + sum(values[i] * values[n - i] for i in range(1, n)))
    return tuple(values[: count + 1])


def schroder_numbers(count: int) -> tuple[int, ...]:
    """S_0..S_count with S_0 = 0, the coefficients of S(x) = x + x·S(x) + S(x)²."""
    return _schroder_prefix(max(count, 1))[: count + 1]


def schroder(n: int) -> int:
    if n < 1:
        raise ValueError(f"Schröder numbers start at n=1, got {n}")
    return schroder_numbers(n)[n]


def f_cubic(f: BivariateSeries) -> BivariateSeries:
    """1 + (ux - 2)F + (1 - ux - ux²)F² + (ux² + u²x³)F³."""
    d = f.degree
    u_x = monomial(d, 1, 1)
    u_x2 = monomial(d, 1, 2)
    f2 = f * f
    return 1 + (u_x - 2) * f + (1 - u_x - u_x2) * f2 + (u_x2 + monomial(d, 2, 3)) * f2 * f


def series_F(degree: int) -> BivariateSeries:
    """Generating function of unlinked derangements, u marking components and x the length.

    Iterates F ← 1 + u·x·F·S(x·F) from F = 1. Every pass fixes at least one more x-degree.
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    schroder_coefficients = schroder_numbers(degree)
    x = monomial(degree, 0, 1)
    u_x = monomial(degree, 1, 1)

    f = BivariateSeries.constant(degree)
    for iteration in range(1, degree + 3):
        following = 1 + u_x * f * (x * f).substitute_into(schroder_coefficients)
        if following == f:
            logger.debug("F stabilised to degree %d after %d iterations", degree, iteration)
            break
        f = following
    else:
        raise InternalInconsistency(f"F did not stabilise to degree {degree}")

    if not f_cubic(f).is_zero():
        raise InternalInconsistency(f"F fails its cubic identity below degree {degree + 1}")
    return f


def g_cubic(g: BivariateSeries) -> BivariateSeries:
    """ux²G³ + (2u²x² - ux² - 3ux + 1)G² + (3ux - 2)G + 1."""
    d = g.degree
    u_x = monomial(d, 1, 1)
    u_x2 = monomial(d, 1, 2)
    g2 = g * g
    return u_x2 * g2 * g + (monomial(d, 2, 2, 2) - u_x2 - 3 * u_x + 1) * g2 + (3 * u_x - 2) * g + 1


def series_G(degree: int) -> BivariateSeries:
    """Generating function of unlinked permutations with each fixed point counted as a component.

    The cubic has a double root at x = 0, so the x^n coefficient is read off the x^(n+1) equation,
    where it appears with factor -u once [x^1]G = u is fixed.
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    if degree == 0:
        return BivariateSeries.constant(0)

    working = degree + 1
    g = BivariateSeries.from_terms(working, {(0, 0): 1, (1, 1): 1})
    for n in range(2, degree + 1):
        residue = g_cubic(g).x_coefficient(n + 1)
        if residue and residue[0] != 0:
            raise NoSeriesRoot(f"x^{n + 1} equation of G is not divisible by u: {residue}")
        g = g.with_coefficient(n, residue[1:])

    result = g.truncate(degree)
    if not g_cubic(result).is_zero():
        raise NoSeriesRoot(f"G fails its cubic identity below degree {degree + 1}")
    return result


def catalan_diagonal(count: int) -> list[int]:
    """[u^n x^(2n)] F for n = 1..count: unlinked derangements made only of 2-cycles."""
    f = series_F(2 * count)
    return [f.coefficient(n, 2 * n) for n in range(1, count + 1)]
