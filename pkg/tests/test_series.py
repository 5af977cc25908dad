import pytest

from knotperm.counting import expected
from knotperm.counting.series import (
    SERIES_RING,
    U,
    X,
    BivariateSeries,
    catalan_diagonal,
    f_cubic,
    g_cubic,
    monomial,
    schroder,
    schroder_numbers,
    series_F,
    series_G,
)


def test_schroder_numbers():
    assert [schroder(n) for n in range(1, 10)] == [1, 2, 6, 22, 90, 394, 1806, 8558, 41586]
    assert schroder_numbers(3) == (0, 1, 2, 6)


@pytest.mark.parametrize("n", range(2, 12))
def test_schroder_recursion(n):
    assert schroder(n) == schroder(n - 1) + sum(schroder(i) * schroder(n - i) for i in range(1, n))


def test_schroder_starts_at_one():
    with pytest.raises(ValueError):
        schroder(0)


def test_series_arithmetic():
    x = monomial(4, 0, 1)
    assert (1 + x) * (1 - x) == 1 - x * x
    assert (x**5).is_zero()
    assert (x * 3).coefficient(0, 1) == 3
    # 1/(1 - x) truncated: Σ x^m
    assert x.substitute_into([1, 1, 1, 1, 1, 1]).at_u_one() == (1, 1, 1, 1, 1)


def test_series_invariants():
    with pytest.raises(ValueError):
        BivariateSeries(U**2 * X, 4)
    with pytest.raises(ValueError):
        BivariateSeries(X**5, 4)
    with pytest.raises(ValueError):
        BivariateSeries(SERIES_RING.one, -1)
    with pytest.raises(ValueError):
        monomial(2, 0, 0) + monomial(3, 0, 0)
    with pytest.raises(ValueError):
        monomial(2, 0, 0).substitute_into([0, 1])


def test_series_F_coefficients():
    f = series_F(9)
    assert f.coefficient(0, 0) == 1
    assert f.coefficient(1, 5) == 22
    assert f.coefficient(2, 5) == 10
    assert f.at_u_one()[6] == 143
    assert list(f.at_u_one()[1:]) == [expected.UNLINKED_DERANGEMENTS[n] for n in range(1, 10)]


def test_series_F_strata():
    f = series_F(9)
    for k, row in expected.UNLINKED_BY_COMPONENTS.items():
        for n, count in row.items():
            if n <= 9:
                assert f.coefficient(k, n) == count, (k, n)


def test_series_F_cubic_through_degree_20():
    assert f_cubic(series_F(20)).is_zero()


def test_series_G_coefficients():
    g = series_G(9)
    assert list(g.at_u_one()[1:]) == [expected.UNLINKED_WITH_FIXED_POINTS[n] for n in range(1, 10)]
    assert g.x_coefficient(1) == (0, 1)
    assert g.x_coefficient(2) == (0, 1, 1)
    assert g_cubic(g).is_zero()


def test_series_G_small_degrees():
    assert series_G(0).coefficients == ((1,),)
    assert series_G(1).at_u_one() == (1, 1)


def test_negative_degree():
    with pytest.raises(ValueError):
        series_F(-1)
    with pytest.raises(ValueError):
        series_G(-1)


def test_catalan_diagonal():
    assert catalan_diagonal(5) == [1, 2, 5, 14, 42]


def test_u_degree_never_exceeds_x_degree():
    f = series_F(12)
    for n, poly in enumerate(f.coefficients):
        assert len(poly) <= n + 1


def test_series_in_the_polynomial_ring():
    f = series_F(4)
    assert f.poly.ring == SERIES_RING
    assert f.truncate(2).poly == 1 + U * X**2
    assert f.with_coefficient(4, (0, 7)).coefficient(1, 4) == 7
    assert f.with_coefficient(4, (0, 7)).coefficient(2, 4) == 0
    assert (monomial(3, 1, 1) ** 0).poly == SERIES_RING.one
