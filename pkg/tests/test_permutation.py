import itertools

import pytest

from knotperm.exceptions import MalformedInput, NotABijection
from knotperm.permutation import (
    CycleDecomposition,
    Permutation,
    compose,
    cycle_count,
    cycle_decomposition,
    dg_gap,
    identity,
    inverse,
    inversions,
    is_cycle,
    is_derangement,
    parse_permutation,
    support,
    total_displacement,
)


@pytest.mark.parametrize("text", ["4,6,7,5,1,3,2,9,8", "4 6 7 5 1 3 2 9 8", "467513298", " 4, 6,7 5,1,3,2,9,8 "])
def test_parse_permutation_formats(text):
    assert parse_permutation(text) == Permutation((4, 6, 7, 5, 1, 3, 2, 9, 8))


def test_parse_permutation_beyond_nine():
    p = parse_permutation("2,3,4,5,6,7,8,9,10,1")
    assert p.n == 10
    assert is_cycle(p)


@pytest.mark.parametrize(
    ("text", "error"),
    [
        ("", MalformedInput),
        ("1,a", MalformedInput),
        ("12345678910", MalformedInput),
        ("1,1", NotABijection),
        ("0,1", NotABijection),
        ("1,3", NotABijection),
    ],
)
def test_parse_permutation_errors(text, error):
    with pytest.raises(error):
        parse_permutation(text)


def test_input_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse_permutation("2,2")


def test_cycle_decomposition():
    p = parse_permutation("467513298")
    decomposition = cycle_decomposition(p)

    assert decomposition.cycles == ((1, 4, 5), (2, 6, 3, 7), (8, 9))
    assert str(decomposition) == "(1 4 5)(2 6 3 7)(8 9)"
    assert decomposition.to_permutation() == p
    assert decomposition.cycle_of(7) == (2, 6, 3, 7)
    assert cycle_count(p) == 3


def test_cycle_decomposition_keeps_fixed_points():
    decomposition = cycle_decomposition(Permutation((2, 1, 3)))
    assert decomposition.cycles == ((1, 2), (3,))
    assert decomposition.nontrivial() == ((1, 2),)
    assert CycleDecomposition(((1, 2), (3,))).to_permutation() == Permutation((2, 1, 3))


def test_inverse_and_compose():
    p = parse_permutation("864275193")
    assert compose(p, inverse(p)) == identity(9)
    assert compose(inverse(p), p) == identity(9)
    assert compose(Permutation((2, 3, 1)), Permutation((2, 1, 3))) == Permutation((3, 2, 1))


def test_compose_size_mismatch():
    with pytest.raises(MalformedInput):
        compose(identity(2), identity(3))


def test_support_and_derangement():
    assert support(Permutation((2, 1, 3))) == {1, 2}
    assert not is_derangement(Permutation((2, 1, 3)))
    assert is_derangement(Permutation((2, 1)))
    assert not is_cycle(Permutation((1,)))


@pytest.mark.parametrize(
    ("text", "inv", "td", "gap"),
    [
        ("21", 1, 2, 0),
        ("231", 2, 4, 0),
        ("3412", 4, 8, 2),
        ("1", 0, 0, 0),
    ],
)
def test_diaconis_graham_statistics(text, inv, td, gap):
    p = parse_permutation(text)
    assert inversions(p) == inv
    assert total_displacement(p) == td
    assert dg_gap(p) == gap


def test_one_line_and_json():
    p = Permutation.of([2, 3, 1])
    assert p.one_line() == "2,3,1"
    assert p.one_line(" ") == "2 3 1"
    assert p.to_json() == [2, 3, 1]
    assert p(1) == 2
    assert list(p) == [2, 3, 1]


def test_worked_examples():
    assert inverse(parse_permutation("246315")) == parse_permutation("514263")
    assert is_derangement(parse_permutation("732541698"))
    assert not is_derangement(parse_permutation("213"))


@pytest.mark.parametrize("n", range(1, 8))
def test_statistics_of_every_permutation(n):
    for images in itertools.permutations(range(1, n + 1)):
        p = Permutation(images)
        assert dg_gap(p) >= 0, p
        assert total_displacement(p) % 2 == 0, p
        assert inversions(p) == inversions(inverse(p)), p
        assert inverse(inverse(p)) == p


@pytest.mark.parametrize("n", range(1, 7))
def test_cycle_decomposition_recomposes(n):
    for images in itertools.permutations(range(1, n + 1)):
        rebuilt = [0] * n
        for cycle in cycle_decomposition(Permutation(images)).cycles:
            for k, i in enumerate(cycle):
                rebuilt[i - 1] = cycle[(k + 1) % len(cycle)]
        assert tuple(rebuilt) == images
