import itertools

import pytest

from knotperm.diagram import c_pairs, ll_indices, ur_indices
from knotperm.permutation import Permutation, cycles_of_images, parse_permutation
from knotperm.seifert import point_in_polygon, seifert_circles


def test_point_in_polygon():
    square = [(1, 1), (1, 3), (3, 3), (3, 1)]
    assert point_in_polygon((2.5, 2.5), square)
    assert not point_in_polygon((3.5, 2.5), square)
    assert not point_in_polygon((0.5, 0.5), square)


def test_single_crossingless_cycle():
    decomposition = seifert_circles(Permutation((2, 1)))
    assert len(decomposition) == 1
    circle = decomposition.circles[0]
    assert circle.ur_index == 2
    assert circle.ll_index == 1
    assert set(circle.vertices) == {(1, 1), (1, 2), (2, 2), (2, 1)}
    assert decomposition.maximal_circles() == [0]


@pytest.mark.parametrize("text", ["864275193", "732541698", "467513298", "3412", "246315", "345612"])
def test_one_circle_per_corner(text):
    p = parse_permutation(text)
    decomposition = seifert_circles(p)
    assert len(decomposition) == len(ur_indices(p))
    assert sorted(c.ur_index for c in decomposition.circles) == sorted(ur_indices(p))
    assert sorted(c.ll_index for c in decomposition.circles) == sorted(ll_indices(p))


def test_unknot_example_circles():
    p = parse_permutation("864275193")
    decomposition = seifert_circles(p)
    assert len(decomposition) == 4
    assert len(decomposition.maximal_circles()) == 1
    assert set(decomposition.membership) == set(c_pairs(p).index_pairs())
    associated = set().union(*(decomposition.associated_crossings(k) for k in range(len(decomposition))))
    assert associated == set(c_pairs(p).index_pairs())


def test_crossing_joins_two_circles():
    p = parse_permutation("864275193")
    decomposition = seifert_circles(p)
    for first, second in decomposition.membership.values():
        assert first != second


def test_nested_unlink():
    decomposition = seifert_circles(parse_permutation("732541698"))
    outer = next(k for k, c in enumerate(decomposition.circles) if c.ur_index == 7)
    inner = next(k for k, c in enumerate(decomposition.circles) if c.ur_index == 3)
    assert decomposition.encloses(outer, inner)
    assert not decomposition.encloses(inner, outer)
    # (1 7 6) and (8 9) sit side by side
    assert len(decomposition.maximal_circles()) == 2


def test_fixed_points_contribute_nothing():
    assert len(seifert_circles(Permutation((2, 1, 3)))) == 1


@pytest.mark.parametrize("n", range(5, 8))
def test_circle_with_one_associated_crossing_is_maximal(n):
    for images in itertools.permutations(range(1, n + 1)):
        if min(abs(v - i) for i, v in enumerate(images, start=1)) < 2 or len(cycles_of_images(images)) != 1:
            continue
        decomposition = seifert_circles(Permutation(images))
        maximal = decomposition.maximal_circles()
        for k in range(len(decomposition)):
            if len(decomposition.associated_crossings(k)) == 1:
                assert k in maximal, images
