import itertools
import random

import pytest

from knotperm.counting.series import schroder
from knotperm.decider import (
    ComponentBlocks,
    Kink,
    Status,
    Verdict,
    collapse_kink,
    collapse_sequence,
    component_blocks,
    decide_unknot,
    find_kinks,
    is_unknotted_cycle,
    is_unlinked,
    rebuild_tree,
    relabel_to_dense,
    unlink_components,
)
from knotperm.exceptions import (
    ComponentsCross,
    HasFixedPoint,
    NotACycle,
    NotAKink,
    SupportNotInvariant,
    TooSmall,
)
from knotperm.permutation import Permutation, cycles_of_images, parse_permutation
from knotperm.diagram import inter_component_crossings
from knotperm.trees import Sign, canonical_form, insert_node, parse_tree, tree_to_cycle


def test_find_kinks():
    assert find_kinks(Permutation((2, 3, 1))) == [Kink(1, Sign.PLUS), Kink(2, Sign.PLUS)]
    assert find_kinks(Permutation((3, 1, 2))) == [Kink(2, Sign.MINUS), Kink(3, Sign.MINUS)]
    assert find_kinks(parse_permutation("345612")) == []


def test_kink_slot():
    assert Kink(4, Sign.PLUS).slot == 4
    assert Kink(4, Sign.MINUS).slot == 3


def test_collapse_inverts_insertion():
    assert collapse_kink(parse_permutation("24531"), Kink(4, Sign.MINUS)) == parse_permutation("2341")
    assert collapse_kink(parse_permutation("231"), Kink(1, Sign.PLUS)) == Permutation((2, 1))


def test_collapse_errors():
    with pytest.raises(NotAKink):
        collapse_kink(parse_permutation("231"), Kink(3, Sign.MINUS))
    with pytest.raises(NotAKink):
        collapse_kink(parse_permutation("231"), Kink(1, Sign.MINUS))
    with pytest.raises(TooSmall):
        collapse_kink(Permutation((2, 1)), Kink(1, Sign.PLUS))


def test_decide_worked_example():
    p = parse_permutation("864275193")
    verdict = decide_unknot(p)
    assert verdict.status is Status.UNKNOT
    assert verdict.components == 1
    assert tree_to_cycle(verdict.tree) == p
    assert canonical_form(verdict.tree) == verdict.tree


def test_collapse_sequence_of_worked_example():
    collapses, remainder = collapse_sequence(parse_permutation("864275193"))
    assert remainder == Permutation((2, 1))
    assert [str(k) for k in collapses] == ["(3,+)", "(3,-)", "(4,-)", "(2,+)", "(2,+)", "(2,-)", "(1,+)"]
    assert tree_to_cycle(rebuild_tree(collapses)) == parse_permutation("864275193")


def test_decide_recovers_tree_class():
    tree = parse_tree("(+(+(. .) -(. .)) -(. .))")
    verdict = decide_unknot(tree_to_cycle(tree))
    assert verdict.tree == canonical_form(tree)


def test_decide_knotted():
    verdict = decide_unknot(parse_permutation("34512"))
    assert verdict.status is Status.KNOTTED
    assert verdict.reduced == parse_permutation("34512")
    assert not verdict.positive


def test_decide_needs_cycle():
    for text in ("3412", "345612", "1", "213"):
        with pytest.raises(NotACycle):
            decide_unknot(parse_permutation(text))


def test_any_kink_order_reaches_21():
    p = parse_permutation("864275193")
    collapses, remainder = collapse_sequence(p, lambda kinks: kinks[-1])
    assert remainder == Permutation((2, 1))
    assert decide_unknot(p, lambda kinks: kinks[-1]).tree == decide_unknot(p).tree


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_fast_path_agrees(n):
    unknots = 0
    for rest in itertools.permutations(range(2, n + 1)):
        chain = (1, *rest)
        images = [0] * n
        for k, v in enumerate(chain):
            images[v - 1] = chain[(k + 1) % n]
        p = Permutation(tuple(images))
        fast = is_unknotted_cycle(p.images)
        assert fast == (decide_unknot(p).status is Status.UNKNOT)
        unknots += fast
    assert unknots == schroder(n - 1)


def test_is_unlinked_crossing_components():
    verdict = is_unlinked(parse_permutation("3412"))
    assert verdict.status is Status.LINKED
    assert verdict.crossing == (1, 2)
    assert verdict.cycles == ((1, 3), (2, 4))
    assert "cross" in verdict.describe_witness()


def test_is_unlinked_knotted_component():
    # a kink-free 5-cycle next to a 2-cycle that sits outside it
    verdict = is_unlinked(parse_permutation("3,4,5,1,2,7,6"))
    assert verdict.status is Status.LINKED
    assert verdict.crossing is None
    assert verdict.cycles == ((1, 3, 5, 2, 4),)
    assert "knotted" in verdict.describe_witness()


def test_is_unlinked_unlink():
    verdict = is_unlinked(parse_permutation("732541698"))
    assert verdict.status is Status.UNLINK
    assert verdict.components == 4
    assert verdict.label == "unlink(4)"


def test_is_unlinked_fixed_points():
    with pytest.raises(HasFixedPoint):
        is_unlinked(Permutation((2, 1, 3)))
    verdict = is_unlinked(Permutation((2, 1, 3)), count_fixed_points=True)
    assert verdict.label == "unlink(2)"
    assert is_unlinked(Permutation((1, 2, 3)), count_fixed_points=True).components == 3


@pytest.mark.parametrize("text", ["21", "3412", "732541698", "864275193", "34512", "345612"])
def test_unlink_components_matches_verdict(text):
    p = parse_permutation(text)
    verdict = is_unlinked(p)
    expected = verdict.components if verdict.status is Status.UNLINK else None
    assert unlink_components(p.images, count_fixed_points=False) == expected


def test_relabel_to_dense():
    p = parse_permutation("732541698")
    assert relabel_to_dense(p, {1, 6, 7}) == Permutation((3, 1, 2))
    assert relabel_to_dense(p, {8, 9}) == Permutation((2, 1))
    with pytest.raises(SupportNotInvariant):
        relabel_to_dense(p, {1, 2})


def test_component_blocks():
    blocks = component_blocks(parse_permutation("732541698"))
    assert blocks == ComponentBlocks((1, 7, 6), (((2, 3), (4, 5)), (), ((8, 9),)))
    with pytest.raises(ComponentsCross):
        component_blocks(parse_permutation("3412"))


@pytest.mark.parametrize("text", ["21", "864275193", "34512", "345612", "3412", "732541698", "3,4,5,1,2,7,6"])
def test_verdict_json_round_trip(text):
    p = parse_permutation(text)
    verdict = decide_unknot(p) if len(cycles_of_images(p.images)) == 1 else is_unlinked(p)
    assert Verdict.from_json(verdict.to_json()) == verdict


def _cycles(n):
    for images in itertools.permutations(range(1, n + 1)):
        if len(cycles_of_images(images)) == 1:
            yield Permutation(images)


@pytest.mark.parametrize("n", range(3, 8))
def test_insertion_undoes_every_collapse(n):
    for p in _cycles(n):
        for kink in find_kinks(p):
            assert insert_node(collapse_kink(p, kink), kink.slot, kink.sign) == p, (p, kink)


@pytest.mark.parametrize("n", range(2, 8))
def test_collapse_order_does_not_change_the_verdict(n):
    rng = random.Random(n)
    for p in _cycles(n):
        first = decide_unknot(p)
        for choose in (lambda kinks: kinks[-1], rng.choice):
            other = decide_unknot(p, choose=choose)
            assert (other.status, other.tree) == (first.status, first.tree), p


@pytest.mark.parametrize("n", range(2, 8))
def test_component_blocks_of_every_noncrossing_derangement(n):
    for images in itertools.permutations(range(1, n + 1)):
        if any(v == i for i, v in enumerate(images, start=1)):
            continue
        p = Permutation(images)
        if any(inter_component_crossings(p).values()):
            continue

        blocks = component_blocks(p)
        cycles = cycles_of_images(images)
        assert blocks.first == cycles[0]
        bounds = sorted(blocks.first) + [n + 1]
        placed = []
        for gap, members in enumerate(blocks.gaps):
            for cycle in members:
                assert all(bounds[gap] < v < bounds[gap + 1] for v in cycle), (p, cycle)
                placed.append(cycle)
        assert sorted(placed) == sorted(cycles[1:])
