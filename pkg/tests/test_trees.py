import pytest
import sympy

from knotperm.counting.series import schroder
from knotperm.exceptions import SlotOutOfRange, TreeSyntaxError
from knotperm.permutation import Permutation, inverse, is_cycle
from knotperm.trees import (
    Sign,
    SignedTree,
    all_trees,
    canonical_form,
    class_representatives,
    empty_slots,
    equivalent,
    insert_leaf,
    insert_node,
    left_normal_form,
    negate,
    parse_tree,
    rotation_closure,
    rotations,
    shift,
    tree_to_cycle,
)

EXAMPLE = "(+(+(. .) -(. .)) -(. .))"


def test_parse_and_print():
    tree = parse_tree(EXAMPLE)
    assert str(tree) == EXAMPLE
    assert tree.node_count() == 5
    assert parse_tree("( + ( . . )\n . )") == parse_tree("(+(. .) .)")
    assert str(SignedTree()) == "(. .)"


@pytest.mark.parametrize(("text", "position"), [("(+ .)", 3), ("(. .", 4), ("(. .))", 5), ("", 0), ("(x .)", 1)])
def test_parse_errors(text, position):
    with pytest.raises(TreeSyntaxError) as error:
        parse_tree(text)
    assert error.value.position == position


def test_shift():
    assert [shift(3, k) for k in (1, 2, 3, 4)] == [1, 2, 4, 5]


@pytest.mark.parametrize(
    ("slot", "sign", "expected"),
    [(1, Sign.PLUS, (2, 3, 1)), (2, Sign.PLUS, (2, 3, 1)), (1, Sign.MINUS, (3, 1, 2)), (2, Sign.MINUS, (3, 1, 2))],
)
def test_insert_node(slot, sign, expected):
    assert insert_node(Permutation((2, 1)), slot, sign) == Permutation(expected)


def test_insert_node_slot_range():
    for slot in (0, 3):
        with pytest.raises(SlotOutOfRange):
            insert_node(Permutation((2, 1)), slot, Sign.PLUS)


def test_worked_example():
    trace = []
    cycle = tree_to_cycle(parse_tree(EXAMPLE), trace=trace)
    assert cycle == Permutation((2, 4, 6, 3, 1, 5))
    assert [(step.sign, step.slot) for step in trace] == [
        (Sign.PLUS, 1),
        (Sign.PLUS, 1),
        (Sign.MINUS, 3),
        (Sign.MINUS, 5),
    ]
    assert [step.cycle.one_line("") for step in trace] == ["231", "2341", "24531", "246315"]


def test_root_only_tree():
    assert tree_to_cycle(SignedTree()) == Permutation((2, 1))


def test_insertion_order_does_not_matter():
    tree = parse_tree(EXAMPLE)
    breadth_first = [(0,), (1,), (0, 0), (0, 1)]
    assert tree_to_cycle(tree, breadth_first) == tree_to_cycle(tree)


def test_insertion_order_must_place_parents_first():
    with pytest.raises(ValueError):
        tree_to_cycle(parse_tree(EXAMPLE), [(0, 0), (0,), (0, 1), (1,)])


def test_insert_leaf_matches_insert_node():
    tree = parse_tree(EXAMPLE)
    cycle = tree_to_cycle(tree)
    assert len(empty_slots(tree)) == tree.node_count() + 1
    for slot in range(1, len(empty_slots(tree)) + 1):
        for sign in Sign:
            assert tree_to_cycle(insert_leaf(tree, slot, sign)) == insert_node(cycle, slot, sign)


def test_insert_leaf_slot_range():
    with pytest.raises(SlotOutOfRange):
        insert_leaf(SignedTree(), 3, Sign.PLUS)


def test_rotation_closure_of_example():
    tree = parse_tree(EXAMPLE)
    closure = rotation_closure(tree)
    assert len(closure) == 7
    assert {tree_to_cycle(t) for t in closure} == {tree_to_cycle(tree)}
    assert str(canonical_form(tree)) == EXAMPLE
    assert str(left_normal_form(tree)) == "(-(+(+(. .) -(. .)) .) .)"
    assert left_normal_form(tree) in closure


def test_rotation_at_root_moves_sign():
    tree = parse_tree("(+(. .) .)")
    assert [str(t) for t in rotations(tree)] == ["(. +(. .))"]


def test_rotation_needs_matching_signs_below_root():
    assert parse_tree("(+(+(. .) .) .)") in rotation_closure(parse_tree("(+(. +(. .)) .)"))
    assert not equivalent(parse_tree("(+(-(. .) .) .)"), parse_tree("(+(. -(. .)) .)"))


def test_negate_inverts_cycle():
    tree = parse_tree(EXAMPLE)
    assert tree_to_cycle(negate(tree)) == inverse(tree_to_cycle(tree))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_class_counts(k):
    representatives = list(class_representatives(k))
    assert len(representatives) == schroder(k)
    assert len(set(map(canonical_form, representatives))) == len(representatives)
    assert sum(1 for _ in all_trees(k)) == sympy.catalan(k) * 2 ** (k - 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_bijection_onto_unknotted_cycles(k):
    cycles = {tree_to_cycle(t) for t in class_representatives(k)}
    assert len(cycles) == schroder(k)
    assert all(is_cycle(c) and c.n == k + 1 for c in cycles)


def test_left_normal_forms_are_fixed():
    for tree in class_representatives(4):
        assert left_normal_form(tree) == tree
