from __future__ import annotations

import collections
import dataclasses
import enum
import functools
import typing

from knotperm.exceptions import SlotOutOfRange, TreeSyntaxError
from knotperm.permutation import Permutation

if typing.TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

Path: typing.TypeAlias = tuple[int, ...]
"""Steps from the root, 0 for a left child and 1 for a right child."""

LEFT = 0
RIGHT = 1


class Sign(enum.IntEnum):
    PLUS = 1
    MINUS = -1

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    @classmethod
    def from_symbol(cls, symbol: str) -> Sign:
        return cls.PLUS if symbol == "+" else cls.MINUS

    def __neg__(self) -> Sign:
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


@dataclasses.dataclass(frozen=True)
class Node:
    sign: Sign | None
    left: Node | None = None
    right: Node | None = None

    def child(self, side: int) -> Node | None:
        return self.left if side == LEFT else self.right

    def with_child(self, side: int, child: Node | None) -> Node:
        if side == LEFT:
            return Node(self.sign, child, self.right)
        return Node(self.sign, self.left, child)

    def size(self) -> int:
        return 1 + (self.left.size() if self.left else 0) + (self.right.size() if self.right else 0)


def _node_text(node: Node | None) -> str:
    if node is None:
        return "."
    assert node.sign is not None
    return f"{node.sign.symbol}({_node_text(node.left)} {_node_text(node.right)})"


@dataclasses.dataclass(frozen=True)
class SignedTree:
    """A rooted binary tree whose root is unsigned and whose other nodes carry a sign."""

    root: Node = Node(None)

    def __post_init__(self) -> None:
        if self.root.sign is not None:
            raise ValueError("the root of a signed tree carries no sign")

    def __str__(self) -> str:
        return f"({_node_text(self.root.left)} {_node_text(self.root.right)})"

    def node_count(self) -> int:
        return self.root.size()

    def node_at(self, path: Path) -> Node:
        node = self.root
        for side in path:
            child = node.child(side)
            if child is None:
                raise KeyError(path)
            node = child
        return node

    def preorder(self) -> list[Path]:
        """Paths of the signed nodes, depth first, parent before children, left before right."""
        result: list[Path] = []

        def visit(node: Node, path: Path) -> None:
            for side in (LEFT, RIGHT):
                child = node.child(side)
                if child is not None:
                    result.append((*path, side))
                    visit(child, (*path, side))

        visit(self.root, ())
        return result


class _TreeParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = [(k, c) for k, c in enumerate(text) if not c.isspace()]
        self.position = 0

    def _fail(self, message: str) -> typing.NoReturn:
        offset = self.tokens[self.position][0] if self.position < len(self.tokens) else len(self.text)
        raise TreeSyntaxError(self.text, offset, message)

    def _peek(self) -> str | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position][1]
        return None

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            self._fail(f"expected {char!r}")
        self.position += 1

    def _child(self) -> Node | None:
        match self._peek():
            case ".":
                self.position += 1
                return None
            case "+" | "-" as symbol:
                self.position += 1
                left, right = self._pair()
                return Node(Sign.from_symbol(symbol), left, right)
            case _:
                self._fail("expected '.', '+' or '-'")

    def _pair(self) -> tuple[Node | None, Node | None]:
        self._expect("(")
        left = self._child()
        right = self._child()
        self._expect(")")
        return left, right

    def parse(self) -> SignedTree:
        left, right = self._pair()
        if self._peek() is not None:
            self._fail("trailing input")
        return SignedTree(Node(None, left, right))


def parse_tree(text: str) -> SignedTree:
    """Parses `(L R)` where each child is `.` or a sign followed by `(L R)`."""
    return _TreeParser(text).parse()


def shift(m: int, k: int) -> int:
    """ξ_m: values from m upwards move up by one."""
    return k if k < m else k + 1


def insert_node(p: Permutation, slot: int, sign: Sign) -> Permutation:
    """The change to the cycle when a leaf of the given sign lands in relative position `slot`.

    Positive: value slot+1 goes in front of position `slot`. Negative: value `slot` goes right
    after position `slot`. Older values are shifted out of the way.
    """
    images = p.images
    if not 1 <= slot <= len(images):
        raise SlotOutOfRange(f"slot {slot} is outside 1..{len(images)}")

    if sign is Sign.PLUS:
        m = slot + 1
        head, tail = images[: slot - 1], images[slot - 1 :]
    else:
        m = slot
        head, tail = images[:slot], images[slot:]
    return Permutation((*(shift(m, s) for s in head), m, *(shift(m, s) for s in tail)))


def _slot_rank(present: set[Path], target: Path) -> int:
    """In-order rank, among the empty child positions of the nodes in `present`, of `target`."""
    rank = 0

    def visit(path: Path) -> bool:
        nonlocal rank
        for side in (LEFT, RIGHT):
            child = (*path, side)
            if child in present:
                if visit(child):
                    return True
            else:
                rank += 1
                if child == target:
                    return True
        return False

    if not visit(()):
        raise KeyError(target)
    return rank


class TraceStep(typing.NamedTuple):
    sign: Sign
    slot: int
    cycle: Permutation


_TRIVIAL_CYCLE = Permutation((2, 1))


def tree_to_cycle(
    t: SignedTree,
    order: Sequence[Path] | None = None,
    trace: list[TraceStep] | None = None,
) -> Permutation:
    """Builds the unknotted cycle of a tree, starting from 21 and inserting one node at a time.

    `order` defaults to depth-first preorder; any order that lists parents before children gives
    the same cycle. When `trace` is given, every intermediate cycle is appended to it.
    """
    if order is None:
        order = t.preorder()

    present: set[Path] = {()}
    cycle = _TRIVIAL_CYCLE
    for path in order:
        if path[:-1] not in present:
            raise ValueError(f"node {path} processed before its parent")
        sign = t.node_at(path).sign
        assert sign is not None
        slot = _slot_rank(present, path)
        cycle = insert_node(cycle, slot, sign)
        present.add(path)
        if trace is not None:
            trace.append(TraceStep(sign, slot, cycle))
    return cycle


def empty_slots(t: SignedTree) -> list[Path]:
    """Paths of the empty child positions, in in-order (relative position) order."""
    result: list[Path] = []

    def visit(node: Node, path: Path) -> None:
        for side in (LEFT, RIGHT):
            child = node.child(side)
            if child is None:
                result.append((*path, side))
            else:
                visit(child, (*path, side))

    visit(t.root, ())
    return result


def _replace(node: Node, path: Path, new: Node | None) -> Node:
    if len(path) == 1:
        return node.with_child(path[0], new)
    child = node.child(path[0])
    assert child is not None
    return node.with_child(path[0], _replace(child, path[1:], new))


def insert_leaf(t: SignedTree, slot: int, sign: Sign) -> SignedTree:
    """Adds a leaf so that it sits in relative position `slot`."""
    slots = empty_slots(t)
    if not 1 <= slot <= len(slots):
        raise SlotOutOfRange(f"slot {slot} is outside 1..{len(slots)}")
    return SignedTree(_replace(t.root, slots[slot - 1], Node(sign)))


def _negate_node(node: Node | None) -> Node | None:
    if node is None:
        return None
    return Node(None if node.sign is None else -node.sign, _negate_node(node.left), _negate_node(node.right))


def negate(t: SignedTree) -> SignedTree:
    root = _negate_node(t.root)
    assert root is not None
    return SignedTree(root)


def _rotate_clockwise(node: Node, is_root: bool) -> Node | None:
    """The left child rises. Off the root, it must share the parent's sign; at the root the riser
    loses its sign and the lowered root takes it."""
    riser = node.left
    if riser is None or (not is_root and riser.sign != node.sign):
        return None
    lowered = Node(riser.sign if is_root else node.sign, riser.right, node.right)
    return Node(None if is_root else riser.sign, riser.left, lowered)


def _rotate_counterclockwise(node: Node, is_root: bool) -> Node | None:
    riser = node.right
    if riser is None or (not is_root and riser.sign != node.sign):
        return None
    lowered = Node(riser.sign if is_root else node.sign, node.left, riser.left)
    return Node(None if is_root else riser.sign, lowered, riser.right)


def _rotations_below(node: Node, is_root: bool) -> Iterator[Node]:
    for rotate in (_rotate_clockwise, _rotate_counterclockwise):
        rotated = rotate(node, is_root)
        if rotated is not None:
            yield rotated
    for side in (LEFT, RIGHT):
        child = node.child(side)
        if child is not None:
            for rotated in _rotations_below(child, False):
                yield node.with_child(side, rotated)


def rotations(t: SignedTree) -> list[SignedTree]:
    """Every tree one allowed rotation away from `t`."""
    return [SignedTree(node) for node in dict.fromkeys(_rotations_below(t.root, True))]


@functools.lru_cache(maxsize=4096)
def rotation_closure(t: SignedTree) -> frozenset[SignedTree]:
    seen = {t}
    queue = collections.deque([t])
    while queue:
        for neighbour in rotations(queue.popleft()):
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    return frozenset(seen)


def equivalent(a: SignedTree, b: SignedTree) -> bool:
    if a.node_count() != b.node_count():
        return False
    return b in rotation_closure(a)


@functools.lru_cache(maxsize=4096)
def canonical_form(t: SignedTree) -> SignedTree:
    """The member of the rotation class with the smallest text form."""
    return min(rotation_closure(t), key=str)


def _first_counterclockwise(node: Node, is_root: bool) -> Node | None:
    rotated = _rotate_counterclockwise(node, is_root)
    if rotated is not None:
        return rotated
    for side in (LEFT, RIGHT):
        child = node.child(side)
        if child is not None:
            rotated = _first_counterclockwise(child, False)
            if rotated is not None:
                return node.with_child(side, rotated)
    return None


def left_normal_form(t: SignedTree) -> SignedTree:
    """Applies counterclockwise rotations until none is allowed. The result has a root with no
    right child and no node whose right child shares its sign."""
    node = t.root
    while (rotated := _first_counterclockwise(node, True)) is not None:
        node = rotated
    return SignedTree(node)


@functools.cache
def _signed_subtrees(size: int) -> tuple[Node | None, ...]:
    if size == 0:
        return (None,)
    result: list[Node | None] = []
    for left_size in range(size):
        for left in _signed_subtrees(left_size):
            for right in _signed_subtrees(size - 1 - left_size):
                result.extend(Node(sign, left, right) for sign in Sign)
    return tuple(result)


def all_trees(k: int) -> Iterator[SignedTree]:
    """Every signed tree with `k` nodes, root included."""
    for left_size in range(k):
        for left in _signed_subtrees(left_size):
            for right in _signed_subtrees(k - 1 - left_size):
                yield SignedTree(Node(None, left, right))


@functools.cache
def _normal_subtrees(size: int, sign: Sign) -> tuple[Node, ...]:
    result = []
    for left_size in range(size):
        lefts: Iterable[Node | None] = (None,)
        if left_size:
            lefts = _normal_subtrees(left_size, Sign.PLUS) + _normal_subtrees(left_size, Sign.MINUS)
        right_size = size - 1 - left_size
        rights: Iterable[Node | None] = (None,) if right_size == 0 else _normal_subtrees(right_size, -sign)
        for left in lefts:
            for right in rights:
                result.append(Node(sign, left, right))
    return tuple(result)


def class_representatives(k: int) -> Iterator[SignedTree]:
    """One tree per rotation class with `k` nodes: the left normal forms."""
    if k == 1:
        yield SignedTree()
        return
    for sign in Sign:
        for left in _normal_subtrees(k - 1, sign):
            yield SignedTree(Node(None, left, None))
