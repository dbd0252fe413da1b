"""Plane rooted trees of uniform arity 2 or 3.

These are the raw combinatorial objects behind everything else: elements of
Thompson's group F are pairs of binary trees, elements of the Brown-Thompson
group F3 are pairs of ternary trees.  Leaves are indexed 0..n-1 from left to
right and nodes are identified by their preorder index, so every structural
query is deterministic.

Trees are immutable values; every edit returns a new tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class TreeError(ValueError):
    """Malformed tree text or an invalid structural operation."""


@dataclass(frozen=True)
class PlaneTree:
    """A leaf (no children) or an internal node with exactly `arity` children."""

    arity: int
    children: tuple["PlaneTree", ...] = ()

    def __post_init__(self) -> None:
        if self.arity not in (2, 3):
            raise TreeError(f"arity must be 2 or 3, got {self.arity}")
        if self.children and len(self.children) != self.arity:
            raise TreeError(
                f"internal node needs exactly {self.arity} children, got {len(self.children)}"
            )
        for c in self.children:
            if c.arity != self.arity:
                raise TreeError("child arity mismatch")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:
        return f"PlaneTree({print_tree(self)!r}, arity={self.arity})"


def leaf(arity: int = 2) -> PlaneTree:
    return PlaneTree(arity)


def node(*children: PlaneTree) -> PlaneTree:
    if not children:
        raise TreeError("node() needs children; use leaf() for leaves")
    return PlaneTree(children[0].arity, tuple(children))


def caret(arity: int = 2) -> PlaneTree:
    """The single internal node with all-leaf children."""
    return PlaneTree(arity, tuple(leaf(arity) for _ in range(arity)))


def parse_tree(text: str, arity: int) -> PlaneTree:
    """Parse the grammar  T ::= "*" | "(" T{arity} ")"  with optional whitespace."""
    pos = 0
    s = text

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def parse() -> PlaneTree:
        nonlocal pos
        skip_ws()
        if pos >= len(s):
            raise TreeError("unexpected end of input")
        ch = s[pos]
        if ch == "*":
            pos += 1
            return leaf(arity)
        if ch == "(":
            pos += 1
            kids = tuple(parse() for _ in range(arity))
            skip_ws()
            if pos >= len(s) or s[pos] != ")":
                raise TreeError(f"expected ')' at position {pos}")
            pos += 1
            return PlaneTree(arity, kids)
        raise TreeError(f"unexpected character {ch!r} at position {pos}")

    skip_ws()
    if pos >= len(s):
        raise TreeError("empty input")
    t = parse()
    skip_ws()
    if pos != len(s):
        raise TreeError(f"trailing input at position {pos}")
    return t


def print_tree(t: PlaneTree) -> str:
    if t.is_leaf:
        return "*"
    return "(" + "".join(print_tree(c) for c in t.children) + ")"


def leaf_count(t: PlaneTree) -> int:
    if t.is_leaf:
        return 1
    return sum(leaf_count(c) for c in t.children)


def internal_count(t: PlaneTree) -> int:
    if t.is_leaf:
        return 0
    return 1 + sum(internal_count(c) for c in t.children)


def preorder(t: PlaneTree) -> Iterator[tuple[int, PlaneTree, int]]:
    """Yield (node_id, subtree, leaf_offset) in preorder.

    node_id is the preorder index; leaf_offset is the index of the subtree's
    leftmost leaf in the whole tree.
    """
    counter = 0

    def walk(sub: PlaneTree, offset: int) -> Iterator[tuple[int, PlaneTree, int]]:
        nonlocal counter
        nid = counter
        counter += 1
        yield nid, sub, offset
        for c in sub.children:
            yield from walk(c, offset)
            offset += leaf_count(c)

    yield from walk(t, 0)


def subtree_at(t: PlaneTree, node_id: int) -> PlaneTree:
    for nid, sub, _ in preorder(t):
        if nid == node_id:
            return sub
    raise TreeError(f"no node with id {node_id}")


def left_span(t: PlaneTree, node_id: int) -> tuple[int, int]:
    """Inclusive leaf range covered by the node's first child.

    This is the span that determines the Tait-graph edge of the node.
    """
    for nid, sub, offset in preorder(t):
        if nid == node_id:
            if sub.is_leaf:
                raise TreeError("left_span of a leaf")
            first = sub.children[0]
            return offset, offset + leaf_count(first) - 1
    raise TreeError(f"no node with id {node_id}")


def internal_spans(t: PlaneTree) -> list[tuple[int, int, int]]:
    """All (node_id, i, j) with (i, j) the first-child leaf span of each internal node."""
    out = []
    for nid, sub, offset in preorder(t):
        if not sub.is_leaf:
            out.append((nid, offset, offset + leaf_count(sub.children[0]) - 1))
    return out


def graft(t: PlaneTree, leaf_index: int, s: PlaneTree) -> PlaneTree:
    """Replace the leaf at `leaf_index` by the tree `s`."""
    if s.arity != t.arity:
        raise TreeError("graft arity mismatch")
    n = leaf_count(t)
    if not 0 <= leaf_index < n:
        raise TreeError(f"leaf index {leaf_index} out of range 0..{n - 1}")

    def go(sub: PlaneTree, idx: int) -> PlaneTree:
        if sub.is_leaf:
            return s
        kids = []
        for c in sub.children:
            k = leaf_count(c)
            if 0 <= idx < k:
                kids.append(go(c, idx))
            else:
                kids.append(c)
            idx -= k
        return PlaneTree(sub.arity, tuple(kids))

    return go(t, leaf_index)


def cut_caret(t: PlaneTree, leaf_index: int) -> PlaneTree:
    """Replace the all-leaf node covering leaves leaf_index..+arity-1 by a leaf."""

    def go(sub: PlaneTree, idx: int) -> PlaneTree:
        if sub.is_leaf:
            raise TreeError("no caret at that leaf index")
        if idx == 0 and all(c.is_leaf for c in sub.children):
            return leaf(sub.arity)
        kids = []
        for c in sub.children:
            k = leaf_count(c)
            if 0 <= idx < k:
                kids.append(go(c, idx))
            else:
                kids.append(c)
            idx -= k
        return PlaneTree(sub.arity, tuple(kids))

    return go(t, leaf_index)


def caret_positions(t: PlaneTree) -> set[int]:
    """Leaf indices i such that leaves i..i+arity-1 are the children of one node."""
    out: set[int] = set()
    for _, sub, offset in preorder(t):
        if not sub.is_leaf and all(c.is_leaf for c in sub.children):
            out.add(offset)
    return out


def is_right_vine(t: PlaneTree) -> bool:
    """True iff every internal node's non-last children are all leaves."""
    if t.is_leaf:
        return True
    return all(c.is_leaf for c in t.children[:-1]) and is_right_vine(t.children[-1])


def right_vine(arity: int, leaves: int) -> PlaneTree:
    """The right vine with the given number of leaves (the standard bottom tree)."""
    if leaves < 1 or (leaves - 1) % (arity - 1) != 0:
        raise TreeError(f"no arity-{arity} vine with {leaves} leaves")
    t = leaf(arity)
    while leaf_count(t) < leaves:
        t = PlaneTree(arity, tuple([leaf(arity)] * (arity - 1) + [t]))
    return t


def right_leaf_count(t: PlaneTree) -> int:
    """Number of leaves that are the last child of their parent."""
    if t.is_leaf:
        return 0
    total = 1 if t.children[-1].is_leaf else right_leaf_count(t.children[-1])
    for c in t.children[:-1]:
        total += 0 if c.is_leaf else right_leaf_count(c)
    return total


def to_json(t: PlaneTree) -> dict:
    return {"arity": t.arity, "tree": print_tree(t)}


def from_json(data: dict) -> PlaneTree:
    return parse_tree(data["tree"], int(data["arity"]))
