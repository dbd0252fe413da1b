"""Group arithmetic for Thompson's F and the Brown-Thompson group F3.

Elements are reduced pairs (top, bottom) of same-arity plane trees with equal
leaf counts.  Multiplication (T+, T) * (T, T-) = (T+, T-) is realised by the
minimal common refinement of the inner trees; reduction cancels opposing
carets until no leaf interval is a full caret in both trees at once.

The oriented subgroup is handled through Ren's isomorphism alpha: F3 -> F,
which rewrites every ternary node (A, B, C) as the binary shape (A, (B, C)).
A reduced binary pair need not be a literal tree-level alpha image (reduction
can eat the pattern), so alpha_inverse re-adds forced carets to both trees
until the pattern parses, after first ruling out non-members via the Tait
graph bipartiteness test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import tait
from .trees import (
    PlaneTree,
    TreeError,
    caret,
    caret_positions,
    cut_caret,
    graft,
    is_right_vine,
    leaf,
    leaf_count,
    node,
    parse_tree,
    print_tree,
)


class WordError(ValueError):
    """Bad generator word syntax."""


class NotInImage(ValueError):
    """The element is not in the image of alpha (not in the oriented subgroup)."""


@dataclass(frozen=True)
class Word:
    """Letters (generator_index, exponent) with nonzero exponents."""

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for idx, exp in self.letters:
            if idx < 0:
                raise WordError(f"negative generator index {idx}")
            if exp == 0:
                raise WordError("zero exponent")


_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise WordError(f"bad token {tok!r}")
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) else 1
        if exp == 0:
            raise WordError(f"zero exponent in {tok!r}")
        letters.append((idx, exp))
    return Word(tuple(letters))


@dataclass(frozen=True)
class GroupElement:
    """A reduced tree pair; construct via element() which enforces reduction."""

    top: PlaneTree
    bottom: PlaneTree

    @property
    def arity(self) -> int:
        return self.top.arity

    @property
    def leaves(self) -> int:
        return leaf_count(self.top)

    def __repr__(self) -> str:
        return f"GroupElement({print_tree(self.top)}, {print_tree(self.bottom)})"


def element(top: PlaneTree, bottom: PlaneTree) -> GroupElement:
    if top.arity != bottom.arity:
        raise TreeError("tree pair arity mismatch")
    if leaf_count(top) != leaf_count(bottom):
        raise TreeError("tree pair leaf count mismatch")
    top, bottom = _reduce(top, bottom)
    return GroupElement(top, bottom)


def _reduce(top: PlaneTree, bottom: PlaneTree) -> tuple[PlaneTree, PlaneTree]:
    """Cancel opposing carets (same leaf interval fully caret in both trees)."""
    while True:
        common = caret_positions(top) & caret_positions(bottom)
        if not common:
            return top, bottom
        i = min(common)
        top = cut_caret(top, i)
        bottom = cut_caret(bottom, i)


def identity(arity: int = 2) -> GroupElement:
    return GroupElement(leaf(arity), leaf(arity))


def generator(n: int) -> GroupElement:
    """The generator x_n of F, realised as shift^n(x_0)."""
    if n < 0:
        raise ValueError("generator index must be >= 0")
    g = GroupElement(
        parse_tree("((**)*)", 2),
        parse_tree("(*(**))", 2),
    )
    for _ in range(n):
        g = shift(g)
    return g


def shift(g: GroupElement) -> GroupElement:
    """The shift homomorphism: wrap both trees under a fresh root caret."""
    a = g.arity
    pad = [leaf(a)] * (a - 1)
    return element(node(*pad, g.top), node(*pad, g.bottom))


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(g.bottom, g.top)


def _merge(s: PlaneTree, t: PlaneTree) -> PlaneTree:
    """Minimal common refinement of two same-arity trees."""
    if s.is_leaf:
        return t
    if t.is_leaf:
        return s
    return PlaneTree(s.arity, tuple(_merge(a, b) for a, b in zip(s.children, t.children)))


def _refinement_pieces(base: PlaneTree, refined: PlaneTree) -> list[tuple[int, PlaneTree]]:
    """The subtrees of `refined` sitting where `base` has leaves, by base leaf index."""
    pieces: list[tuple[int, PlaneTree]] = []

    def go(b: PlaneTree, r: PlaneTree, offset: int) -> None:
        if b.is_leaf:
            if not r.is_leaf:
                pieces.append((offset, r))
            return
        for bc, rc in zip(b.children, r.children):
            go(bc, rc, offset)
            offset += leaf_count(bc)

    go(base, refined, 0)
    return pieces


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.arity != b.arity:
        raise TreeError("cannot multiply elements of different arity")
    common = _merge(a.bottom, b.top)
    top = a.top
    for idx, piece in reversed(_refinement_pieces(a.bottom, common)):
        top = graft(top, idx, piece)
    bottom = b.bottom
    for idx, piece in reversed(_refinement_pieces(b.top, common)):
        bottom = graft(bottom, idx, piece)
    return element(top, bottom)


def power(g: GroupElement, k: int) -> GroupElement:
    out = identity(g.arity)
    step = g if k >= 0 else inverse(g)
    for _ in range(abs(k)):
        out = multiply(out, step)
    return out


def evaluate_word(w: Word) -> GroupElement:
    out = identity(2)
    for idx, exp in w.letters:
        out = multiply(out, power(generator(idx), exp))
    return out


def from_word(text: str) -> GroupElement:
    return evaluate_word(parse_word(text))


def is_positive(g: GroupElement) -> bool:
    return is_right_vine(g.bottom)


def positive_element(top: PlaneTree) -> GroupElement:
    """The positive element with the given top tree (bottom = matching right vine)."""
    from .trees import right_vine

    return element(top, right_vine(top.arity, leaf_count(top)))


def alpha_tree(t: PlaneTree) -> PlaneTree:
    """Tree-level alpha: ternary (A, B, C) -> binary (A', (B', C'))."""
    if t.arity != 3:
        raise TreeError("alpha_tree expects a ternary tree")
    if t.is_leaf:
        return leaf(2)
    a, b, c = (alpha_tree(ch) for ch in t.children)
    return node(a, node(b, c))


def alpha(g3: GroupElement) -> GroupElement:
    """Ren's isomorphism F3 -> F (image is the oriented subgroup)."""
    if g3.arity != 3:
        raise TreeError("alpha expects an arity-3 element")
    return element(alpha_tree(g3.top), alpha_tree(g3.bottom))


def _alpha_parse_failure(t: PlaneTree, offset: int = 0) -> int | None:
    """Leaf index where the (A, (B, C)) pattern needs a node but finds a leaf.

    Returns None when the tree parses as a tree-level alpha image.
    """
    if t.is_leaf:
        return None
    a, r = t.children
    fail = _alpha_parse_failure(a, offset)
    if fail is not None:
        return fail
    offset += leaf_count(a)
    if r.is_leaf:
        return offset
    b, c = r.children
    fail = _alpha_parse_failure(b, offset)
    if fail is not None:
        return fail
    return _alpha_parse_failure(c, offset + leaf_count(b))


def _alpha_unparse(t: PlaneTree) -> PlaneTree:
    """Inverse of alpha_tree on trees that parse."""
    if t.is_leaf:
        return leaf(3)
    a, r = t.children
    b, c = r.children
    return node(_alpha_unparse(a), _alpha_unparse(b), _alpha_unparse(c))


def alpha_inverse(g: GroupElement) -> GroupElement:
    """Pull a binary element back through alpha.

    Raises NotInImage when g is not in the oriented subgroup.  Membership is
    decided up front by bipartiteness of the Tait graph; after that the
    (A, (B, C)) pattern is matched greedily on both trees, grafting a caret at
    any leaf the pattern forces to be a node (in both trees at once, which
    keeps the element unchanged) until both trees parse.
    """
    if g.arity != 2:
        raise TreeError("alpha_inverse expects an arity-2 element")
    if not tait.is_bipartite(tait.tait_graph(g)):
        raise NotInImage("Tait graph has an odd cycle")
    top, bottom = g.top, g.bottom
    budget = 8 * leaf_count(top) + 16
    for _ in range(budget):
        fail = _alpha_parse_failure(top)
        if fail is None:
            fail = _alpha_parse_failure(bottom)
        if fail is None:
            return element(_alpha_unparse(top), _alpha_unparse(bottom))
        top = graft(top, fail, caret(2))
        bottom = graft(bottom, fail, caret(2))
    raise AssertionError("alpha_inverse expansion did not converge (bug)")


def is_oriented_positive(g: GroupElement) -> bool:
    """Membership in the positive cone of the oriented subgroup."""
    return is_positive(g) and tait.is_bipartite(tait.tait_graph(g))


def to_json(g: GroupElement) -> dict:
    return {"top": print_tree(g.top), "bottom": print_tree(g.bottom), "arity": g.arity}


def from_json(data: dict) -> GroupElement:
    a = int(data["arity"])
    return element(parse_tree(data["top"], a), parse_tree(data["bottom"], a))
