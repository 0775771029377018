"""Planar rooted trees in canonical parenthesis form.

A tree is either the leaf sentinel ``"*"`` (a dangling input edge) or a
tuple of child trees (a vertex of that arity).  ``()`` is the nullary
vertex.  Leaves are counted left to right; grafting substitutes trees for
leaves in that order.

Two enumeration classes are used by the censuses:

* ``binary_trees(k)``: every vertex has arity exactly 2 and there are k
  dangling leaves (k >= 1).  Counts follow the Catalan numbers
  1, 1, 2, 5, ... for k = 1, 2, 3, 4, ...
* ``all_trees(k, max_vertices)``: vertices of any arity >= 0.
"""

from __future__ import annotations

from functools import lru_cache

Tree = object  # "*" or tuple of Tree

LEAF = "*"
CAP: tuple = ()


def is_leaf(t) -> bool:
    return t == LEAF


def leaves(t) -> int:
    if is_leaf(t):
        return 1
    return sum(leaves(c) for c in t)


def vertices(t) -> int:
    if is_leaf(t):
        return 0
    return 1 + sum(vertices(c) for c in t)


def arities_ok(t, allowed: set[int]) -> bool:
    if is_leaf(t):
        return True
    return len(t) in allowed and all(arities_ok(c, allowed) for c in t)


def graft(t, args: list):
    """Substitute args[i] for the i-th leaf of t (left to right)."""
    if leaves(t) != len(args):
        raise ValueError(f"tree with {leaves(t)} leaves grafted with {len(args)} args")
    it = iter(args)

    def go(node):
        if is_leaf(node):
            return next(it)
        return tuple(go(c) for c in node)

    return go(t)


def to_parens(t) -> str:
    if is_leaf(t):
        return "*"
    return "(" + " ".join(to_parens(c) for c in t) + ")"


def from_parens(text: str):
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok == "*":
            return LEAF
        if tok != "(":
            raise ValueError(f"unexpected token {tok!r}")
        children = []
        while tokens[pos] != ")":
            children.append(parse())
        pos += 1
        return tuple(children)

    out = parse()
    if pos != len(tokens):
        raise ValueError("trailing tokens in tree expression")
    return out


@lru_cache(maxsize=None)
def binary_trees(k: int) -> tuple:
    """All k-leafed trees with every vertex of arity 2 (k >= 1)."""
    if k < 1:
        return ()
    if k == 1:
        return (LEAF,)
    out = []
    for i in range(1, k):
        for left in binary_trees(i):
            for right in binary_trees(k - i):
                out.append((left, right))
    return tuple(out)


def zero_two_trees(k: int) -> tuple:
    """The 0-or-2-ary census class: the nullary vertex at k = 0, binary
    trees at k >= 1."""
    if k == 0:
        return (CAP,)
    return binary_trees(k)


@lru_cache(maxsize=None)
def trees_exact(k: int, v: int) -> tuple:
    """All trees with exactly k leaves and exactly v vertices."""
    if v == 0:
        return (LEAF,) if k == 1 else ()
    out = []
    for r in range(0, k + v):
        for leaf_split in _compositions(k, r):
            for vertex_split in _compositions(v - 1, r):
                pools = [trees_exact(ki, vi) for ki, vi in zip(leaf_split, vertex_split)]
                if any(not p for p in pools):
                    continue
                for combo in _combos(pools):
                    out.append(tuple(combo))
    return tuple(out)


def all_trees(k: int, max_vertices: int) -> tuple:
    """All k-leafed trees with vertices of any arity and at most
    max_vertices vertices."""
    out = []
    for v in range(max_vertices + 1):
        out.extend(trees_exact(k, v))
    return tuple(out)


def zero_two_trees_with_caps(max_leaves: int, max_vertices: int) -> list:
    """Trees whose vertices have arity 0 or 2, caps allowed anywhere.

    This is the closure of the census class under grafting with the
    nullary vertex; the Tr tables are materialized over it.
    """
    out = []
    for k in range(0, max_leaves + 1):
        for t in all_trees(k, max_vertices):
            if arities_ok(t, {0, 2}):
                out.append(t)
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _combos(choice_lists):
    if not choice_lists:
        yield ()
        return
    head, *tail = choice_lists
    for h in head:
        for rest in _combos(tail):
            yield (h,) + rest
