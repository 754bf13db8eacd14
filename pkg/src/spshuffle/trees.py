"""Rooted trees, reduction, the tree/poset dictionary, and tree shuffles.

A tree is either the unit (a bare edge, no vertices) or a vertex with an
ordered tuple of subtrees.  Unit subtrees stand for explicit leaf edges;
in reduced form no explicit units remain, and a childless vertex carries
one implicit leaf.  Only (reduced tree) x (linear tree) shuffles are
counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ExpressionSyntaxError, NotReducedError, TooLargeError
from .oracle import DEFAULT_DVECTOR_CAP, oracle_d_vector
from .posets import poset_from_relations


@dataclass(frozen=True)
class RootedTree:
    """``unit`` is the vertexless tree; otherwise a vertex with subtrees."""

    is_unit: bool
    children: tuple = ()

    @classmethod
    def unit(cls):
        return cls(True)

    @classmethod
    def vertex(cls, children=()):
        return cls(False, tuple(children))

    def vertex_count(self):
        if self.is_unit:
            return 0
        return 1 + sum(c.vertex_count() for c in self.children)

    def to_text(self):
        if self.is_unit:
            return ""
        return "(" + " ".join(c.to_text() for c in self.children if not c.is_unit) + ")"

    def __repr__(self):
        return f"RootedTree({self.to_text()!r})" if not self.is_unit else "RootedTree(unit)"


def parse_tree(text):
    """Parse nested parentheses: "" is the unit, "()" a childless vertex."""
    stripped = text.strip()
    if not stripped:
        return RootedTree.unit()
    pos = 0

    def parse_vertex():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text) or text[pos] != "(":
            raise ExpressionSyntaxError("expected '('", pos)
        pos += 1
        children = []
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                raise ExpressionSyntaxError("unbalanced '('", pos)
            if text[pos] == ")":
                pos += 1
                return RootedTree.vertex(children)
            children.append(parse_vertex())

    tree = parse_vertex()
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos != len(text):
        raise ExpressionSyntaxError(f"unexpected {text[pos]!r}", pos)
    return tree


def reduce(t):
    """Prune all explicit leaves, leaving one implicit leaf per top vertex.

    The vertex set never changes, and the result is a fixed point.
    """
    if t.is_unit:
        return t
    return RootedTree.vertex(reduce(c) for c in t.children if not c.is_unit)


def is_reduced(t):
    return t == reduce(t)


def vertex_poset(t):
    """Poset on the vertices of a reduced tree; the root vertex is minimal.

    Vertices are labeled by their child-index paths ("0", "0.1", ...).
    The unit tree gives the empty poset.
    """
    if not is_reduced(t):
        raise NotReducedError("vertex_poset needs a reduced tree")
    points = []
    relations = []

    def walk(node, path):
        points.append(path)
        for i, child in enumerate(node.children, 1):
            child_path = f"{path}.{i}"
            relations.append((path, child_path))
            walk(child, child_path)

    if not t.is_unit:
        walk(t, "0")
    return poset_from_relations(points, relations)


def edge_poset(t):
    """Poset on all edges (root, internal, leaf), ordered root to leaf.

    Works for unreduced trees too; a childless vertex contributes one
    implicit leaf edge.
    """
    points = []
    relations = []

    def walk(node, path):
        points.append(path)
        if node.is_unit:
            return
        if not node.children:
            points.append(f"{path}.1")
            relations.append((path, f"{path}.1"))
            return
        for i, child in enumerate(node.children, 1):
            child_path = f"{path}.{i}"
            relations.append((path, child_path))
            walk(child, child_path)

    walk(t, "e")
    return poset_from_relations(points, relations)


@lru_cache(maxsize=None)
def _tree_shuffles(s, m):
    if s.is_unit or m == 0:
        return 1
    product = 1
    for child in s.children:
        product *= _tree_shuffles(child, m)
    return product + _tree_shuffles(s, m - 1)


def count_tree_shuffles(s, n):
    """Shuffles of a reduced tree with the linear tree on ``n`` vertices.

    The shuffle's bottom vertex is either the root of ``s`` (each subtree
    then shuffles with the full linear tree) or the linear tree's first
    vertex (recurse with one vertex fewer).
    """
    if n < 0:
        raise ValueError("linear tree size must be nonnegative")
    if not is_reduced(s):
        raise NotReducedError("count_tree_shuffles needs a reduced tree")
    return _tree_shuffles(s, n)


def dendroidal_count(t, n, cap=DEFAULT_DVECTOR_CAP):
    """Dendroidal points of the linear object over a tree.

    The linear object [n] has n+1 edge colors, so this is the weak map
    count from the edge poset of ``t`` into chain(n+1); the d-vector comes
    from the brute-force oracle.
    """
    ep = edge_poset(t)
    if len(ep) > cap:
        raise TooLargeError(f"edge poset has {len(ep)} points, cap is {cap}")
    return oracle_d_vector(ep, cap=cap).count_weak(n + 1)
