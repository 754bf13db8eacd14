"""Exhaustive desk-scale generators used by the verification suite."""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import posets
from .expressions import PosetExpr, expr_to_poset
from .trees import RootedTree


def _fold(kind, parts):
    node = parts[-1]
    for part in reversed(parts[:-1]):
        node = PosetExpr(kind, children=(part, node))
    return node


@lru_cache(maxsize=None)
def _sp_exprs(k, forbid):
    """Canonical SP expressions on k points whose root is not ``forbid``."""
    out = []
    if k == 1:
        out.append(PosetExpr.point())
    if forbid != "series":
        for split in _compositions(k):
            for parts in itertools.product(*(_sp_exprs(s, "series") for s in split)):
                out.append(_fold("series", list(parts)))
    if forbid != "parallel":
        for split in _multiset_splits(k):
            choices = [_sp_exprs(s, "parallel") for s in split]
            for parts in _nondecreasing_products(choices, split):
                out.append(_fold("parallel", list(parts)))
    return tuple(out)


@lru_cache(maxsize=None)
def _compositions(k):
    """Ordered splits of k into at least two positive parts."""
    out = []
    for first in range(1, k):
        rest = k - first
        out.append((first, rest))
        for tail in _compositions(rest):
            out.append((first,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _multiset_splits(k):
    """Nondecreasing splits of k into at least two positive parts."""
    out = []

    def grow(remaining, minimum, acc):
        if remaining == 0:
            if len(acc) >= 2:
                out.append(tuple(acc))
            return
        for part in range(minimum, remaining + 1):
            acc.append(part)
            grow(remaining - part, part, acc)
            acc.pop()

    grow(k, 1, [])
    return tuple(out)


def _nondecreasing_products(choices, sizes):
    """Products where equal-size factors are picked nondecreasingly.

    Parallel children commute, so one representative per multiset is
    enough; children are compared by their rendered text.
    """

    def grow(idx, acc):
        if idx == len(choices):
            yield tuple(acc)
            return
        for expr in choices[idx]:
            if (
                idx > 0
                and sizes[idx] == sizes[idx - 1]
                and expr.to_text() < acc[-1].to_text()
            ):
                continue
            acc.append(expr)
            yield from grow(idx + 1, acc)
            acc.pop()

    yield from grow(0, [])


def sp_posets(max_points):
    """One poset per unlabeled SP shape with 1..max_points points."""
    out = []
    for k in range(1, max_points + 1):
        for expr in _sp_exprs(k, ""):
            out.append(expr_to_poset(expr))
    return out


def sp_expressions(max_points):
    """The canonical SP expressions behind :func:`sp_posets`."""
    out = []
    for k in range(1, max_points + 1):
        out.extend(_sp_exprs(k, ""))
    return out


def all_posets(max_points, up_to_iso=True):
    """Every finite poset with 1..max_points points, SP or not.

    Generated as transitive closures of DAGs whose edges respect the label
    order (every poset is naturally labeled by some linear extension), then
    optionally deduplicated up to isomorphism.
    """
    out = []
    for k in range(1, max_points + 1):
        labels = [str(i) for i in range(1, k + 1)]
        pairs = [(labels[i], labels[j]) for i in range(k) for j in range(i + 1, k)]
        seen_relations = set()
        found = []
        for mask in range(1 << len(pairs)):
            rels = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            p = posets.poset_from_relations(labels, rels)
            rel = p.relation()
            if rel in seen_relations:
                continue
            seen_relations.add(rel)
            found.append(p)
        if up_to_iso:
            found = _dedupe_iso(found)
        out.extend(found)
    return out


def _dedupe_iso(candidates):
    kept = []
    for p in candidates:
        if not any(p.is_isomorphic(q) for q in kept):
            kept.append(p)
    return kept


@lru_cache(maxsize=None)
def _trees_with(vertices):
    """Canonical reduced trees with exactly ``vertices`` vertices."""
    if vertices == 0:
        return (RootedTree.unit(),)
    out = []
    for split in _tree_splits(vertices - 1):
        choices = [_trees_with(s) for s in split]
        for parts in _nondecreasing_tree_products(choices, split):
            out.append(RootedTree.vertex(parts))
    return tuple(out)


@lru_cache(maxsize=None)
def _tree_splits(total):
    """Nondecreasing splits of ``total`` into positive parts (or none)."""
    out = []

    def grow(remaining, minimum, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(minimum, remaining + 1):
            acc.append(part)
            grow(remaining - part, part, acc)
            acc.pop()

    grow(total, 1, [])
    return tuple(out)


def _nondecreasing_tree_products(choices, sizes):
    def grow(idx, acc):
        if idx == len(choices):
            yield tuple(acc)
            return
        for tree in choices[idx]:
            if (
                idx > 0
                and sizes[idx] == sizes[idx - 1]
                and tree.to_text() < acc[-1].to_text()
            ):
                continue
            acc.append(tree)
            yield from grow(idx + 1, acc)
            acc.pop()

    yield from grow(0, [])


def reduced_trees(max_vertices):
    """One representative per reduced-tree shape with 1..max_vertices vertices."""
    out = []
    for v in range(1, max_vertices + 1):
        out.extend(_trees_with(v))
    return out
