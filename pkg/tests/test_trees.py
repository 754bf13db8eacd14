import math

import pytest

from spshuffle import (
    ExpressionSyntaxError,
    NotReducedError,
    RootedTree,
    TooLargeError,
    chain,
    count_monotone_maps,
    count_tree_shuffles,
    dendroidal_count,
    edge_poset,
    evaluate,
    factorize,
    parse_tree,
    poset_from_relations,
    reduce,
    vertex_poset,
)
from spshuffle.catalogs import reduced_trees
from spshuffle.oracle import MapMode

eta = RootedTree.unit()


def test_parse_tree():
    assert parse_tree("") == eta
    root = parse_tree("(() ())")
    assert root.vertex_count() == 3
    assert parse_tree("(()())") == root
    with pytest.raises(ExpressionSyntaxError):
        parse_tree("((")
    with pytest.raises(ExpressionSyntaxError):
        parse_tree("()(")
    with pytest.raises(ExpressionSyntaxError):
        parse_tree("())")


def test_reduce():
    corolla3 = RootedTree.vertex([eta, eta, eta])
    assert reduce(corolla3) == RootedTree.vertex([])
    assert reduce(corolla3).vertex_count() == 1
    t = parse_tree("((()) (()))")
    assert reduce(t) == t
    assert reduce(reduce(corolla3)) == reduce(corolla3)
    assert reduce(eta) == eta


def test_vertex_poset():
    assert vertex_poset(parse_tree("()")).is_isomorphic(chain(1))
    wedge = vertex_poset(parse_tree("(()())"))
    assert wedge.is_isomorphic(
        poset_from_relations(["q", "r", "s"], [("q", "r"), ("q", "s")])
    )
    assert len(vertex_poset(eta)) == 0
    assert len(vertex_poset(parse_tree("(()())")).minima()) == 1
    with pytest.raises(NotReducedError):
        vertex_poset(RootedTree.vertex([eta, eta]))


def test_edge_poset():
    assert edge_poset(eta).is_isomorphic(chain(1))
    assert edge_poset(parse_tree("()")).is_isomorphic(chain(2))
    two_leaf = RootedTree.vertex([eta, eta])
    assert edge_poset(two_leaf).is_isomorphic(
        poset_from_relations(["r", "a", "b"], [("r", "a"), ("r", "b")])
    )


def test_count_tree_shuffles_examples():
    assert count_tree_shuffles(parse_tree("()"), 1) == 2
    assert count_tree_shuffles(parse_tree("(()())"), 1) == 5
    tree_r = parse_tree("((()) (()))")
    for n in range(8):
        assert count_tree_shuffles(tree_r, n) == sum(
            math.comb(k + 2, 2) ** 2 for k in range(n + 1)
        )
    with pytest.raises(NotReducedError):
        count_tree_shuffles(RootedTree.vertex([eta, eta]), 1)


def test_count_tree_shuffles_monotone_in_n():
    for t in reduced_trees(5):
        values = [count_tree_shuffles(t, n) for n in range(6)]
        assert values == sorted(values)


def test_reconciliation_small():
    for t in reduced_trees(5):
        u = evaluate(factorize(vertex_poset(t)))
        for n in range(4):
            assert count_tree_shuffles(t, n) == u.count_shuffles(n)


def test_dendroidal_count():
    for n in range(6):
        assert dendroidal_count(eta, n) == n + 1
        assert dendroidal_count(parse_tree("()"), n) == math.comb(n + 2, 2)
    assert dendroidal_count(RootedTree.vertex([eta, eta]), 1) == 5
    with pytest.raises(TooLargeError):
        dendroidal_count(parse_tree("((((()))))"), 1, cap=4)


def test_dendroidal_matches_direct_weak_count():
    for t in reduced_trees(4):
        ep = edge_poset(t)
        if len(ep) > 5:
            continue
        for n in range(5):
            assert dendroidal_count(t, n) == count_monotone_maps(
                ep, n + 1, MapMode.WEAK
            )
