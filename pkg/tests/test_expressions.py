import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spshuffle import (
    EmptyInputError,
    ExpressionSyntaxError,
    FactorizationTree,
    LeftoverOperandsError,
    NotSeriesParallelError,
    PosetExpr,
    StackUnderflowError,
    canonicalize,
    chain,
    evaluate,
    expr_to_poset,
    factorize,
    parse_expr,
    parse_rpn,
)
from spshuffle.catalogs import sp_expressions, sp_posets

# -- infix parser ---------------------------------------------------------------


def test_parse_diamond_expression():
    e = parse_expr("(1|1)*(1|1)")
    assert e.kind == "series"
    assert all(c.kind == "parallel" for c in e.children)
    assert e.size() == 4


def test_parse_chain_atom():
    e = parse_expr("c3")
    assert e.kind == "chain" and e.k == 3
    assert parse_expr("c0").k == 0


def test_parse_errors():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expr("1*")
    assert err.value.offset == 2
    with pytest.raises(EmptyInputError):
        parse_expr("   ")
    with pytest.raises(ExpressionSyntaxError):
        parse_expr("(1|1")
    with pytest.raises(ExpressionSyntaxError):
        parse_expr("c")
    with pytest.raises(ExpressionSyntaxError):
        parse_expr("1 1")


def test_parse_associativity_and_precedence():
    e = parse_expr("1*1*1")
    assert e.kind == "series" and e.children[0].kind == "series"
    e = parse_expr("1|1*1")
    assert e.kind == "parallel" and e.children[1].kind == "series"
    assert expr_to_poset(parse_expr("1|1|1")).hasse() == []


# -- RPN ------------------------------------------------------------------------


def test_parse_rpn_diamond(diamond):
    e = parse_rpn(["r", "q", "U", "s", "t", "U", "O"])
    p = expr_to_poset(e)
    assert sorted(p.points) == ["q", "r", "s", "t"]
    assert p.is_isomorphic(diamond)


def test_parse_rpn_single_and_errors():
    assert parse_rpn(["a"]).label == "a"
    with pytest.raises(StackUnderflowError):
        parse_rpn(["a", "U"])
    with pytest.raises(LeftoverOperandsError):
        parse_rpn(["a", "b"])
    with pytest.raises(EmptyInputError):
        parse_rpn([])


# -- expression evaluation --------------------------------------------------------


def test_expr_to_poset_examples():
    diamond = expr_to_poset(parse_expr("(1|1)*(1|1)"))
    assert len(diamond) == 4 and len(diamond.maximal_chains()) == 4
    assert len(expr_to_poset(parse_expr("c0"))) == 0
    p = expr_to_poset(parse_expr("1*(1|c2)"))
    assert len(p) == 4
    (root,) = p.minima()
    assert len(p.up_set(root)) == 4
    assert len(p.maxima()) == 2
    assert len(p.maximal_chains()) == 2
    assert max(len(m) for m in p.maximal_chains()) == 3


# -- factorization -----------------------------------------------------------------


def test_factorize_diamond(diamond):
    t = factorize(diamond)
    assert t.op == "S"
    assert t.left.op == "P" and t.right.op == "P"
    assert t.left.leaves() == ("a", "b") and t.right.leaves() == ("c", "d")
    assert t.to_poset() == diamond


def test_factorize_chain_right_nested():
    t = factorize(chain(3))
    assert t.op == "S" and t.left.is_leaf()
    assert t.right.op == "S" and t.right.left.is_leaf() and t.right.right.is_leaf()
    assert t.leaves() == ("1", "2", "3")


def test_factorize_rejects_n(n_poset):
    with pytest.raises(NotSeriesParallelError) as err:
        factorize(n_poset)
    assert err.value.witness == ("x", "y", "z", "w")


def test_factorize_empty():
    t = factorize(chain(0))
    assert t.is_empty() and len(t.to_poset()) == 0


@pytest.mark.parametrize("size", range(1, 9))
def test_factorize_round_trips_all_sp_posets(size):
    for p in sp_posets(size):
        if len(p) != size:
            continue
        t = factorize(p)
        assert t.to_poset() == p


def test_canonicalize_moves():
    a, b, c = (FactorizationTree.leaf(x) for x in "abc")
    left_nested = FactorizationTree.node("S", FactorizationTree.node("S", a, b), c)
    t = canonicalize(left_nested)
    assert t == FactorizationTree.node("S", a, FactorizationTree.node("S", b, c))
    swapped = FactorizationTree.node("P", b, a)
    assert canonicalize(swapped) == FactorizationTree.node("P", a, b)
    assert canonicalize(t) == t


def test_canonicalize_invariant_under_relabeling():
    rng = random.Random(11)
    for p in sp_posets(6):
        if len(p) < 2:
            continue
        perm = list(p.points)
        rng.shuffle(perm)
        forward = dict(zip(p.points, perm))
        backward = {v: k for k, v in forward.items()}
        q = p.relabel(forward)

        def map_back(t):
            if t.is_leaf():
                return FactorizationTree.leaf(backward[t.label])
            if t.is_empty():
                return t
            return FactorizationTree.node(t.op, map_back(t.left), map_back(t.right))

        assert canonicalize(map_back(factorize(q))) == factorize(p)


# -- printing and round trips -------------------------------------------------------


def exprs(depth):
    if depth == 0:
        return st.one_of(
            st.just(PosetExpr.point()),
            st.integers(0, 3).map(PosetExpr.chain),
        )
    sub = exprs(depth - 1)
    return st.one_of(
        sub,
        st.tuples(sub, sub).map(lambda ab: PosetExpr.series(*ab)),
        st.tuples(sub, sub).map(lambda ab: PosetExpr.parallel(*ab)),
    )


@given(exprs(3))
@settings(max_examples=80)
def test_text_round_trip(expr):
    p = expr_to_poset(expr)
    if not 1 <= len(p) <= 8:
        return
    q = expr_to_poset(parse_expr(expr.to_text()))
    assert p.is_isomorphic(q)


def _expr_tree(expr, fresh):
    """A literal (non-canonical) factorization tree of an expression."""
    if expr.kind == "point":
        return FactorizationTree.leaf(next(fresh))
    if expr.kind == "chain":
        leaves = [FactorizationTree.leaf(next(fresh)) for _ in range(expr.k)]
        if not leaves:
            return FactorizationTree.empty()
        node = leaves[-1]
        for leaf in reversed(leaves[:-1]):
            node = FactorizationTree.node("S", leaf, node)
        return node
    op = "S" if expr.kind == "series" else "P"
    left = _expr_tree(expr.children[0], fresh)
    right = _expr_tree(expr.children[1], fresh)
    if left.is_empty():
        return right
    if right.is_empty():
        return left
    return FactorizationTree.node(op, left, right)


def test_alternative_factorizations_agree():
    fresh = iter(f"q{i}" for i in range(10_000))
    for expr in sp_expressions(6):
        literal = _expr_tree(expr, fresh)
        canonical = factorize(expr_to_poset(expr))
        assert evaluate(literal) == evaluate(canonical)
        assert evaluate(canonicalize(literal)) == evaluate(literal)


def test_tree_json_and_text(diamond):
    t = factorize(diamond)
    assert t.to_json() == {
        "op": "S",
        "children": [
            {"op": "P", "children": [{"leaf": "a"}, {"leaf": "b"}]},
            {"op": "P", "children": [{"leaf": "c"}, {"leaf": "d"}]},
        ],
    }
    text = t.to_text()
    assert text.splitlines()[0] == "series"
    assert "  parallel" in text
