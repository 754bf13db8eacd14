import pytest

from spshuffle import parse_expr, expr_to_poset, poset_from_relations


@pytest.fixture
def diamond():
    """{a<c, a<d, b<c, b<d}: two minima below two maxima."""
    return poset_from_relations(
        ["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    )


@pytest.fixture
def n_poset():
    """The fence {x<y, z<y, z<w}; the smallest non-series-parallel poset."""
    return poset_from_relations(["x", "y", "z", "w"], [("x", "y"), ("z", "y"), ("z", "w")])


@pytest.fixture
def wedge_plus_point():
    """{x, q<r, q<s}: an isolated point next to a two-armed wedge."""
    return poset_from_relations(["x", "q", "r", "s"], [("q", "r"), ("q", "s")])


def poset(expr_text):
    return expr_to_poset(parse_expr(expr_text))
