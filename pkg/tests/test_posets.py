import itertools
import random

import pytest

from spshuffle import (
    CycleDetectedError,
    DuplicateLabelError,
    TooLargeError,
    UnknownLabelError,
    antichain,
    chain,
    disjoint_union,
    lexicographic_sum,
    ordinal_sum,
    poset_from_hasse_json,
    poset_from_relations,
)
from spshuffle.catalogs import all_posets
from spshuffle.errors import ArityMismatchError
from spshuffle.oracle import MapMode, count_monotone_maps


def test_closure_adds_transitive_pair():
    p = poset_from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert p.leq("a", "c")
    assert p.hasse() == [("a", "b"), ("b", "c")]


def test_single_point():
    p = poset_from_relations(["a"], [])
    assert len(p) == 1 and p.leq("a", "a")


def test_cycle_rejected():
    with pytest.raises(CycleDetectedError):
        poset_from_relations(["a", "b"], [("a", "b"), ("b", "a")])


def test_duplicate_and_unknown_labels():
    with pytest.raises(DuplicateLabelError):
        poset_from_relations(["a", "a"], [])
    with pytest.raises(UnknownLabelError):
        poset_from_relations(["a"], [("a", "b")])


def test_closure_idempotent():
    for p in all_posets(4):
        again = poset_from_relations(p.points, [pair for pair in p.relation()])
        assert again == p


def test_chain_constructor():
    assert len(chain(0)) == 0
    assert len(chain(1)) == 1
    p = chain(3)
    assert p.leq("1", "3") and p.hasse() == [("1", "2"), ("2", "3")]


def test_hasse_examples(diamond):
    assert diamond.hasse() == [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    assert antichain(2).hasse() == []


def test_hasse_closure_round_trip():
    rng = random.Random(7)
    posets = list(all_posets(5))
    for _ in range(40):
        n = rng.randint(1, 7)
        labels = [f"v{i}" for i in range(n)]
        rels = [
            (labels[i], labels[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.4
        ]
        posets.append(poset_from_relations(labels, rels))
    for p in posets:
        assert poset_from_hasse_json(p.to_hasse_json()) == p


def test_disjoint_union_basics():
    one = chain(1)
    two = disjoint_union(one, one)
    assert len(two) == 2 and two.hasse() == []
    mixed = disjoint_union(chain(2), chain(1))
    assert len(mixed) == 3
    assert mixed.hasse() == [("L.1", "L.2")]
    empty = chain(0)
    assert disjoint_union(empty, chain(2)).is_isomorphic(chain(2))


def test_ordinal_sum_basics(diamond):
    assert ordinal_sum(chain(2), chain(3)).is_isomorphic(chain(5))
    assert ordinal_sum(antichain(2), antichain(2)).is_isomorphic(diamond)
    assert ordinal_sum(chain(0), diamond).is_isomorphic(diamond)


def test_ordinal_sum_relates_all_cross_pairs():
    p = ordinal_sum(antichain(2), antichain(2))
    for a in ("L.1", "L.2"):
        for b in ("R.1", "R.2"):
            assert p.lt(a, b)


def test_lexicographic_sum_examples(diamond):
    two = poset_from_relations(["c", "d"], [("c", "d")])
    built = lexicographic_sum(two, [antichain(2), antichain(2)])
    assert built.is_isomorphic(diamond)
    # matches ordinal_sum up to the block-prefix naming
    renamed = built.relabel(
        {"1.1": "L.1", "1.2": "L.2", "2.1": "R.1", "2.2": "R.2"}
    )
    assert renamed == ordinal_sum(antichain(2), antichain(2))

    # the four-ary operation {c<d}({c,d}, {c<d}) on (p,q,r,s)
    outer = poset_from_relations(["c", "d"], [("c", "d")])
    four = lexicographic_sum(outer, [antichain(2), chain(2)])
    expected = poset_from_relations(
        ["p", "q", "r", "s"], [("p", "r"), ("q", "r"), ("r", "s")]
    )
    assert four.is_isomorphic(expected)

    q = poset_from_relations(["u", "v"], [("u", "v")])
    assert lexicographic_sum(chain(1), [q]).is_isomorphic(q)


def test_lexicographic_sum_arity():
    with pytest.raises(ArityMismatchError):
        lexicographic_sum(chain(2), [chain(1)])


def test_lexicographic_sum_matches_disjoint_union():
    p, q = chain(2), antichain(2)
    built = lexicographic_sum(antichain(2), [p, q])
    renamed = built.relabel(
        {"1.1": "L.1", "1.2": "L.2", "2.1": "R.1", "2.2": "R.2"}
    )
    assert renamed == disjoint_union(p, q)


def test_union_and_sum_laws_up_to_iso():
    small = [chain(1), chain(2), antichain(2)]
    for p, q in itertools.product(small, repeat=2):
        assert disjoint_union(p, q).is_isomorphic(disjoint_union(q, p))
    for p, q, r in itertools.product(small, repeat=3):
        if len(p) + len(q) + len(r) > 5:
            continue
        assert disjoint_union(disjoint_union(p, q), r).is_isomorphic(
            disjoint_union(p, disjoint_union(q, r))
        )
        assert ordinal_sum(ordinal_sum(p, q), r).is_isomorphic(
            ordinal_sum(p, ordinal_sum(q, r))
        )


def test_is_series_parallel(diamond, n_poset):
    assert diamond.is_series_parallel()
    assert chain(5).is_series_parallel()
    assert not n_poset.is_series_parallel()
    assert n_poset.series_parallel_witness() == ("x", "y", "z", "w")


def test_linear_extensions(diamond, n_poset, wedge_plus_point):
    assert wedge_plus_point.linear_extensions() == 8
    assert n_poset.linear_extensions() == 5
    assert chain(4).linear_extensions() == 1
    assert diamond.linear_extensions() == 4
    listing = diamond.linear_extension_list()
    assert len(listing) == 4 and listing == sorted(listing)
    with pytest.raises(TooLargeError):
        chain(11).linear_extensions()


def test_lower_set_chains(wedge_plus_point):
    assert wedge_plus_point.lower_set_chains(4) == 8
    assert wedge_plus_point.lower_set_chains(3) == 9
    assert wedge_plus_point.lower_set_chains(2) == 2
    for n in range(1, 6):
        assert chain(n).lower_set_chains(n) == 1


def test_lower_set_chains_equal_strict_surjective_counts():
    for p in all_posets(5):
        for i in range(1, len(p) + 1):
            assert p.lower_set_chains(i) == count_monotone_maps(
                p, i, MapMode.STRICT_SURJECTIVE
            )


def test_maximal_chains(diamond):
    assert diamond.maximal_chains() == [
        ("a", "c"),
        ("a", "d"),
        ("b", "c"),
        ("b", "d"),
    ]
    assert chain(3).maximal_chains() == [("1", "2", "3")]
    assert antichain(2).maximal_chains() == [("1",), ("2",)]


def test_is_isomorphic(diamond, n_poset):
    renamed = diamond.relabel({"a": "w", "b": "x", "c": "y", "d": "z"})
    assert diamond.is_isomorphic(renamed)
    assert not chain(2).is_isomorphic(antichain(2))
    assert n_poset.is_isomorphic(n_poset.dual())
    with pytest.raises(TooLargeError):
        chain(9).is_isomorphic(chain(9))
