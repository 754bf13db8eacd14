"""Cross-check suite: closed forms against brute force, exhaustively.

Every series-parallel poset up to a size bound is factorized, its six
counting forms are evaluated, and each value is compared against the
definitional oracle.  The suite is deterministic; one record per
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .catalogs import sp_expressions
from .expressions import expr_to_poset, factorize
from .series import evaluate


@dataclass(frozen=True)
class CheckResult:
    poset: str  # expression text
    check: str
    n: int
    closed_form: int
    brute_force: int

    @property
    def ok(self):
        return self.closed_form == self.brute_force


def run_cross_checks(max_points=5, max_n=4, reciprocity_n=6):
    """Yield one :class:`CheckResult` per comparison.

    Covers the shuffle, strict, weak, weak-surjective and both deck-divider
    counts for all SP posets with at most ``max_points`` points and chains
    up to ``max_n``, plus the shuffle/weak basis shift, Stanley reciprocity,
    and the d-vector itself.
    """
    shuffle_cap = max_points + max_n
    for expr in sp_expressions(max_points):
        name = expr.to_text()
        p = expr_to_poset(expr)
        u = evaluate(factorize(p))
        d = u.to_d_vector(len(p))

        oracle_d = oracle.oracle_d_vector(p)
        yield CheckResult(
            name,
            "d-vector",
            0,
            1,
            1 if d == oracle_d else 0,
        )

        for n in range(max_n + 1):
            yield CheckResult(
                name,
                "shuffle",
                n,
                u.count_shuffles(n),
                len(oracle.enumerate_colimit_shuffles(p, n, cap=shuffle_cap)),
            )
            yield CheckResult(
                name,
                "strict",
                n,
                d.count_strict(n),
                oracle.count_monotone_maps(p, n, oracle.MapMode.STRICT),
            )
            yield CheckResult(
                name,
                "weak",
                n,
                d.count_weak(n),
                oracle.count_monotone_maps(p, n, oracle.MapMode.WEAK),
            )
            if n >= 1:
                yield CheckResult(
                    name,
                    "weaksurj",
                    n,
                    d.count_weak_surjective(n),
                    oracle.count_monotone_maps(p, n, oracle.MapMode.WEAK_SURJECTIVE),
                )
            yield CheckResult(
                name,
                "rdd",
                n,
                d.count_right_dd(n),
                oracle.count_right_dd_oracle(p, n, cap=shuffle_cap),
            )
            yield CheckResult(
                name,
                "ldd",
                n,
                d.count_left_dd(n),
                oracle.count_left_dd_oracle(p, n, cap=shuffle_cap),
            )
            yield CheckResult(
                name,
                "shuffle=weak-shift",
                n,
                u.count_shuffles(n),
                d.count_weak(n + 1),
            )
        for n in range(1, reciprocity_n + 1):
            yield CheckResult(
                name,
                "reciprocity",
                n,
                1,
                1 if d.reciprocity_check(n) else 0,
            )
