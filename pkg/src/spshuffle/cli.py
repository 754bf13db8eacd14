"""Command-line front end.

Subcommands: series, count, factorize, doppelganger, oracle, tree-shuffles,
verify.  Poset input comes from exactly one of --expr (infix DSL: "*" is
ordinal sum and binds tighter than "|", disjoint union), --rpn
(space-separated tokens, operators U and O), or --hasse (JSON file, "-" for
stdin).  Exit codes: 1 usage error, 2 not series-parallel, 3 too large,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import NotSeriesParallelError, SpShuffleError, TooLargeError
from .expressions import factorize, parse_expr, parse_rpn, expr_to_poset
from .oracle import (
    DEFAULT_SHUFFLE_CAP,
    MapMode,
    count_left_dd_oracle,
    count_monotone_maps,
    count_right_dd_oracle,
    enumerate_colimit_shuffles,
    lattice_points,
    oracle_d_vector,
)
from .posets import poset_from_hasse_json
from .series import SeriesForm, evaluate, expand_coefficients, form_coefficients
from .trees import count_tree_shuffles, parse_tree, reduce
from .verification import run_cross_checks

SCHEMA_VERSIONS = {
    "hasse": 1,
    "vector": 1,
    "polynomial": 1,
    "factorization": 1,
    "shuffle": 1,
}

_KINDS = {
    "shuffle": SeriesForm.SHUFFLE,
    "strict": SeriesForm.STRICT,
    "weak": SeriesForm.WEAK,
    "weaksurj": SeriesForm.WEAK_SURJ,
    "rdd": SeriesForm.RIGHT_DD,
    "ldd": SeriesForm.LEFT_DD,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_poset_input(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--expr", help="poset expression, e.g. '(1|1)*(1|1)'")
    group.add_argument("--rpn", help="space-separated RPN tokens, e.g. 'r q U s t U O'")
    group.add_argument("--hasse", help="Hasse JSON file path, or - for stdin")


def _load_poset(args):
    if args.expr is not None:
        return expr_to_poset(parse_expr(args.expr))
    if args.rpn is not None:
        return expr_to_poset(parse_rpn(args.rpn.split()))
    text = sys.stdin.read() if args.hasse == "-" else open(args.hasse, encoding="utf-8").read()
    return poset_from_hasse_json(json.loads(text))


def _emit(payload, as_json, text):
    print(json.dumps(payload, sort_keys=True) if as_json else text)


def _coeff_text(coeffs):
    return "{" + ", ".join(f"{i}: {c}" for i, c in sorted(coeffs.items())) + "}"


def build_parser():
    parser = _Parser(prog="spshuffle", description=__doc__)
    parser.add_argument("--schema", action="store_true", help="print schema versions and exit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("series", help="shuffle vector of a series-parallel poset")
    _add_poset_input(p)
    p.add_argument("--basis", choices=sorted(_KINDS), default="shuffle",
                   help="which of the six series forms to print")
    p.add_argument("--expand", type=int, metavar="N",
                   help="print the first N+1 Maclaurin coefficients instead")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="closed-form count at --n")
    _add_poset_input(p)
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("factorize", help="canonical series-parallel factorization")
    _add_poset_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("doppelganger", help="compare the order series of two expressions")
    p.add_argument("--a", required=True, help="first poset expression")
    p.add_argument("--b", required=True, help="second poset expression")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="brute-force counts and shuffle listings")
    _add_poset_input(p)
    p.add_argument(
        "--kind",
        choices=["shuffle", "rdd", "ldd", "strict", "weak", "strictsurj",
                 "weaksurj", "lattice", "dvector", "extensions"],
        required=True,
    )
    p.add_argument("--n", type=int, help="chain size (not used by dvector/extensions)")
    p.add_argument("--list", action="store_true",
                   help="with --kind shuffle: emit each shuffle's Hasse JSON")
    p.add_argument("--cap", type=int, help="override the |P|+n enumeration cap")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("tree-shuffles", help="shuffles of a tree with a linear tree")
    p.add_argument("--tree", required=True, help="nested parentheses, e.g. '(()())'")
    p.add_argument("--n", type=int, required=True, help="vertices of the linear tree")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="closed forms vs oracle on all small SP posets")
    p.add_argument("--max-points", type=int, default=5)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--reciprocity-n", type=int, default=6)
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_series(args):
    p = _load_poset(args)
    u = evaluate(factorize(p))
    form = _KINDS[args.basis]
    if form is SeriesForm.SHUFFLE:
        coeffs = u.coeffs()
    else:
        coeffs = form_coefficients(form, u, u.to_d_vector(len(p)))
    if args.expand is not None:
        if args.expand < 0:
            raise _UsageError("--expand must be nonnegative")
        vec = u if form is SeriesForm.SHUFFLE else u.to_d_vector(len(p))
        values = expand_coefficients(form, vec, args.expand)
        _emit({"form": args.basis, "coefficients": values}, args.json, " ".join(map(str, values)))
        return 0
    payload = {"basis": "SH" if form is SeriesForm.SHUFFLE else args.basis,
               "size": len(p),
               "coeffs": {str(i): c for i, c in coeffs.items()}}
    _emit(payload, args.json, _coeff_text(coeffs))
    return 0


def _cmd_count(args):
    if args.n < 0:
        raise _UsageError("--n must be nonnegative")
    p = _load_poset(args)
    u = evaluate(factorize(p))
    kind = _KINDS[args.kind]
    if kind is SeriesForm.SHUFFLE:
        value = u.count_shuffles(args.n)
    else:
        d = u.to_d_vector(len(p))
        if kind is SeriesForm.STRICT:
            value = d.count_strict(args.n)
        elif kind is SeriesForm.WEAK:
            value = d.count_weak(args.n)
        elif kind is SeriesForm.WEAK_SURJ:
            if args.n < 1:
                raise _UsageError("weaksurj needs --n >= 1")
            value = d.count_weak_surjective(args.n)
        elif kind is SeriesForm.RIGHT_DD:
            value = d.count_right_dd(args.n)
        else:
            value = d.count_left_dd(args.n)
    _emit({"kind": args.kind, "n": args.n, "count": value}, args.json, str(value))
    return 0


def _cmd_factorize(args):
    p = _load_poset(args)
    tree = factorize(p)
    _emit(tree.to_json(), args.json, tree.to_text())
    return 0


def _cmd_doppelganger(args):
    ua = evaluate(factorize(expr_to_poset(parse_expr(args.a))))
    ub = evaluate(factorize(expr_to_poset(parse_expr(args.b))))
    equal = ua == ub
    _emit({"equal": equal}, args.json, "equal" if equal else "different")
    return 0


def _cmd_oracle(args):
    p = _load_poset(args)
    if args.kind == "dvector":
        d = oracle_d_vector(p)
        _emit(d.to_json(), args.json, str(list(d.values())))
        return 0
    if args.kind == "extensions":
        value = p.linear_extensions()
        _emit({"kind": "extensions", "count": value}, args.json, str(value))
        return 0
    if args.n is None or args.n < 0:
        raise _UsageError(f"--kind {args.kind} needs a nonnegative --n")
    n = args.n
    cap = args.cap if args.cap is not None else DEFAULT_SHUFFLE_CAP
    if args.kind == "shuffle":
        shuffles = enumerate_colimit_shuffles(p, n, cap=cap)
        if args.list:
            payload = [a.to_hasse_json() for a in shuffles]
            if args.json:
                print(json.dumps(payload, sort_keys=True))
            else:
                for entry in payload:
                    print(json.dumps(entry, sort_keys=True))
            return 0
        value = len(shuffles)
    elif args.kind == "rdd":
        value = count_right_dd_oracle(p, n, cap=cap)
    elif args.kind == "ldd":
        value = count_left_dd_oracle(p, n, cap=cap)
    elif args.kind == "lattice":
        value = lattice_points(p, n)
    else:
        value = count_monotone_maps(p, n, MapMode(args.kind))
    _emit({"kind": args.kind, "n": n, "count": value}, args.json, str(value))
    return 0


def _cmd_tree_shuffles(args):
    if args.n < 0:
        raise _UsageError("--n must be nonnegative")
    tree = reduce(parse_tree(args.tree))
    value = count_tree_shuffles(tree, args.n)
    _emit({"tree": tree.to_text(), "n": args.n, "count": value}, args.json, str(value))
    return 0


def _cmd_verify(args):
    results = list(
        run_cross_checks(
            max_points=args.max_points,
            max_n=args.max_n,
            reciprocity_n=args.reciprocity_n,
        )
    )
    failures = [r for r in results if not r.ok]
    if args.json:
        print(
            json.dumps(
                {
                    "comparisons": len(results),
                    "mismatches": [
                        {
                            "poset": r.poset,
                            "check": r.check,
                            "n": r.n,
                            "closed_form": r.closed_form,
                            "brute_force": r.brute_force,
                        }
                        for r in failures
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        for r in failures:
            print(
                f"MISMATCH {r.check} poset={r.poset} n={r.n} "
                f"closed={r.closed_form} brute={r.brute_force}"
            )
        posets_checked = len({r.poset for r in results})
        status = "FAILED" if failures else "ok"
        print(
            f"verify {status}: {len(results)} comparisons over "
            f"{posets_checked} posets, {len(failures)} mismatches"
        )
    return 4 if failures else 0


_DISPATCH = {
    "series": _cmd_series,
    "count": _cmd_count,
    "factorize": _cmd_factorize,
    "doppelganger": _cmd_doppelganger,
    "oracle": _cmd_oracle,
    "tree-shuffles": _cmd_tree_shuffles,
    "verify": _cmd_verify,
}


def run(argv):
    """Parse and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.schema:
            print(json.dumps({"schemas": SCHEMA_VERSIONS, "version": __version__}, sort_keys=True))
            return 0
        if args.command is None:
            raise _UsageError("a subcommand is required (see --help)")
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except NotSeriesParallelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SpShuffleError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
