"""Poset expressions and series-parallel factorization.

Two text front ends (an infix DSL and RPN token lists) produce
:class:`PosetExpr` syntax trees; :func:`factorize` decomposes an N-free
poset into a binary :class:`FactorizationTree` whose evaluation reproduces
the poset label-for-label.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import posets
from .errors import (
    EmptyInputError,
    ExpressionSyntaxError,
    LeftoverOperandsError,
    NotSeriesParallelError,
    StackUnderflowError,
)

# ---------------------------------------------------------------------------
# expression ASTs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PosetExpr:
    """AST node: POINT, CHAIN(k), SERIES(l, r) or PARALLEL(l, r)."""

    kind: str
    k: int = 0
    label: str | None = None
    children: tuple = ()

    @classmethod
    def point(cls, label=None):
        return cls("point", label=label)

    @classmethod
    def chain(cls, k):
        if k < 0:
            raise ValueError("chain length must be nonnegative")
        return cls("chain", k=k)

    @classmethod
    def series(cls, left, right):
        return cls("series", children=(left, right))

    @classmethod
    def parallel(cls, left, right):
        return cls("parallel", children=(left, right))

    def size(self):
        """Number of points of the denoted poset."""
        if self.kind == "point":
            return 1
        if self.kind == "chain":
            return self.k
        return self.children[0].size() + self.children[1].size()

    def to_text(self):
        """Render back to the infix DSL (leaf labels are dropped)."""
        if self.kind == "point":
            return "1"
        if self.kind == "chain":
            return f"c{self.k}"
        sep = "*" if self.kind == "series" else "|"
        parts = []
        for child in self.children:
            text = child.to_text()
            needs_parens = child.kind in ("series", "parallel") and (
                self.kind == "series" or child.kind != self.kind
            )
            parts.append(f"({text})" if needs_parens else text)
        return sep.join(parts)


# ---------------------------------------------------------------------------
# infix parser:  expr := term { "|" term } ;  term := atom { "*" atom }
#                atom := "1" | "c" INT | "(" expr ")"
# "*" (ordinal sum) binds tighter than "|" (disjoint union); both fold left.
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def fail(self, message):
        raise ExpressionSyntaxError(message, self.pos)


def parse_expr(text):
    """Parse the infix DSL into a :class:`PosetExpr`."""
    if not text.strip():
        raise EmptyInputError("empty expression")
    sc = _Scanner(text)
    expr = _parse_alternation(sc)
    if sc.peek() is not None:
        sc.fail(f"unexpected {sc.text[sc.pos]!r}")
    return expr


def _parse_alternation(sc):
    node = _parse_term(sc)
    while sc.peek() == "|":
        sc.pos += 1
        node = PosetExpr.parallel(node, _parse_term(sc))
    return node


def _parse_term(sc):
    node = _parse_atom(sc)
    while sc.peek() == "*":
        sc.pos += 1
        node = PosetExpr.series(node, _parse_atom(sc))
    return node


def _parse_atom(sc):
    ch = sc.peek()
    if ch is None:
        sc.fail("expected an atom")
    if ch == "1":
        sc.pos += 1
        return PosetExpr.point()
    if ch == "c":
        sc.pos += 1
        start = sc.pos
        while sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
            sc.pos += 1
        if sc.pos == start:
            sc.fail("expected digits after 'c'")
        return PosetExpr.chain(int(sc.text[start : sc.pos]))
    if ch == "(":
        sc.pos += 1
        node = _parse_alternation(sc)
        if sc.peek() != ")":
            sc.fail("expected ')'")
        sc.pos += 1
        return node
    sc.fail(f"unexpected {ch!r}")


def parse_rpn(tokens):
    """Stack-evaluate RPN tokens: labels push points, U / O pop two.

    "U" is disjoint union (the paper's {c,d}) and "O" ordinal sum ({c<d});
    the first-popped operand is the right child.
    """
    stack = []
    for tok in tokens:
        if tok in ("U", "O"):
            if len(stack) < 2:
                raise StackUnderflowError(f"operator {tok!r} needs two operands")
            right = stack.pop()
            left = stack.pop()
            if tok == "U":
                stack.append(PosetExpr.parallel(left, right))
            else:
                stack.append(PosetExpr.series(left, right))
        else:
            stack.append(PosetExpr.point(label=tok))
    if not stack:
        raise EmptyInputError("no RPN tokens")
    if len(stack) > 1:
        raise LeftoverOperandsError(f"{len(stack)} values left on the stack")
    return stack[0]


# ---------------------------------------------------------------------------
# expression -> poset
# ---------------------------------------------------------------------------


def expr_to_poset(expr):
    """Evaluate an expression bottom-up to a poset.

    Explicit leaf labels (from RPN) are kept; anonymous points and chain
    atoms are named p1, p2, ... in leaf order, skipping any explicit labels.
    """
    explicit = set()

    def collect(e):
        if e.kind == "point" and e.label is not None:
            explicit.add(e.label)
        for c in e.children:
            collect(c)

    collect(expr)
    counter = [0]

    def fresh():
        while True:
            counter[0] += 1
            name = f"p{counter[0]}"
            if name not in explicit:
                return name

    points = []
    relations = []

    def build(e):
        """Returns the list of this subexpression's point labels."""
        if e.kind == "point":
            name = e.label if e.label is not None else fresh()
            points.append(name)
            return [name]
        if e.kind == "chain":
            names = [fresh() for _ in range(e.k)]
            points.extend(names)
            relations.extend(zip(names, names[1:]))
            return names
        left = build(e.children[0])
        right = build(e.children[1])
        if e.kind == "series":
            relations.extend((a, b) for a in left for b in right)
        return left + right

    build(expr)
    return posets.poset_from_relations(points, relations)


# ---------------------------------------------------------------------------
# factorization trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorizationTree:
    """Binary tree over S (series) / P (parallel) with point-label leaves.

    The empty tree stands for the empty poset; evaluating a tree with the
    poset operations reproduces the factorized poset with the same labels.
    """

    op: str  # "S", "P", "leaf" or "empty"
    label: str | None = None
    left: FactorizationTree | None = None
    right: FactorizationTree | None = None

    @classmethod
    def leaf(cls, label):
        return cls("leaf", label=label)

    @classmethod
    def empty(cls):
        return cls("empty")

    @classmethod
    def node(cls, op, left, right):
        if op not in ("S", "P"):
            raise ValueError(f"unknown operation {op!r}")
        return cls(op, left=left, right=right)

    def is_leaf(self):
        return self.op == "leaf"

    def is_empty(self):
        return self.op == "empty"

    def leaves(self):
        if self.is_empty():
            return ()
        if self.is_leaf():
            return (self.label,)
        return self.left.leaves() + self.right.leaves()

    def to_poset(self):
        """Evaluate with the poset operations, preserving leaf labels."""
        if self.is_empty():
            return posets.poset_from_relations([], [])
        points = list(self.leaves())
        relations = []

        def walk(t):
            if t.is_leaf():
                return [t.label]
            left = walk(t.left)
            right = walk(t.right)
            if t.op == "S":
                relations.extend((a, b) for a in left for b in right)
            return left + right

        walk(self)
        return posets.poset_from_relations(points, relations)

    def encoding(self):
        """Canonical string; structure first, labels as tie-breakers."""
        if self.is_empty():
            return "E"
        if self.is_leaf():
            return f"x[{self.label}]"
        return f"{self.op}({self.left.encoding()},{self.right.encoding()})"

    def shape(self):
        """Label-free encoding, used to sort parallel children."""
        if self.is_empty():
            return "E"
        if self.is_leaf():
            return "x"
        return f"{self.op}({self.left.shape()},{self.right.shape()})"

    def to_text(self, indent=0):
        """Indented multi-line rendering for the CLI."""
        pad = "  " * indent
        if self.is_empty():
            return f"{pad}(empty)"
        if self.is_leaf():
            return f"{pad}{self.label}"
        name = "series" if self.op == "S" else "parallel"
        lines = [f"{pad}{name}"]
        lines.append(self.left.to_text(indent + 1))
        lines.append(self.right.to_text(indent + 1))
        return "\n".join(lines)

    def to_json(self):
        if self.is_empty():
            return {"op": "empty", "children": []}
        if self.is_leaf():
            return {"leaf": self.label}
        return {"op": self.op, "children": [self.left.to_json(), self.right.to_json()]}


def _nest_right(op, children):
    node = children[-1]
    for child in reversed(children[:-1]):
        node = FactorizationTree.node(op, child, node)
    return node


def factorize(p):
    """Canonical series-parallel factorization of ``p``.

    Recursively splits on connected components of the comparability graph
    (parallel) and on the finest ordered partition into totally related
    blocks (series, right-nested).  Raises :class:`NotSeriesParallelError`
    with an induced-N witness when neither split applies.
    """
    if len(p) == 0:
        return FactorizationTree.empty()
    return canonicalize(_factorize(p))


def _components(labels, adjacent):
    seen = set()
    comps = []
    for start in labels:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in labels:
                if y not in seen and adjacent(x, y):
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _factorize(p):
    if len(p) == 1:
        return FactorizationTree.leaf(p.points[0])

    comparable = lambda x, y: p.leq(x, y) or p.leq(y, x)
    comps = _components(p.points, lambda x, y: x != y and comparable(x, y))
    if len(comps) > 1:
        children = [_factorize(p.restrict(c)) for c in comps]
        return _nest_right("P", children)

    blocks = _components(p.points, lambda x, y: x != y and not comparable(x, y))
    if len(blocks) > 1:
        # cross-block pairs are all comparable and uniformly directed, so
        # representatives give a total order on blocks
        blocks.sort(key=lambda b: sum(1 for x in p.points if p.lt(x, b[0])))
        children = [_factorize(p.restrict(b)) for b in blocks]
        return _nest_right("S", children)

    raise NotSeriesParallelError(p.series_parallel_witness())


def _flatten(t, op):
    if t.op == op:
        return _flatten(t.left, op) + _flatten(t.right, op)
    return [t]


def canonicalize(t):
    """Canonical representative: series right-nested, parallel children sorted.

    The associativity move and the swap of parallel inputs leave the
    evaluated series unchanged, so any two factorizations of one poset
    canonicalize to trees with equal shuffle vectors.  Idempotent.
    """
    if t.is_leaf() or t.is_empty():
        return t
    if t.op == "S":
        children = [canonicalize(c) for c in _flatten(t, "S")]
    else:
        children = [canonicalize(c) for c in _flatten(t, "P")]
        children.sort(key=lambda c: (c.shape(), c.encoding()))
    return _nest_right(t.op, children)
