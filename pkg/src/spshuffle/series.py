"""Exact arithmetic in the shuffle basis and the six counting forms.

Everything here is integer-exact.  A :class:`ShuffleVector` is a finite
combination sum_i c_i * SH(i) with SH(i) = 1/(1-x)^(i+1); it is the shared
coordinate system: the d-vector and all six series forms are sign flips and
basis swaps of the same coefficients.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache

from .errors import NonIntegerSolutionError, SupportOutOfRangeError


@lru_cache(maxsize=None)
def binomial_extended(a, b):
    """Binomial coefficient extended to negative upper index.

    C(a, b) = 0 for b < 0, the usual value for a >= 0, and
    (-1)^b * multiset(-a, b) for a < 0, which is the polynomial
    a(a-1)...(a-b+1)/b! on all integers.
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) if b <= a else 0
    return (-1) ** b * math.comb(-a + b - 1, b)


def multiset(n, k):
    """Selections of k items from n with repetition: C(n+k-1, k)."""
    return binomial_extended(n + k - 1, k)


@lru_cache(maxsize=None)
def _basis_parallel(n, m):
    """e_n (Hadamard) e_m as a coefficient tuple ((index, coeff), ...)."""
    if n < m:
        n, m = m, n
    return tuple(
        (n + r, (-1) ** (m - r) * math.comb(n + r, m) * math.comb(m, r))
        for r in range(m + 1)
    )


class ShuffleVector:
    """Sparse exact-integer vector over the basis {SH(i)}, i >= 0."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = dict(coeffs)
        self._coeffs = {i: c for i, c in items.items() if c}
        for i in self._coeffs:
            if i < 0:
                raise ValueError("basis indices must be nonnegative")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, k):
        return cls({k: 1})

    def coeffs(self):
        """Coefficients as a dict, sorted by basis index."""
        return dict(sorted(self._coeffs.items()))

    def support(self):
        return tuple(sorted(self._coeffs))

    def __getitem__(self, i):
        return self._coeffs.get(i, 0)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, ShuffleVector):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        inner = ", ".join(f"{i}: {c}" for i, c in sorted(self._coeffs.items()))
        return "{" + inner + "}"

    def __add__(self, other):
        out = dict(self._coeffs)
        for i, c in other._coeffs.items():
            out[i] = out.get(i, 0) + c
        return ShuffleVector(out)

    def __neg__(self):
        return ShuffleVector({i: -c for i, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return ShuffleVector({i: k * c for i, c in self._coeffs.items()})

    def parallel(self, other):
        """Disjoint-union action: bilinear extension of the Hadamard rule."""
        out = {}
        for n, a in self._coeffs.items():
            for m, b in other._coeffs.items():
                ab = a * b
                for k, c in _basis_parallel(n, m):
                    out[k] = out.get(k, 0) + ab * c
        return ShuffleVector(out)

    def series(self, other):
        """Ordinal-sum action: e_k (x) e_l = e_{k+l}, bilinearly."""
        out = {}
        for n, a in self._coeffs.items():
            for m, b in other._coeffs.items():
                out[n + m] = out.get(n + m, 0) + a * b
        return ShuffleVector(out)

    def count_shuffles(self, n):
        """Shuffles with chain(n): sum_i c_i * C(n+i, i).

        At n = 0 this is the coefficient sum (one shuffle: the poset itself).
        """
        return sum(c * math.comb(n + i, i) for i, c in self._coeffs.items())

    def to_d_vector(self, size):
        """Flip signs into the strict basis: d_i = (-1)^(size-i) c_i."""
        if any(i < 1 or i > size for i in self._coeffs):
            raise SupportOutOfRangeError(
                f"support {self.support()} outside 1..{size}"
            )
        d = [(-1) ** (size - i) * self._coeffs.get(i, 0) for i in range(1, size + 1)]
        return DVector(d)

    def to_json(self, size=None):
        payload = {"basis": "SH", "coeffs": {str(i): c for i, c in self.coeffs().items()}}
        if size is not None:
            payload["size"] = size
        return payload

    @classmethod
    def from_json(cls, payload):
        if payload.get("basis") != "SH":
            raise ValueError(f"unexpected basis {payload.get('basis')!r}")
        return cls({int(i): int(c) for i, c in payload["coeffs"].items()})


def chain_vector(k):
    """SH(chain(k)) = e_k; k = 0 is the unit SH(empty) = 1/(1-x)."""
    if k < 0:
        raise ValueError("chain length must be nonnegative")
    return ShuffleVector.basis(k)


def parallel_compose(u, v):
    return u.parallel(v)


def series_compose(u, v):
    return u.series(v)


def evaluate(tree):
    """Fold a factorization tree to its shuffle vector (leaves become e_1)."""
    if tree.is_empty():
        return ShuffleVector.basis(0)
    if tree.is_leaf():
        return ShuffleVector.basis(1)
    left = evaluate(tree.left)
    right = evaluate(tree.right)
    if tree.op == "P":
        return left.parallel(right)
    return left.series(right)


def is_doppelganger(u, v):
    """Posets are Doppelgangers iff their shuffle vectors coincide."""
    return u == v


class DVector:
    """The Stanley d-vector (d_1, ..., d_size) in the strict basis.

    d_i counts strict surjective order-preserving maps onto chain(i);
    d_size is the number of linear extensions.  Trailing zeros are trimmed
    so that ``size`` is always the top nonzero index (the poset size), which
    pins the sign conventions of the weak-side forms.
    """

    __slots__ = ("_d",)

    def __init__(self, values):
        values = list(values)
        for v in values:
            if v < 0:
                raise NonIntegerSolutionError(
                    "negative d-coefficient: not a poset count sequence"
                )
        while values and values[-1] == 0:
            values.pop()
        self._d = tuple(values)

    @property
    def size(self):
        return len(self._d)

    def __getitem__(self, i):
        """d_i with 1-based index; zero outside 1..size."""
        if 1 <= i <= len(self._d):
            return self._d[i - 1]
        return 0

    def values(self):
        return self._d

    def __eq__(self, other):
        if not isinstance(other, DVector):
            return NotImplemented
        return self._d == other._d

    def __hash__(self):
        return hash(self._d)

    def __repr__(self):
        return f"DVector{self._d}"

    def to_shuffle_vector(self):
        n = self.size
        return ShuffleVector({i: (-1) ** (n - i) * d for i, d in enumerate(self._d, 1)})

    # -- the six counting forms ---------------------------------------------

    def count_strict(self, n):
        """Strict order-preserving maps into chain(n): sum d_i C(n, i)."""
        if self.size == 0:
            return 1
        return sum(d * binomial_extended(n, i) for i, d in enumerate(self._d, 1))

    def count_weak(self, n):
        """Weak order-preserving maps into chain(n)."""
        if self.size == 0:
            return 1
        s = self.size
        return sum(
            (-1) ** (s - i) * d * multiset(n, i) for i, d in enumerate(self._d, 1)
        )

    def count_weak_surjective(self, s):
        """Weak order-preserving maps onto chain(s): needs s >= 1."""
        if s < 1:
            raise ValueError("target chain must have at least one point")
        size = self.size
        return sum(
            (-1) ** (size - i) * binomial_extended(i - 1, s - 1) * self._d[i - 1]
            for i in range(s, size + 1)
        )

    def count_right_dd(self, n):
        """Right deck-divider shuffles with chain(n).

        Signs are (+, -, +, ...) on (d_size, d_{size-1}, ...); the diamond at
        n = 1 giving 5 is the pinned regression for this convention.
        """
        s = self.size
        return sum(
            (-1) ** (s - i) * d * binomial_extended(i - 1, n)
            for i, d in enumerate(self._d, 1)
        )

    def count_left_dd(self, n):
        """Left deck-divider shuffles with chain(n): sum d_i C(n-1, i)."""
        if self.size == 0:
            return 1 if n >= 1 else 0
        if n == 0:
            return 0
        return sum(d * binomial_extended(n - 1, i) for i, d in enumerate(self._d, 1))

    def strict_polynomial(self):
        """The strict count as a polynomial sum d_i C(n, i)."""
        return CountingPolynomial((0,) + self._d)

    def reciprocity_check(self, n):
        """Stanley reciprocity at n: weak(n) == (-1)^size * strict(-n)."""
        if n < 1:
            raise ValueError("reciprocity check needs n >= 1")
        lhs = self.count_weak(n)
        rhs = (-1) ** self.size * self.strict_polynomial().evaluate(-n)
        return lhs == rhs

    def to_json(self):
        return {
            "basis": "strict-d",
            "size": self.size,
            "coeffs": {str(i): d for i, d in enumerate(self._d, 1) if d},
        }


def d_from_counts(counts):
    """Solve count[n] = sum_{i<=n} d_i C(n, i) forward for the d-vector.

    ``counts[j]`` must be the strict map count into chain(j+1).  The system
    is unitriangular over the integers; a negative solution means the input
    cannot be the count sequence of a poset.
    """
    d = []
    for n, total in enumerate(counts, 1):
        rest = sum(d[i - 1] * math.comb(n, i) for i in range(1, n))
        d.append(total - rest)
    return DVector(d)


class CountingPolynomial:
    """Integer-valued polynomial stored over the binomial basis {C(n, i)}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def evaluate(self, n):
        """Exact value at any integer n (negative included)."""
        return sum(a * binomial_extended(n, i) for i, a in enumerate(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, CountingPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        terms = [f"{a}*C(n,{i})" for i, a in enumerate(self.coeffs) if a]
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return {"basis": "binomial", "coeffs": list(self.coeffs)}


class SeriesForm(enum.Enum):
    """The six closed forms sharing one coefficient vector."""

    SHUFFLE = "shuffle"
    STRICT = "strict"
    WEAK = "weak"
    WEAK_SURJ = "weaksurj"
    RIGHT_DD = "rdd"
    LEFT_DD = "ldd"


# -- exact truncated power series helpers (no binomials involved) ------------


def _shift(coeffs, k, order):
    return ([0] * k + list(coeffs))[: order + 1]


def _mul_one_minus_x(coeffs, order):
    out = list(coeffs[: order + 1])
    for i in range(len(out) - 1, 0, -1):
        out[i] -= out[i - 1]
    return out


def _div_one_minus_x(coeffs, order):
    out = list(coeffs[: order + 1]) + [0] * (order + 1 - len(coeffs))
    for i in range(1, order + 1):
        out[i] += out[i - 1]
    return out


def _inv_power(p, order):
    """Maclaurin coefficients of 1/(1-x)^p to the given order."""
    out = [1] + [0] * order
    for _ in range(p):
        out = _div_one_minus_x(out, order)
    return out


def _power(p, order):
    """Coefficients of (1-x)^p to the given order."""
    out = [1] + [0] * order
    for _ in range(p):
        out = _mul_one_minus_x(out, order)
    return out


def hadamard(a, b):
    """Pointwise product of two coefficient lists."""
    return [x * y for x, y in zip(a, b)]


def cauchy(a, b, order):
    """Truncated Cauchy product of two coefficient lists."""
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


def expand_coefficients(form, vector, order):
    """First ``order``+1 Maclaurin coefficients of the chosen closed form.

    Expansion is done by exact polynomial/geometric series arithmetic, so
    these values are an independent cross-check of the count functions.
    """
    out = [0] * (order + 1)

    def add(scaled, term):
        for i, c in enumerate(term[: order + 1]):
            out[i] += scaled * c

    if form is SeriesForm.SHUFFLE:
        for i, c in vector.coeffs().items():
            add(c, _inv_power(i + 1, order))
        return out

    d = vector
    size = d.size
    if size == 0:
        if form in (SeriesForm.STRICT, SeriesForm.WEAK):
            return [1] * (order + 1)
        if form is SeriesForm.LEFT_DD:
            return _shift(_inv_power(1, order), 1, order)
        return out
    for i in range(1, size + 1):
        di = d[i]
        if di == 0:
            continue
        sign = (-1) ** (size - i)
        if form is SeriesForm.STRICT:
            add(di, _shift(_inv_power(i + 1, order), i, order))
        elif form is SeriesForm.WEAK:
            add(sign * di, _shift(_inv_power(i + 1, order), 1, order))
        elif form is SeriesForm.WEAK_SURJ:
            add(sign * di, _shift(_power(i - 1, order), 1, order))
        elif form is SeriesForm.RIGHT_DD:
            add(sign * di, _power(i - 1, order))
        elif form is SeriesForm.LEFT_DD:
            add(di, _shift(_inv_power(i + 1, order), i + 1, order))
        else:
            raise ValueError(f"unknown form {form!r}")
    return out


def form_coefficients(form, vector, d=None):
    """The basis coefficients of one of the six forms, as {index: coeff}.

    SHUFFLE reads the c-vector; the other five are reparametrizations of the
    d-vector.
    """
    if form is SeriesForm.SHUFFLE:
        return vector.coeffs()
    size = d.size
    out = {}
    for i in range(1, size + 1):
        di = d[i]
        if di == 0:
            continue
        if form in (SeriesForm.STRICT, SeriesForm.LEFT_DD):
            out[i] = di
        else:
            out[i] = (-1) ** (size - i) * di
    return out
