"""Finite labeled posets.

A :class:`Poset` stores a reflexively and transitively closed relation as a
bit matrix over point indices, with points kept in insertion order.  All
values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import itertools
from functools import cached_property

from .errors import (
    CycleDetectedError,
    DuplicateLabelError,
    TooLargeError,
    UnknownLabelError,
)

#: Default cap for the factorially exploding enumerations (chains,
#: extensions).  Callers may raise it explicitly.
DEFAULT_ENUM_CAP = 10

#: Cap for the brute-force isomorphism search.
ISO_CAP = 8


def _close(rows):
    """Warshall pass over ``up`` bit rows; rows[i] has bit j iff p_i <= p_j."""
    n = len(rows)
    for k in range(n):
        mask = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & mask:
                rows[i] |= rk
    return rows


class Poset:
    """Immutable finite poset on string labels.

    Do not call the constructor directly; use :func:`poset_from_relations`,
    :func:`chain`, :func:`antichain` or the combination operations, which
    validate their input.
    """

    __slots__ = ("points", "_index", "_up", "__dict__")

    def __init__(self, points, up_rows, _validated=False):
        if not _validated:
            raise TypeError("use poset_from_relations() to build posets")
        self.points = tuple(points)
        self._index = {p: i for i, p in enumerate(self.points)}
        self._up = tuple(up_rows)

    # -- basic queries ------------------------------------------------------

    def __len__(self):
        return len(self.points)

    def __contains__(self, label):
        return label in self._index

    def leq(self, a, b):
        """True iff a <= b (labels must exist)."""
        return bool(self._up[self._index[a]] >> self._index[b] & 1)

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def relation(self):
        """The closed relation as a frozenset of (a, b) pairs, a <= b."""
        pairs = set()
        for i, p in enumerate(self.points):
            row = self._up[i]
            for j, q in enumerate(self.points):
                if row >> j & 1:
                    pairs.add((p, q))
        return frozenset(pairs)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.points) == set(other.points) and self.relation() == other.relation()

    def __hash__(self):
        return hash((frozenset(self.points), self.relation()))

    def __repr__(self):
        covers = ", ".join(f"{a}<{b}" for a, b in self.hasse())
        return f"Poset({list(self.points)!r}, [{covers}])"

    # -- structure ----------------------------------------------------------

    @cached_property
    def _down(self):
        n = len(self.points)
        rows = [0] * n
        for i in range(n):
            up = self._up[i]
            for j in range(n):
                if up >> j & 1:
                    rows[j] |= 1 << i
        return tuple(rows)

    def hasse(self):
        """Cover pairs (transitive reduction), sorted by label pair."""
        out = []
        n = len(self.points)
        for i in range(n):
            strict_up = self._up[i] & ~(1 << i)
            for j in range(n):
                if strict_up >> j & 1:
                    between = strict_up & self._down[j] & ~(1 << j)
                    if between == 0:
                        out.append((self.points[i], self.points[j]))
        return sorted(out)

    def minima(self):
        return tuple(
            p
            for i, p in enumerate(self.points)
            if self._down[i] == 1 << i
        )

    def maxima(self):
        return tuple(
            p
            for i, p in enumerate(self.points)
            if self._up[i] == 1 << i
        )

    def down_set(self, a):
        """Labels b with b <= a."""
        i = self._index[a]
        return tuple(p for j, p in enumerate(self.points) if self._down[i] >> j & 1)

    def up_set(self, a):
        i = self._index[a]
        return tuple(p for j, p in enumerate(self.points) if self._up[i] >> j & 1)

    def restrict(self, labels):
        """Induced subposet on the given labels (kept in this poset's order)."""
        keep = [p for p in self.points if p in set(labels)]
        rel = [(a, b) for a in keep for b in keep if a != b and self.leq(a, b)]
        return poset_from_relations(keep, rel)

    def dual(self):
        """The opposite poset (all relations reversed)."""
        rel = [(b, a) for a, b in self.hasse()]
        return poset_from_relations(self.points, rel)

    def relabel(self, mapping):
        """Rename points through ``mapping`` (must be injective on points)."""
        new_points = [mapping[p] for p in self.points]
        if len(set(new_points)) != len(new_points):
            raise DuplicateLabelError("relabeling is not injective")
        return Poset(new_points, self._up, _validated=True)

    # -- chain / extension enumeration --------------------------------------

    def _check_cap(self, cap):
        if len(self.points) > cap:
            raise TooLargeError(
                f"poset has {len(self.points)} points, cap is {cap}"
            )

    @cached_property
    def _lower_set_masks(self):
        """All lower sets as bitmasks, ascending by popcount then value."""
        n = len(self.points)
        masks = [0]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for mask in frontier:
                for i in range(n):
                    if mask >> i & 1:
                        continue
                    # adding p_i keeps a lower set iff everything below is in
                    if self._down[i] & ~mask & ~(1 << i):
                        continue
                    new = mask | 1 << i
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
            masks.extend(nxt)
            frontier = nxt
        return sorted(masks, key=lambda m: (m.bit_count(), m))

    def linear_extensions(self, cap=DEFAULT_ENUM_CAP):
        """Number of total orders extending the poset."""
        self._check_cap(cap)
        full = (1 << len(self.points)) - 1
        ways = {0: 1}
        for mask in self._lower_set_masks:
            if mask == 0:
                continue
            total = 0
            for i in range(len(self.points)):
                if mask >> i & 1 and self._up[i] & mask == 1 << i:
                    total += ways[mask & ~(1 << i)]
            ways[mask] = total
        return ways[full]

    def linear_extension_list(self, cap=DEFAULT_ENUM_CAP):
        """All linear extensions as label tuples, lexicographically sorted."""
        self._check_cap(cap)
        n = len(self.points)
        out = []

        def grow(mask, acc):
            if len(acc) == n:
                out.append(tuple(acc))
                return
            for i in range(n):
                if not mask >> i & 1 and self._down[i] & ~mask & ~(1 << i) == 0:
                    acc.append(self.points[i])
                    grow(mask | 1 << i, acc)
                    acc.pop()

        grow(0, [])
        return sorted(out)

    def lower_set_chains(self, i, cap=DEFAULT_ENUM_CAP):
        """Chains of lower sets 0=I_0 < I_1 < ... < I_i = P with antichain steps.

        Each difference I_j \\ I_{j-1} must be a nonempty antichain; the count
        equals the number of strict surjective order-preserving maps onto an
        i-chain.
        """
        self._check_cap(cap)
        if not 1 <= i <= len(self.points):
            raise ValueError(f"step count {i} outside 1..{len(self.points)}")
        full = (1 << len(self.points)) - 1
        ways = {0: {0: 1}}
        for mask in self._lower_set_masks:
            if mask == 0:
                continue
            # removable antichains are exactly the nonempty subsets of the
            # maximal elements of the induced sub-poset on ``mask``
            maxima = [
                j
                for j in range(len(self.points))
                if mask >> j & 1 and self._up[j] & mask == 1 << j
            ]
            acc = {}
            for r in range(1, len(maxima) + 1):
                for combo in itertools.combinations(maxima, r):
                    below = mask
                    for j in combo:
                        below &= ~(1 << j)
                    for k, c in ways[below].items():
                        acc[k + 1] = acc.get(k + 1, 0) + c
            ways[mask] = acc
        return ways[full].get(i, 0)

    def maximal_chains(self, cap=DEFAULT_ENUM_CAP):
        """All maximal chains as label tuples, lexicographically sorted."""
        self._check_cap(cap)
        covers = {}
        for a, b in self.hasse():
            covers.setdefault(a, []).append(b)
        out = []

        def walk(p, acc):
            succs = covers.get(p, [])
            if not succs:
                out.append(tuple(acc))
                return
            for q in succs:
                acc.append(q)
                walk(q, acc)
                acc.pop()

        for m in self.minima():
            walk(m, [m])
        return sorted(out)

    # -- predicates ----------------------------------------------------------

    def series_parallel_witness(self):
        """An induced-N witness (m, l, n, k), or None if the poset is N-free."""
        pts = self.points
        for quad in itertools.combinations(pts, 4):
            for m, l, n, k in itertools.permutations(quad):
                if (
                    self.lt(m, l)
                    and self.lt(n, l)
                    and self.lt(n, k)
                    and not (self.leq(m, n) or self.leq(n, m))
                    and not (self.leq(m, k) or self.leq(k, m))
                    and not (self.leq(l, k) or self.leq(k, l))
                ):
                    return (m, l, n, k)
        return None

    def is_series_parallel(self):
        return self.series_parallel_witness() is None

    def is_isomorphic(self, other, cap=ISO_CAP):
        """True iff an order-preserving bijection onto ``other`` exists."""
        if len(self.points) > cap or len(other.points) > cap:
            raise TooLargeError(f"isomorphism search capped at {cap} points")
        if len(self.points) != len(other.points):
            return False

        def profile(poset):
            return sorted(
                (len(poset.down_set(p)), len(poset.up_set(p))) for p in poset.points
            )

        if profile(self) != profile(other):
            return False

        n = len(self.points)
        other_idx = list(range(n))

        def compatible(partial, i, j):
            # mapping p_i -> q_j; check order against already mapped points
            for i2, j2 in partial.items():
                a = bool(self._up[i] >> i2 & 1)
                b = bool(other._up[j] >> other_idx[j2] & 1)
                if a != b:
                    return False
                a = bool(self._up[i2] >> i & 1)
                b = bool(other._up[j2] >> j & 1)
                if a != b:
                    return False
            return True

        def search(i, partial, used):
            if i == n:
                return True
            for j in range(n):
                if j not in used and compatible(partial, i, j):
                    partial[i] = j
                    used.add(j)
                    if search(i + 1, partial, used):
                        return True
                    del partial[i]
                    used.discard(j)
            return False

        return search(0, {}, set())

    # -- serialization -------------------------------------------------------

    def to_hasse_json(self):
        """Hasse JSON payload: points plus cover pairs only."""
        return {
            "points": list(self.points),
            "covers": [list(pair) for pair in self.hasse()],
        }


def poset_from_relations(points, relations):
    """Build a poset as the reflexive-transitive closure of ``relations``.

    Raises :class:`DuplicateLabelError`, :class:`UnknownLabelError`, or
    :class:`CycleDetectedError` when the closure violates antisymmetry.
    """
    points = [str(p) for p in points]
    seen = set()
    for p in points:
        if p in seen:
            raise DuplicateLabelError(f"duplicate point label {p!r}")
        seen.add(p)
    index = {p: i for i, p in enumerate(points)}
    rows = [1 << i for i in range(len(points))]
    for a, b in relations:
        a, b = str(a), str(b)
        if a not in index:
            raise UnknownLabelError(f"unknown label {a!r} in relation")
        if b not in index:
            raise UnknownLabelError(f"unknown label {b!r} in relation")
        rows[index[a]] |= 1 << index[b]
    _close(rows)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if rows[i] >> j & 1 and rows[j] >> i & 1:
                raise CycleDetectedError(
                    f"{points[i]!r} and {points[j]!r} are mutually below each other"
                )
    return Poset(points, rows, _validated=True)


def poset_from_hasse_json(payload):
    """Inverse of :meth:`Poset.to_hasse_json`; the closure is recomputed."""
    return poset_from_relations(payload["points"], payload["covers"])


def chain(n):
    """The n-chain 1 < 2 < ... < n; n = 0 gives the empty poset."""
    if n < 0:
        raise ValueError("chain length must be nonnegative")
    labels = [str(i) for i in range(1, n + 1)]
    return poset_from_relations(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def antichain(n):
    """n pairwise incomparable points."""
    return poset_from_relations([str(i) for i in range(1, n + 1)], [])


def _combine_closed(points, rows):
    return Poset(points, rows, _validated=True)


def lexicographic_sum(p, subs):
    """Substitute ``subs[i]`` for the i-th point of ``p`` (in point order).

    Labels of the i-th block are prefixed with ``"{i+1}."`` so the result's
    points are always disjoint and the origin of each point stays readable.
    """
    from .errors import ArityMismatchError

    if len(subs) != len(p.points):
        raise ArityMismatchError(
            f"expected {len(p.points)} sub-posets, got {len(subs)}"
        )
    points = []
    offsets = []
    for i, q in enumerate(subs):
        offsets.append(len(points))
        points.extend(f"{i + 1}.{x}" for x in q.points)
    n = len(points)
    rows = [1 << i for i in range(n)]
    for i, q in enumerate(subs):
        base = offsets[i]
        for a in range(len(q.points)):
            for b in range(len(q.points)):
                if q._up[a] >> b & 1:
                    rows[base + a] |= 1 << (base + b)
    for i in range(len(p.points)):
        for j in range(len(p.points)):
            if i != j and p._up[i] >> j & 1:
                block = 0
                for b in range(len(subs[j].points)):
                    block |= 1 << (offsets[j] + b)
                for a in range(len(subs[i].points)):
                    rows[offsets[i] + a] |= block
    return _combine_closed(points, rows)


def _two_block_sum(p, q, related):
    points = [f"L.{x}" for x in p.points] + [f"R.{x}" for x in q.points]
    np_, nq = len(p.points), len(q.points)
    rows = [0] * (np_ + nq)
    for i in range(np_):
        rows[i] = p._up[i]
    qblock = 0
    for j in range(nq):
        rows[np_ + j] = q._up[j] << np_
        qblock |= 1 << (np_ + j)
    if related:
        for i in range(np_):
            rows[i] |= qblock
    return _combine_closed(points, rows)


def disjoint_union(p, q):
    """Union of points with no cross relations; labels prefixed L. / R."""
    return _two_block_sum(p, q, related=False)


def ordinal_sum(p, q):
    """Every point of ``p`` below every point of ``q``; labels L. / R.

    The full cross relation (not only maxima-below-minima) is what the
    lexicographic sum induces and what makes chains add up.
    """
    return _two_block_sum(p, q, related=True)
