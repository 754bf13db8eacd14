"""Brute-force ground truth at desk scale.

Order-preserving maps are counted by exhaustive assignment; shuffles are
enumerated through their indexing data.  A shuffle of P with chain(n)
assigns every point of P a slot in {0..n} (the number of chain points
below it), weakly monotone along P; each maximal chain of P then carries
the classical interleaving the slots dictate, and the shuffle object glues
those chains.  Chain points shared by several maximal chains are glued per
flanking segment, so a chain point may appear as several nodes; this is
exactly how the source figures draw them, and it keeps the minima/maxima
counts of the glued object equal to those of P.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import GroundSetMismatchError, TooLargeError
from .posets import Poset, chain, poset_from_relations
from .series import DVector

#: Joint cap on |P| + n for shuffle enumeration.
DEFAULT_SHUFFLE_CAP = 7

#: Assignment guard for map counting: n^|P| must stay below this.
DEFAULT_ASSIGNMENT_GUARD = 10**8

#: Brute-force d-vectors are restricted to this many points.
DEFAULT_DVECTOR_CAP = 7


class MapMode(enum.Enum):
    STRICT = "strict"
    WEAK = "weak"
    STRICT_SURJECTIVE = "strictsurj"
    WEAK_SURJECTIVE = "weaksurj"

    @property
    def strict(self):
        return self in (MapMode.STRICT, MapMode.STRICT_SURJECTIVE)

    @property
    def surjective(self):
        return self in (MapMode.STRICT_SURJECTIVE, MapMode.WEAK_SURJECTIVE)


def count_monotone_maps(p, n, mode, guard=DEFAULT_ASSIGNMENT_GUARD):
    """Count order-preserving maps P -> chain(n) by exhaustive assignment."""
    if n < 0:
        raise ValueError("chain size must be nonnegative")
    k = len(p)
    if k == 0:
        # the empty map; it is surjective only onto the empty chain
        return 1 if (not mode.surjective or n == 0) else 0
    if n == 0:
        return 0
    if n**k > guard:
        raise TooLargeError(f"{n}^{k} assignments exceed the {guard} guard")

    order = sorted(p.points, key=lambda x: len(p.down_set(x)))
    preds = [
        [order.index(q) for q in p.down_set(x) if q != x] for x in order
    ]
    strict = mode.strict
    surjective = mode.surjective
    values = [0] * k
    total = 0

    def assign(idx, used):
        nonlocal total
        if idx == k:
            if not surjective or used == (1 << n) - 1:
                total += 1
            return
        if surjective:
            missing = n - used.bit_count()
            if missing > k - idx:
                return
        low = 1
        for j in preds[idx]:
            bound = values[j] + 1 if strict else values[j]
            if bound > low:
                low = bound
        for v in range(low, n + 1):
            values[idx] = v
            assign(idx + 1, used | (1 << (v - 1)))

    assign(0, 0)
    return total


def lattice_points(p, n, guard=DEFAULT_ASSIGNMENT_GUARD):
    """Lattice points of the n-th dilate of the order polytope of P.

    Computed combinatorially as the weak map count into chain(n+1).
    """
    return count_monotone_maps(p, n + 1, MapMode.WEAK, guard=guard)


def oracle_d_vector(p, cap=DEFAULT_DVECTOR_CAP, guard=DEFAULT_ASSIGNMENT_GUARD):
    """d_i = number of strict surjective maps onto chain(i), by brute force."""
    if len(p) > cap:
        raise TooLargeError(f"poset has {len(p)} points, d-vector cap is {cap}")
    return DVector(
        [
            count_monotone_maps(p, i, MapMode.STRICT_SURJECTIVE, guard=guard)
            for i in range(1, len(p) + 1)
        ]
    )


# ---------------------------------------------------------------------------
# shuffle enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledShuffle:
    """One shuffle of ``source`` with chain(n), with provenance-tagged points.

    ``poset`` is the glued object; ``tags`` maps each of its points to
    ("P", label) or ("chain", index).  A chain index may tag several points
    (one per flanking segment of P points); along every materialized chain
    in ``chains`` the indices 1..n each appear exactly once.  ``slots``
    is the defining weakly monotone assignment P -> {0..n}.
    """

    n: int
    poset: Poset
    tags: tuple  # ((point, ("P", label) | ("chain", index)), ...)
    chains: tuple  # tuple of point-name tuples, one per maximal chain
    slots: tuple  # ((p_label, slot), ...) in source point order

    def tag_of(self, point):
        return dict(self.tags)[point]

    def to_hasse_json(self):
        payload = self.poset.to_hasse_json()
        payload["tags"] = {
            point: (
                {"from": "P", "label": info[1]}
                if info[0] == "P"
                else {"from": "chain", "index": info[1]}
            )
            for point, info in self.tags
        }
        return payload


def _chain_node(i, below, above):
    return f"c{i}[{below or '-'}>{above or '-'}]"


def _materialize(p, n, slots):
    """Build the glued shuffle object for one slot assignment."""
    if len(p) == 0:
        nodes = [_chain_node(i, None, None) for i in range(1, n + 1)]
        poset = poset_from_relations(nodes, list(zip(nodes, nodes[1:])))
        tags = tuple((node, ("chain", i)) for i, node in enumerate(nodes, 1))
        seqs = (tuple(nodes),) if nodes else ()
        return LabeledShuffle(n, poset, tags, seqs, ())

    tags = {x: ("P", x) for x in p.points}
    sequences = []
    for m in p.maximal_chains(cap=len(p)):
        seq = []
        prev = None
        prev_slot = 0
        for x in m:
            for i in range(prev_slot + 1, slots[x] + 1):
                node = _chain_node(i, prev, x)
                tags[node] = ("chain", i)
                seq.append(node)
            seq.append(x)
            prev, prev_slot = x, slots[x]
        for i in range(prev_slot + 1, n + 1):
            node = _chain_node(i, prev, None)
            tags[node] = ("chain", i)
            seq.append(node)
        sequences.append(tuple(seq))

    points = list(p.points) + sorted(t for t in tags if t not in p._index)
    relations = []
    for seq in sequences:
        relations.extend(zip(seq, seq[1:]))
    poset = poset_from_relations(points, relations)
    slot_items = tuple((x, slots[x]) for x in p.points)
    return LabeledShuffle(n, poset, tuple(sorted(tags.items())), tuple(sequences), slot_items)


def _slot_assignments(p, n):
    """All weakly monotone maps P -> {0..n}, in deterministic order."""
    order = sorted(p.points, key=lambda x: len(p.down_set(x)))
    preds = [[q for q in p.down_set(x) if q != x] for x in order]
    slots = {}

    def grow(idx):
        if idx == len(order):
            yield dict(slots)
            return
        x = order[idx]
        low = max((slots[q] for q in preds[idx]), default=0)
        for v in range(low, n + 1):
            slots[x] = v
            yield from grow(idx + 1)
        slots.pop(x, None)

    yield from grow(0)


def enumerate_colimit_shuffles(p, n, cap=DEFAULT_SHUFFLE_CAP):
    """All shuffles of ``p`` with chain(n), sorted by slot assignment.

    The list is duplicate-free and every element passes
    :func:`validate_shuffle`.
    """
    if n < 0:
        raise ValueError("chain size must be nonnegative")
    if len(p) + n > cap:
        raise TooLargeError(f"|P| + n = {len(p) + n} exceeds the cap {cap}")
    out = [_materialize(p, n, slots) for slots in _slot_assignments(p, n)]
    out.sort(key=lambda a: tuple(s for _, s in a.slots))
    return out


def validate_shuffle(a, p, n):
    """Check the shuffle conditions for a candidate labeled object.

    Accepts any presentation (glued or single-copy) of a valid shuffle:
    restrictions must recover P and consistent chain data, each maximal
    chain must be a classical interleaving of a maximal chain of P with all
    of chain(n), and the per-point chain-position data must be well defined
    and weakly monotone.
    """
    tags = dict(a.tags)
    if set(tags) != set(a.poset.points):
        raise GroundSetMismatchError("tags do not cover the candidate's points")
    p_nodes = {node: info[1] for node, info in tags.items() if info[0] == "P"}
    chain_nodes = {node: info[1] for node, info in tags.items() if info[0] == "chain"}
    if sorted(p_nodes.values()) != sorted(p.points):
        raise GroundSetMismatchError("P-labeled points do not match the poset")
    if any(not 1 <= i <= n for i in chain_nodes.values()):
        raise GroundSetMismatchError("chain index outside 1..n")
    if a.n != n:
        raise GroundSetMismatchError(f"candidate built for n={a.n}, not {n}")

    # restriction to P-labeled points must equal P (up to the label map)
    sub = a.poset.restrict(p_nodes)
    renamed = sub.relabel(p_nodes)
    if renamed != p:
        return False

    # chain-index order must be respected, and copies of one index must not
    # straddle: no index may occur both below and above one point
    nodes = a.poset.points
    for u in nodes:
        for v in nodes:
            if u == v or not a.poset.lt(u, v):
                continue
            if u in chain_nodes and v in chain_nodes:
                if chain_nodes[u] >= chain_nodes[v]:
                    return False
    for x in p_nodes:
        below = {chain_nodes[u] for u in nodes if u in chain_nodes and a.poset.lt(u, x)}
        above = {chain_nodes[u] for u in nodes if u in chain_nodes and a.poset.lt(x, u)}
        if below & above:
            return False

    # every maximal chain must interleave a maximal chain of P with all of
    # chain(n), and the correspondence must be a bijection
    try:
        max_chains = a.poset.maximal_chains(cap=max(len(nodes), 1))
    except TooLargeError:  # pragma: no cover - cap equals the node count
        return False
    expected = set(p.maximal_chains(cap=max(len(p), 1))) if len(p) else set()
    seen = []
    for seq in max_chains:
        p_part = tuple(p_nodes[u] for u in seq if u in p_nodes)
        indices = [chain_nodes[u] for u in seq if u in chain_nodes]
        if indices != list(range(1, n + 1)):
            return False
        if len(p):
            if p_part not in expected:
                return False
            seen.append(p_part)
    if len(p) and (len(seen) != len(expected) or set(seen) != expected):
        return False

    # slots must be weakly monotone
    slot = {}
    for x in p_nodes:
        below = [chain_nodes[u] for u in nodes if u in chain_nodes and a.poset.lt(u, x)]
        slot[x] = max(below, default=0)
    for x in p_nodes:
        for y in p_nodes:
            if x != y and a.poset.lt(x, y) and slot[x] > slot[y]:
                return False
    return True


def count_right_dd_oracle(p, n, cap=DEFAULT_SHUFFLE_CAP):
    """Right deck-divider shuffles: filter the enumerated shuffles.

    Keeps a shuffle when some maximal chain tops out at a P point, some
    maximal chain starts at a P point, and every consecutive pair of chain
    points is separated by a P point on some maximal chain.
    """
    tags_p = lambda a, node: dict(a.tags)[node][0] == "P"
    count = 0
    for a in enumerate_colimit_shuffles(p, n, cap=cap):
        if not a.chains:
            continue
        if not any(tags_p(a, seq[-1]) for seq in a.chains):
            continue
        if not any(tags_p(a, seq[0]) for seq in a.chains):
            continue
        ok = True
        for i in range(1, n):
            separated = False
            for seq in a.chains:
                pos = {dict(a.tags)[u][1]: k for k, u in enumerate(seq) if not tags_p(a, u)}
                if i in pos and i + 1 in pos and pos[i + 1] - pos[i] > 1:
                    separated = True
                    break
            if not separated:
                ok = False
                break
        count += ok
    return count


def count_left_dd_oracle(p, n, cap=DEFAULT_SHUFFLE_CAP):
    """Left deck-divider shuffles: every maximal chain starts and ends with
    chain points and never has two consecutive P points."""
    count = 0
    for a in enumerate_colimit_shuffles(p, n, cap=cap):
        tags = dict(a.tags)
        is_p = lambda node: tags[node][0] == "P"
        ok = bool(a.chains)
        for seq in a.chains:
            if is_p(seq[0]) or is_p(seq[-1]):
                ok = False
                break
            if any(is_p(u) and is_p(v) for u, v in zip(seq, seq[1:])):
                ok = False
                break
        count += ok
    return count
