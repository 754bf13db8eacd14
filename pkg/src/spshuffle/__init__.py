"""Exact shuffle and order series of series-parallel posets.

The library computes, in exact integer arithmetic, the six generating
series attached to a finite series-parallel poset (colimit-indexing
shuffles, strict / weak / surjective-weak order-preserving maps, and the
two deck-divider shuffle families), together with brute-force oracles that
validate every closed form at desk scale.
"""

from .errors import (
    ArityMismatchError,
    CycleDetectedError,
    DuplicateLabelError,
    EmptyInputError,
    ExpressionSyntaxError,
    GroundSetMismatchError,
    LeftoverOperandsError,
    NonIntegerSolutionError,
    NotReducedError,
    NotSeriesParallelError,
    SpShuffleError,
    StackUnderflowError,
    SupportOutOfRangeError,
    TooLargeError,
    UnknownLabelError,
)
from .expressions import (
    FactorizationTree,
    PosetExpr,
    canonicalize,
    expr_to_poset,
    factorize,
    parse_expr,
    parse_rpn,
)
from .oracle import (
    LabeledShuffle,
    MapMode,
    count_left_dd_oracle,
    count_monotone_maps,
    count_right_dd_oracle,
    enumerate_colimit_shuffles,
    lattice_points,
    oracle_d_vector,
    validate_shuffle,
)
from .posets import (
    Poset,
    antichain,
    chain,
    disjoint_union,
    lexicographic_sum,
    ordinal_sum,
    poset_from_hasse_json,
    poset_from_relations,
)
from .series import (
    CountingPolynomial,
    DVector,
    SeriesForm,
    ShuffleVector,
    binomial_extended,
    chain_vector,
    d_from_counts,
    evaluate,
    expand_coefficients,
    is_doppelganger,
    multiset,
    parallel_compose,
    series_compose,
)
from .trees import (
    RootedTree,
    count_tree_shuffles,
    dendroidal_count,
    edge_poset,
    parse_tree,
    reduce,
    vertex_poset,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
