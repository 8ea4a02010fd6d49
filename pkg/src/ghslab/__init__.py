"""Exact integer linear algebra for diagonal-plus-DAG matrices.

Build diag(d) + adjacency instances from weighted DAGs, compute Smith normal
forms and minor-gcd profiles exactly, enumerate fundamental-parallelepiped
points, and mechanically verify the structure theorems and the unit-count
conjecture over exhaustive or seeded-random sweeps.
"""

from .dag import (
    Dag,
    GapSet,
    Path,
    adjacency_matrix,
    bipartite_complete,
    bipartite_matching,
    complete_graph,
    enumerate_paths,
    family,
    family_b,
    family_c,
    gap_product,
    gaps,
    is_topological_ordering,
    longest_path_length,
    path_count,
    path_counts_to,
    path_graph,
    path_length_counts,
    relabel,
    topological_orientation,
)
from .errors import (
    CyclicGraphError,
    DiagonalDeletionError,
    DimensionMismatchError,
    GhsLabError,
    InvalidEdgeError,
    InvalidParamsError,
    NonConstantDiagonalError,
    NonPositiveDiagonalError,
    NotAPathError,
    NotBipartiteError,
    NotPermutationError,
    NotPrimeError,
    NotSquareError,
    NotTopologicalError,
    OutOfRangeError,
    ParseError,
    TooLargeError,
    ZeroMatrixError,
)
from .ghs import (
    DEFAULT_FPP_DET_CAP,
    GhsInstance,
    LiftedMatrix,
    band_submatrix,
    build,
    cokernel_order_counts,
    constant_diagonal,
    deletion_det_from_path_counts,
    deletion_submatrix,
    fpp_point_orders,
    fpp_points,
    lift,
    path_sum_det,
)
from .intmat import (
    IntMatrix,
    MinorGcdProfile,
    SnfResult,
    det,
    is_hnf,
    is_prime,
    minor_gcd_level,
    minor_gcd_profile,
    rank_mod_p,
    snf,
)
from .verify import (
    HOLDS,
    NOT_APPLICABLE,
    VIOLATED,
    ConjectureCase,
    VerificationReport,
    all_labeled_graphs,
    append_counterexample_log,
    check_b_family,
    check_bipartite_formula,
    check_c_family,
    check_conjecture,
    check_cyclic_cokernel,
    check_exact_largest,
    check_largest_bound,
    check_pairwise_coprime,
    check_prime_bipartite,
    conjecture_exhaustive,
    conjecture_random,
    family_reports,
    instance_descriptor,
    replay_counterexample_log,
    sweep_bipartite,
    sweep_bound_and_exact,
    sweep_bound_random,
    sweep_cyclic_random,
)

__version__ = "0.1.0"
