"""kep: exact invariants of the groupoids defined by an integer matrix pair.

A square nonnegative matrix A (no zero rows) and an equal-size integer
matrix B define a self-similar action on the paths of the graph of A and,
through it, an ample groupoid.  This package computes, in exact integer
arithmetic, the groupoid's homology and the K-theory of its algebra,
cross-checks the two through an independent inductive-limit model, decides
when two pairs cannot be Kakutani equivalent, and builds pairs realizing a
prescribed K-theory.
"""

from .abgroup import (
    FGAbelianGroup,
    direct_sum,
    from_cokernel,
    is_isomorphic,
    kernel_group,
)
from .dirlimit import (
    LimitElement,
    StationaryLimit,
    coker_one_minus_shift,
    eventual_kernel,
    ker_one_minus_shift,
    limit_equal,
)
from .errors import InputValidationError, InternalError
from .groupoid import (
    PropertyReport,
    Slice,
    classify,
    compose_slices,
    invert_slice,
    parse_slice,
    refine_slice,
    slice_image_cylinder,
    slices_equal,
)
from .intmat import (
    IntMatrix,
    SnfDecomposition,
    det,
    hnf,
    is_irreducible,
    is_permutation,
    kernel_basis,
    snf,
)
from .invariants import (
    ComparisonReport,
    HkEvidence,
    HomologyTuple,
    InvariantReport,
    Operand,
    RealizeResult,
    analyze,
    compare,
    hk_check,
    homology,
    ktheory,
    limit_route_homology,
    rank_constraint_holds,
    realize,
    sft_homology,
)
from .selfsim import (
    Edge,
    EventuallyPeriodicPath,
    Graph,
    Path,
    PseudoFreeness,
    build_graph,
    fixes_path,
    is_pseudo_free,
    kappa_edge,
    kappa_path,
    kappa_path_preimage,
    parse_edge,
    parse_path,
    phi_vertex_sum,
    supports_match,
)

__version__ = "0.1.0"

__all__ = [
    "FGAbelianGroup",
    "direct_sum",
    "from_cokernel",
    "is_isomorphic",
    "kernel_group",
    "LimitElement",
    "StationaryLimit",
    "coker_one_minus_shift",
    "eventual_kernel",
    "ker_one_minus_shift",
    "limit_equal",
    "InputValidationError",
    "InternalError",
    "PropertyReport",
    "Slice",
    "classify",
    "compose_slices",
    "invert_slice",
    "parse_slice",
    "refine_slice",
    "slice_image_cylinder",
    "slices_equal",
    "IntMatrix",
    "SnfDecomposition",
    "det",
    "hnf",
    "is_irreducible",
    "is_permutation",
    "kernel_basis",
    "snf",
    "ComparisonReport",
    "HkEvidence",
    "HomologyTuple",
    "InvariantReport",
    "Operand",
    "RealizeResult",
    "analyze",
    "compare",
    "hk_check",
    "homology",
    "ktheory",
    "limit_route_homology",
    "rank_constraint_holds",
    "realize",
    "sft_homology",
    "Edge",
    "EventuallyPeriodicPath",
    "Graph",
    "Path",
    "PseudoFreeness",
    "build_graph",
    "fixes_path",
    "is_pseudo_free",
    "kappa_edge",
    "kappa_path",
    "kappa_path_preimage",
    "parse_edge",
    "parse_path",
    "phi_vertex_sum",
    "supports_match",
    "__version__",
]
