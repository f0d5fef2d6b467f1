"""Ordered-vector-space toolkit on R^n: lattice operations, strong and weak
relations, extensible cones and the weak Jordan decomposition of sampled
curves."""

__version__ = "0.1.0"

from .bv import (
    ScalarTrace,
    is_increasing_cone,
    is_increasing_scalar,
    is_wbv,
    jordan_scalar,
    total_variation,
    variation_function,
    weak_variation,
)
from .cone import (
    ExtensibleCone,
    build_cone,
    check_cone_axioms,
    check_norm_monotone,
    contains,
    leq,
    norming_functional,
    ray_cone_membership,
)
from .estimator import WeakJordanDecomposer
from .jordan import (
    DecompositionResult,
    decompose,
    degenerate_construction,
    verify_increasing_identity,
)
from .latcore import (
    abs_,
    check_lattice_identities,
    decompose_unique,
    is_inf_orthogonal,
    is_order_projection,
    is_orthogonal,
    join,
    meet,
    neg,
    pos,
)
from .relations import StrongRelation, related_to_zero_self, strongly_related
from .validation import DimensionMismatchError, DomainError, Tolerance
from .weakrel import (
    Functional,
    SampledCurve,
    find_witness_functional,
    range_span_basis,
    weakly_related,
)
