"""Exact rational-homotopy calculator for GL_n(C(X)), Lc_n(C(X)) and gauge groups."""

__version__ = "0.1.0"

from .errors import (
    BasepointError,
    CapacityError,
    ComplexParseError,
    FactorizationError,
    GroupSpecError,
    InvalidParameterError,
    RatGaugeError,
    StabilityRangeError,
)
from .gauge import (
    GaugeResult,
    StabilizationReport,
    gauge_ranks,
    gl_ranks,
    lc_ranks,
    recover_cohomology,
    stabilization,
)
from .graded import GradedDims
from .hspace import (
    PoincarePoly,
    RationalHSpace,
    em_product,
    exterior_poincare,
    factor_poincare,
    hnil_report,
    odd_sphere,
    parse_group_spec,
    product,
    special_unitary_group,
    symplectic_group,
    trivial,
    unitary_group,
)
from .les import LesTable, build_les, verify_exactness
from .simplicial import (
    CoboundaryMatrix,
    SimplicialComplex,
    betti,
    builtin,
    coboundary,
    cone,
    disjoint_union,
    euler_characteristic,
    klein8,
    parse_complex,
    reduced_betti,
    rp2_6,
    simplex_boundary,
    suspension,
    torus7,
    wedge,
)
