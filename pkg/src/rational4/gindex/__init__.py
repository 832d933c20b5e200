"""Equivariant index arithmetic for cyclic actions on symplectic 4-manifolds."""

from rational4.gindex.profiles import (
    FixedPointProfile,
    FixedSurface,
    IsolatedPoint,
)
from rational4.gindex.indexthms import (
    InconsistentSpin,
    lefschetz_fix,
    signature_defect,
    signature_number,
    spin_coefficients,
    spin_k_point,
    spin_k_surface,
    spin_number,
    weak_checks,
)
from rational4.gindex.torus import (
    IntegralityViolation,
    TorusModel,
    integrality_failure_orders,
    order_admissible_pairs,
    torus_model,
)
from rational4.gindex.resolution import ResolutionData, hj_resolution
from rational4.gindex.search import ScenarioSpec, SearchResult, profile_search

__all__ = [
    "FixedPointProfile",
    "FixedSurface",
    "IsolatedPoint",
    "InconsistentSpin",
    "lefschetz_fix",
    "signature_defect",
    "signature_number",
    "spin_coefficients",
    "spin_k_point",
    "spin_k_surface",
    "spin_number",
    "weak_checks",
    "IntegralityViolation",
    "TorusModel",
    "integrality_failure_orders",
    "order_admissible_pairs",
    "torus_model",
    "ResolutionData",
    "hj_resolution",
    "ScenarioSpec",
    "SearchResult",
    "profile_search",
]
