"""Condition counting on curves and the plane-curve vanishing-sequence oracle."""

from .plane_curves import (
    INFINITE,
    CurveError,
    PlanePointedCurve,
    PowerSeriesBranch,
    VanishingResult,
    branch_expand,
    intersection_multiplicity,
    is_smooth,
    order_along_branch,
    parse_point,
    parse_polynomial,
    vanishing_data,
    vanishing_sequence_at_point,
)
from .riemann_roch import (
    LineBundleData,
    RiemannRochError,
    conditions_imposed,
    h0,
    h0_generic,
    torsion_count,
)
