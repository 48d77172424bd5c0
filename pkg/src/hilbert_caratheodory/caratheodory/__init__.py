"""
Decomposition strategies and the certifying oracles.
"""

from .descent import decompose_face_descent, descent_guarantee
from .lp_rounding import (
    d_density,
    d_membership,
    decompose_lp_rounding,
    integral_point_of_Q,
    search_integral_point,
)
from .oracle import (
    BoxMaximum,
    DensityRow,
    box_points,
    cr_box,
    density,
    sigma_cap_bound,
    sigma,
    verify_decomposition,
)

__all__ = [
    "sigma",
    "sigma_cap_bound",
    "cr_box",
    "density",
    "box_points",
    "BoxMaximum",
    "DensityRow",
    "verify_decomposition",
    "search_integral_point",
    "integral_point_of_Q",
    "d_membership",
    "d_density",
    "decompose_lp_rounding",
    "decompose_face_descent",
    "descent_guarantee",
]
