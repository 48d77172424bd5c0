"""
Exact integer and rational linear algebra.
"""

from .determinants import (
    LinearSolution,
    delta_modulus,
    det,
    gcd_max_minors,
    inverse,
    maximal_minors,
    rank,
    solve_linear,
)
from .matrix import IntMatrix, IntVector, RatVector, block_diagonal, int_vector, is_integral, rat_vector
from .normal_forms import HermiteDecomposition, SmithDecomposition, hermite, smith
from .simplex import LPSolution, OptimalVertex, lp_max_sum, maximize

__all__ = [
    "IntMatrix",
    "IntVector",
    "RatVector",
    "block_diagonal",
    "int_vector",
    "is_integral",
    "rat_vector",
    "LinearSolution",
    "det",
    "rank",
    "inverse",
    "delta_modulus",
    "gcd_max_minors",
    "maximal_minors",
    "solve_linear",
    "HermiteDecomposition",
    "SmithDecomposition",
    "hermite",
    "smith",
    "LPSolution",
    "OptimalVertex",
    "maximize",
    "lp_max_sum",
]
