"""
Hilbert bases of pointed cones and special basis elements.
"""

from .basis import (
    HilbertBasis,
    basis_from_elements,
    hilbert_basis,
    irreducible_candidates,
    is_irreducible,
    verify_hilbert_basis,
)
from .fundamental import fundamental_points, triangulate
from .special import pigeonhole_point, refine_to_support_minimal, support_minimal_element

__all__ = [
    "HilbertBasis",
    "hilbert_basis",
    "basis_from_elements",
    "irreducible_candidates",
    "is_irreducible",
    "verify_hilbert_basis",
    "fundamental_points",
    "triangulate",
    "support_minimal_element",
    "refine_to_support_minimal",
    "pigeonhole_point",
]
