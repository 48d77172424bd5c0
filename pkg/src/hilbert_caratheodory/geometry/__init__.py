"""
Cones, polyhedra, lattice points and face projections.
"""

from .cone import (
    BOUNDARY,
    INTERIOR,
    OUTSIDE,
    ConeH,
    IntrinsicFrame,
    Membership,
    cone_product,
    extreme_rays,
    facet_cone,
    facet_rows,
    intrinsic_cone,
    intrinsic_frame,
    membership,
    simplicial_cone,
    zero_cone,
)
from .face import FaceProjection, cone_face_projection, face_projection, lift_point, project_point
from .polytope import Polytope, box_polytope, lattice_points, nonzero_lattice_points, unit_parallelepiped

__all__ = [
    "INTERIOR",
    "BOUNDARY",
    "OUTSIDE",
    "ConeH",
    "IntrinsicFrame",
    "Membership",
    "membership",
    "extreme_rays",
    "facet_rows",
    "facet_cone",
    "intrinsic_frame",
    "intrinsic_cone",
    "cone_product",
    "zero_cone",
    "simplicial_cone",
    "Polytope",
    "box_polytope",
    "unit_parallelepiped",
    "lattice_points",
    "nonzero_lattice_points",
    "FaceProjection",
    "face_projection",
    "cone_face_projection",
    "lift_point",
    "project_point",
]
