"""
Seeded random instances and the acceptance suites built on them.
"""

from .instances import (
    instance_rng,
    random_cone_point,
    random_delta2_matrix,
    random_face_point,
    random_integer_matrix,
    random_simplicial_matrix,
    random_small_cone,
    random_unimodular,
)
from .suites import DEFAULT_COUNTS, SUITES, SuiteOptions, format_summary, run_suite

__all__ = [
    "instance_rng",
    "random_unimodular",
    "random_delta2_matrix",
    "random_simplicial_matrix",
    "random_small_cone",
    "random_cone_point",
    "random_face_point",
    "random_integer_matrix",
    "SuiteOptions",
    "SUITES",
    "DEFAULT_COUNTS",
    "run_suite",
    "format_summary",
]
