"""
Text formats for inputs, bases and reports.
"""

from .formats import (
    format_basis,
    format_cone,
    format_decomposition,
    format_density,
    format_matrix,
    format_polytope,
    format_trace,
    format_vector,
    parse_basis,
    parse_block,
    parse_cone,
    parse_matrix,
    parse_polytope,
    parse_vector,
    read_basis,
    read_cone,
    read_matrix,
    read_polytope,
    write_text,
)

__all__ = [
    "parse_block",
    "parse_vector",
    "parse_matrix",
    "parse_cone",
    "parse_polytope",
    "parse_basis",
    "read_matrix",
    "read_cone",
    "read_polytope",
    "read_basis",
    "format_vector",
    "format_matrix",
    "format_cone",
    "format_polytope",
    "format_basis",
    "format_trace",
    "format_decomposition",
    "format_density",
    "write_text",
]
