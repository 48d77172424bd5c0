"""
Hilbert bases of rational pointed cones and short integer Carathéodory
decompositions.
"""

__version__ = "0.1.0"
