"""
Determinants, ranks, maximal minors and exact linear solves.

Determinants are computed by sympy's fraction-free elimination over ZZ;
ranks and inverses over QQ. No floating point is involved anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, gcd
from typing import Iterator, Sequence, Tuple

from sympy import QQ

from ..config.settings import settings
from ..utils.error_handling import (
    GuardExceededError,
    RankDeficientError,
    ShapeError,
    SingularMatrixError,
)
from ..utils.logger import setup_logger
from .matrix import IntMatrix, RatVector

logger = setup_logger(__name__)

RatMatrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class LinearSolution:
    """Exact solution of a square system together with its Cramer denominator."""

    values: RatVector
    q: int


def _to_fraction(element) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def det(M: IntMatrix) -> int:
    """Exact determinant of a square integer matrix."""
    if not M.is_square:
        raise ShapeError(f"determinant of a non-square {M.nrows}x{M.ncols} matrix")
    return int(M.to_domain().det())


@lru_cache(maxsize=4096)
def rank(M: IntMatrix) -> int:
    """Exact rank over the rationals."""
    return int(M.to_domain().convert_to(QQ).rank())


@lru_cache(maxsize=4096)
def inverse(M: IntMatrix) -> RatMatrix:
    """Rational inverse of a square nonsingular integer matrix."""
    if det(M) == 0:
        raise SingularMatrixError(f"matrix {M} is singular")
    inv = M.to_domain().convert_to(QQ).inv()
    return tuple(tuple(_to_fraction(e) for e in row) for row in inv.to_list())


def rat_apply(R: RatMatrix, vector: Sequence) -> RatVector:
    """Product of a rational matrix (as rows) with a vector."""
    return tuple(sum((a * x for a, x in zip(row, vector)), Fraction(0)) for row in R)


def solve_linear(M: IntMatrix, b: Sequence[int]) -> LinearSolution:
    """
    Solve ``M x = b`` exactly.

    Returns the rational solution and ``q = |det M|``; ``q * x`` is integral
    by Cramer's rule.
    """
    if not M.is_square:
        raise ShapeError(f"cannot solve with a non-square {M.nrows}x{M.ncols} matrix")
    if len(b) != M.nrows:
        raise ShapeError(f"right-hand side of length {len(b)} does not fit {M.shape}")
    d = det(M)
    if d == 0:
        raise SingularMatrixError(f"matrix {M} is singular")
    values = rat_apply(inverse(M), b)
    return LinearSolution(values=values, q=abs(d))


def maximal_minors(A: IntMatrix) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """
    Yield ``(index set, determinant)`` for all maximal square submatrices.

    Row subsets for tall matrices, column subsets for wide ones.
    """
    m, n = A.shape
    if m >= n:
        for rows in combinations(range(m), n):
            yield rows, det(A.select_rows(rows))
    else:
        for cols in combinations(range(n), m):
            yield cols, det(A.select_cols(cols))


def _guard_minor_count(A: IntMatrix) -> None:
    m, n = A.shape
    count = comb(max(m, n), min(m, n))
    if count > settings.delta_modulus_max_minors:
        raise GuardExceededError(
            f"{count} maximal minors exceed the limit of {settings.delta_modulus_max_minors}"
        )


@lru_cache(maxsize=4096)
def delta_modulus(A: IntMatrix) -> int:
    """
    Largest absolute value of an n x n minor of a full-column-rank matrix.

    Enumerates all C(m, n) row subsets, which is fine for m <= 12, n <= 6.
    """
    if rank(A) != A.ncols:
        raise RankDeficientError(f"matrix {A} does not have full column rank")
    _guard_minor_count(A)
    best = max(abs(d) for _, d in maximal_minors(A))
    logger.debug("delta modulus computed", shape=A.shape, delta=best)
    return best


def gcd_max_minors(A: IntMatrix) -> int:
    """
    Gcd of all maximal minors of a matrix of full row or column rank.

    Computed as the product of the Smith invariants, which equals the gcd
    of the maximal minors.
    """
    from .normal_forms import smith

    if rank(A) != min(A.shape):
        raise RankDeficientError(f"matrix {A} does not have full rank")
    product = 1
    for d in smith(A).diagonal:
        product *= d
    return product


def gcd_max_minors_by_enumeration(A: IntMatrix) -> int:
    """Reference computation of ``gcd_max_minors`` by listing every minor."""
    if rank(A) != min(A.shape):
        raise RankDeficientError(f"matrix {A} does not have full rank")
    _guard_minor_count(A)
    g = 0
    for _, d in maximal_minors(A):
        g = gcd(g, d)
    return g
