"""
Hilbert basis elements inside the unit parallelepiped ``P_1(A)``.

A non-zero lattice point of ``P_1(A) = {x : 0 <= Ax <= 1}`` whose support
``supp(Ax)`` is minimal is a Hilbert basis element of ``C(A)``: splitting it
would split ``Ax`` into two 0/1 vectors with smaller supports.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from ..exactlin import IntMatrix, IntVector, det, inverse
from ..geometry import Polytope, lattice_points, unit_parallelepiped
from ..utils.error_handling import (
    EmptyParallelepipedError,
    OutsideProjectionError,
    PigeonholePreconditionError,
    ShapeError,
    SingularMatrixError,
)
from ..utils.helpers import support
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def _support_key(A: IntMatrix, h: IntVector):
    supp = support(A.apply(h))
    return len(supp), supp, h


def support_minimal_element(A: IntMatrix) -> Tuple[IntVector, Tuple[int, ...]]:
    """
    Non-zero ``h`` in ``P_1(A) ∩ Z^n`` with ``|supp(Ah)|`` minimal.

    Ties are broken by the support (lexicographically) and then by h.
    Raises ``EmptyParallelepipedError`` when ``P_1(A) ∩ Z^n = {0}``.
    """
    points = [p for p in lattice_points(unit_parallelepiped(A)) if any(p)]
    if not points:
        raise EmptyParallelepipedError(f"P_1({A}) contains no non-zero lattice point")
    h = min(points, key=lambda p: _support_key(A, p))
    return h, support(A.apply(h))


def refine_to_support_minimal(A: IntMatrix, p: Sequence[int]) -> IntVector:
    """
    Descend from a non-zero point p of ``P_1(A)`` to a point of minimal
    support among the non-zero lattice points y with ``0 <= Ay <= Ap``.
    """
    p = tuple(p)
    Ap = A.apply(p)
    if not any(p) or any(v < 0 or v > 1 for v in Ap):
        raise OutsideProjectionError(f"point {p} is not a non-zero point of P_1(A)")
    box = unit_parallelepiped(A).box
    below = Polytope(A.negate().stack(A), (0,) * A.nrows + tuple(Ap), box)
    points = [y for y in lattice_points(below) if any(y)]
    return min(points, key=lambda y: _support_key(A, y))


def pigeonhole_point(A: IntMatrix) -> IntVector:
    """
    Non-zero lattice point of ``P_1(A)`` for square A with ``n >= |det A|``.

    With w_1, ..., w_n the columns of A⁻¹ the n + 1 partial sums
    ``w_1 + ... + w_p`` (p = 0..n) fall into at most |det A| cosets of Z^n,
    so two of them collide and ``w_{p+1} + ... + w_q`` is integral with
    ``A(...) = e_{p+1} + ... + e_q``. The first collision (lowest q, then
    lowest p) is returned.
    """
    if not A.is_square:
        raise ShapeError(f"pigeonhole construction needs a square matrix, got {A.nrows}x{A.ncols}")
    n = A.nrows
    d = abs(det(A))
    if d == 0:
        raise SingularMatrixError(f"matrix {A} is singular")
    if n < d:
        raise PigeonholePreconditionError(f"n = {n} is smaller than |det A| = {d}")
    inv = inverse(A)
    sums: List[Tuple[Fraction, ...]] = [tuple(Fraction(0) for _ in range(n))]
    for q in range(1, n + 1):
        column = tuple(inv[i][q - 1] for i in range(n))
        current = tuple(a + b for a, b in zip(sums[-1], column))
        for p in range(q):
            diff = tuple(a - b for a, b in zip(current, sums[p]))
            if all(v.denominator == 1 for v in diff):
                h = tuple(int(v) for v in diff)
                logger.debug("pigeonhole collision", p=p, q=q, det=d)
                return h
        sums.append(current)
    raise PigeonholePreconditionError("no coset collision found")
