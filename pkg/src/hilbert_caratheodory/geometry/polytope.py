"""
Polyhedra ``P(A, b) = {x : Ax <= b}`` and exhaustive lattice point enumeration.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import List, Optional, Sequence, Tuple

from ..config.settings import settings
from ..exactlin import IntMatrix, IntVector, inverse, maximize, rank
from ..exactlin.matrix import independent_rows
from ..utils.error_handling import (
    DimensionMismatchError,
    GuardExceededError,
    RankDeficientError,
    UnboundedPolytopeError,
)
from ..utils.logger import setup_logger
from .cone import ConeH

logger = setup_logger(__name__)

Box = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Polytope:
    """
    ``{x : Ax <= b}``. ``box`` optionally carries integer bounds known to
    contain every point, which spares the 2n bounding LPs.
    """

    A: IntMatrix
    b: IntVector
    box: Optional[Box] = None

    def __post_init__(self):
        if len(self.b) != self.A.nrows:
            raise DimensionMismatchError(f"{len(self.b)} right-hand sides for {self.A.nrows} rows")

    @property
    def n(self) -> int:
        return self.A.ncols

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.n:
            raise DimensionMismatchError(f"point of length {len(x)} in dimension {self.n}")
        return all(v <= beta for v, beta in zip(self.A.apply(x), self.b))

    def is_bounded(self) -> bool:
        """True iff the recession cone ``{x : Ax <= 0}`` is ``{0}``."""
        if rank(self.A) < self.n:
            return False
        rows = [list(r) for r in self.A.rows]
        zeros = [0] * self.A.nrows
        for j in range(self.n):
            for sign in (1, -1):
                c = [sign if k == j else 0 for k in range(self.n)]
                result = maximize(c, A_ub=rows, b_ub=zeros, free=range(self.n))
                if not result.is_optimal:
                    return False
        return True

    def bounds(self) -> Optional[Box]:
        """
        Integer bounds per coordinate, from the hint or from 2n exact LPs.

        Returns ``None`` for an empty polyhedron.
        """
        if self.box is not None:
            return self.box
        rows = [list(r) for r in self.A.rows]
        result: List[Tuple[int, int]] = []
        for j in range(self.n):
            c = [1 if k == j else 0 for k in range(self.n)]
            upper = maximize(c, A_ub=rows, b_ub=list(self.b), free=range(self.n))
            if upper.status == "infeasible":
                return None
            lower = maximize([-v for v in c], A_ub=rows, b_ub=list(self.b), free=range(self.n))
            if not (upper.is_optimal and lower.is_optimal):
                raise UnboundedPolytopeError(f"polyhedron is unbounded in coordinate {j}")
            result.append((ceil(-lower.objective), floor(upper.objective)))
        return tuple(result)


def unit_parallelepiped(A: IntMatrix) -> Polytope:
    """``P_1(A) = {x : 0 <= Ax <= 1}`` for A of full column rank."""
    m, n = A.shape
    if rank(A) != n:
        raise RankDeficientError(f"matrix {A} does not have full column rank")
    stacked = A.stack(A.negate())
    b = (1,) * m + (0,) * m
    inv = inverse(A.select_rows(independent_rows(A)))
    box = tuple(
        (floor(sum((v for v in row if v < 0), Fraction(0))), ceil(sum((v for v in row if v > 0), Fraction(0))))
        for row in inv
    )
    return Polytope(stacked, b, box)


def box_polytope(C: ConeH, delta: int) -> Polytope:
    """``C ∩ [-δ, δ]^n`` as a polytope with its box hint."""
    n = C.n
    eye = IntMatrix.identity(n)
    A = C.A.negate().stack(eye).stack(eye.negate())
    b = (0,) * C.m + (delta,) * (2 * n)
    return Polytope(A, b, tuple((-delta, delta) for _ in range(n)))


def lattice_points(P: Polytope) -> List[IntVector]:
    """
    All integer points of a bounded polyhedron in lexicographic order.

    Depth-first over coordinates; each coordinate range is tightened with
    the rows whose remaining part is bounded over the box.
    """
    box = P.bounds()
    if box is None:
        return []
    n = P.n
    lo = [b[0] for b in box]
    hi = [b[1] for b in box]
    if any(l > h for l, h in zip(lo, hi)):
        return []
    rows = P.A.rows
    # tail_min[i][k] = min over the box of sum_{j >= k} a_ij x_j
    tail_min = []
    for row in rows:
        acc = [0] * (n + 1)
        for j in range(n - 1, -1, -1):
            a = row[j]
            acc[j] = acc[j + 1] + (a * lo[j] if a > 0 else a * hi[j])
        tail_min.append(acc)

    budget = settings.lattice_points_max
    visited = 0
    points: List[IntVector] = []
    x = [0] * n
    partial = [0] * len(rows)

    def descend(k: int) -> None:
        nonlocal visited
        if k == n:
            if all(p <= beta for p, beta in zip(partial, P.b)):
                points.append(tuple(x))
            return
        low, high = lo[k], hi[k]
        for i, row in enumerate(rows):
            a = row[k]
            if a == 0:
                continue
            room = P.b[i] - partial[i] - tail_min[i][k + 1]
            if a > 0:
                high = min(high, floor(Fraction(room, a)))
            else:
                low = max(low, ceil(Fraction(room, a)))
            if low > high:
                return
        for v in range(low, high + 1):
            visited += 1
            if visited > budget:
                raise GuardExceededError(f"lattice point enumeration exceeded {budget} nodes")
            x[k] = v
            for i, row in enumerate(rows):
                partial[i] += row[k] * v
            descend(k + 1)
            for i, row in enumerate(rows):
                partial[i] -= row[k] * v
        x[k] = 0

    descend(0)
    logger.debug("lattice points enumerated", dimension=n, points=len(points), nodes=visited)
    return points


def nonzero_lattice_points(P: Polytope) -> List[IntVector]:
    return [p for p in lattice_points(P) if any(p)]
