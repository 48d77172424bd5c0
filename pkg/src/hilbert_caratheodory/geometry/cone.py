"""
Pointed rational cones ``C = {x : Ax >= 0}``.

Extreme rays are found by an incremental double description started from a
simplicial subsystem; two rays are adjacent when the rows tight at both
have rank n - 2. This is fine for m, n <= 12.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import List, Sequence, Tuple

from ..exactlin import IntMatrix, IntVector, delta_modulus, hermite, inverse, rank
from ..exactlin.matrix import block_diagonal, independent_rows
from ..utils.error_handling import DimensionMismatchError, NotPointedError
from ..utils.helpers import dot, primitive
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


@dataclass(frozen=True)
class Membership:
    status: str
    tight: Tuple[int, ...]
    values: IntVector

    @property
    def inside(self) -> bool:
        return self.status != OUTSIDE


@dataclass(frozen=True)
class IntrinsicFrame:
    """
    Unimodular coordinates for ``lin(C) ∩ Z^n``.

    ``basis`` rows span the lattice ``lin(C) ∩ Z^n``; ``dual`` rows read off
    coordinates, so ``to_intrinsic(from_intrinsic(y)) == y``.
    """

    dimension: int
    ambient: int
    basis: Tuple[IntVector, ...]
    dual: Tuple[IntVector, ...]

    @property
    def is_identity(self) -> bool:
        return self.dimension == self.ambient and self.basis == IntMatrix.identity(self.ambient).rows

    def to_intrinsic(self, x: Sequence[int]) -> IntVector:
        if len(x) != self.ambient:
            raise DimensionMismatchError(f"point of length {len(x)} in ambient dimension {self.ambient}")
        return tuple(dot(row, x) for row in self.dual)

    def from_intrinsic(self, y: Sequence[int]) -> IntVector:
        if len(y) != self.dimension:
            raise DimensionMismatchError(f"point of length {len(y)} in frame of dimension {self.dimension}")
        x = [0] * self.ambient
        for coef, row in zip(y, self.basis):
            if coef:
                for j, v in enumerate(row):
                    x[j] += coef * v
        return tuple(x)


def primitive_from_rationals(values: Sequence[Fraction]) -> IntVector:
    """Smallest integer vector on the ray through a rational vector."""
    denominator = lcm(*(Fraction(v).denominator for v in values)) if values else 1
    return primitive([int(Fraction(v) * denominator) for v in values])


def _tight_rows(A: IntMatrix, r: Sequence[int]) -> frozenset:
    return frozenset(i for i, row in enumerate(A.rows) if dot(row, r) == 0)


def _rank_of_rows(A: IntMatrix, indices) -> int:
    indices = sorted(indices)
    return rank(A.select_rows(indices)) if indices else 0


def _double_description(A: IntMatrix) -> List[IntVector]:
    m, n = A.shape
    start = independent_rows(A)
    inv = inverse(A.select_rows(start))
    rays = [primitive_from_rationals([inv[i][j] for i in range(n)]) for j in range(n)]

    processed = list(start)
    for i in range(m):
        if i in start:
            continue
        a = A.rows[i]
        positive, zero, negative = [], [], []
        for r in rays:
            s = dot(a, r)
            (positive if s > 0 else zero if s == 0 else negative).append((r, s))
        new_rays = [r for r, _ in positive] + [r for r, _ in zero]
        if positive and negative:
            sub = A.select_rows(processed)
            for p, sp in positive:
                tight_p = _tight_rows(sub, p)
                for q, sq in negative:
                    common = tight_p & _tight_rows(sub, q)
                    if _rank_of_rows(sub, common) == n - 2:
                        new_rays.append(primitive(tuple(sp * qv - sq * pv for pv, qv in zip(p, q))))
        processed.append(i)
        rays = sorted(set(new_rays))
        if not rays:
            break
    return rays


@lru_cache(maxsize=1024)
def _extreme_rays(A: IntMatrix) -> Tuple[IntVector, ...]:
    rays = _double_description(A)
    logger.debug("extreme rays computed", shape=A.shape, rays=len(rays))
    return tuple(sorted(rays))


@dataclass(frozen=True)
class ConeH:
    """The cone ``{x in R^n : Ax >= 0}`` with lazily cached invariants."""

    A: IntMatrix

    @property
    def n(self) -> int:
        return self.A.ncols

    @property
    def m(self) -> int:
        return self.A.nrows

    @cached_property
    def is_pointed(self) -> bool:
        return rank(self.A) == self.n

    @cached_property
    def delta(self) -> int:
        """Δ(A): largest absolute n x n minor."""
        self.require_pointed()
        return delta_modulus(self.A)

    @cached_property
    def rays(self) -> Tuple[IntVector, ...]:
        self.require_pointed()
        return _extreme_rays(self.A)

    @cached_property
    def dimension(self) -> int:
        if not self.rays:
            return 0
        return rank(IntMatrix(self.rays))

    @property
    def is_full_dimensional(self) -> bool:
        return self.dimension == self.n

    @property
    def is_simplicial(self) -> bool:
        return self.A.is_square and self.is_pointed

    @cached_property
    def intrinsic_frame(self) -> IntrinsicFrame:
        return intrinsic_frame(self)

    def require_pointed(self) -> None:
        if not self.is_pointed:
            raise NotPointedError(f"cone {self.A} is not pointed (rank {rank(self.A)} < {self.n})")

    def membership(self, x: Sequence[int]) -> Membership:
        return membership(self, x)

    def contains(self, x: Sequence[int]) -> bool:
        return membership(self, x).inside

    def implicit_equalities(self) -> Tuple[int, ...]:
        """Rows with ``a_i x = 0`` on the whole cone."""
        return tuple(i for i, row in enumerate(self.A.rows) if all(dot(row, r) == 0 for r in self.rays))


def membership(C: ConeH, x: Sequence[int]) -> Membership:
    """Classify x as interior, boundary or outside and report the tight rows."""
    if len(x) != C.n:
        raise DimensionMismatchError(f"point of length {len(x)} for a cone in dimension {C.n}")
    values = C.A.apply(x)
    if any(v < 0 for v in values):
        status = OUTSIDE
    elif all(v > 0 for v in values):
        status = INTERIOR
    else:
        status = BOUNDARY
    tight = tuple(i for i, v in enumerate(values) if v == 0)
    return Membership(status=status, tight=tight, values=tuple(values))


def extreme_rays(C: ConeH) -> Tuple[IntVector, ...]:
    """Primitive extreme ray generators, lexicographically sorted."""
    return C.rays


def facet_rows(C: ConeH) -> Tuple[int, ...]:
    """
    Indices of facet-defining rows. Of several rows defining the same facet
    only the first is kept.
    """
    d = C.dimension
    if d == 0:
        return ()
    seen = set()
    result = []
    for i, row in enumerate(C.A.rows):
        on_facet = tuple(r for r in C.rays if dot(row, r) == 0)
        if len(on_facet) == len(C.rays):
            continue
        if d > 1 and (not on_facet or rank(IntMatrix(on_facet)) != d - 1):
            continue
        if on_facet in seen:
            continue
        seen.add(on_facet)
        result.append(i)
    return tuple(result)


def facet_cone(C: ConeH) -> ConeH:
    """
    The same cone described by primitive rows: implicit equalities plus one
    row per facet. Δ does not increase.
    """
    keep = sorted(set(C.implicit_equalities()) | set(facet_rows(C)))
    return ConeH(IntMatrix(tuple(primitive(C.A.rows[i]) for i in keep)))


def intrinsic_frame(C: ConeH) -> IntrinsicFrame:
    """Unimodular basis of ``lin(C) ∩ Z^n`` (the identity for full-dimensional cones)."""
    n = C.n
    d = C.dimension
    if d == n:
        eye = IntMatrix.identity(n).rows
        return IntrinsicFrame(dimension=n, ambient=n, basis=eye, dual=eye)
    if d == 0:
        return IntrinsicFrame(dimension=0, ambient=n, basis=(), dual=())
    R = IntMatrix(C.rays)
    hnf = hermite(R.select_rows(independent_rows(R)))
    basis = hnf.U.rows[:d]
    dual = hnf.U_inv.transpose().rows[:d]
    return IntrinsicFrame(dimension=d, ambient=n, basis=basis, dual=dual)


def intrinsic_cone(C: ConeH) -> ConeH:
    """The cone in the coordinates of its intrinsic frame (full-dimensional, pointed)."""
    frame = C.intrinsic_frame
    if frame.is_identity:
        return C
    B = IntMatrix(frame.basis).transpose()
    return ConeH(C.A.matmul(B))


def cone_product(first: ConeH, second: ConeH) -> ConeH:
    """``C1 × C2`` with block-diagonal constraint matrix."""
    first.require_pointed()
    second.require_pointed()
    return ConeH(block_diagonal(first.A, second.A))


def zero_cone(n: int) -> ConeH:
    """``{0}`` in R^n, written as ``x >= 0, -x >= 0``."""
    eye = IntMatrix.identity(n)
    return ConeH(eye.stack(eye.negate()))


def simplicial_cone(generators: Sequence[Sequence[int]]) -> ConeH:
    """Inequality description of pos(G) for n linearly independent generators."""
    inv = inverse(IntMatrix.from_columns(generators))
    return ConeH(IntMatrix(tuple(primitive_from_rationals(row) for row in inv)))
