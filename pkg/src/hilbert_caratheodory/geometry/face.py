"""
Unimodular projection of a face of ``P(A, b)`` onto a lower-dimensional
integer polyhedron.

For a face ``F_I = {x in P : A_I x = b_I}`` of dimension n - k the Hermite
transform ``A_I U⁻¹ = (H, 0)`` moves aff(F_I) to ``{(z̃, y)}`` with z̃
fixed; dropping the first k coordinates gives ``π(U F_I) = {y : Ãy <= b̃}``.
Lattice points on both sides correspond one to one.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..exactlin import (
    IntMatrix,
    IntVector,
    delta_modulus,
    gcd_max_minors,
    hermite,
    is_integral,
    maximize,
    rank,
    solve_linear,
)
from ..exactlin.matrix import independent_rows
from ..utils.error_handling import (
    DimensionMismatchError,
    FaceDimensionError,
    InternalCheckError,
    LatticeFreeError,
    OutsideProjectionError,
)
from ..utils.helpers import dot
from ..utils.logger import setup_logger
from .cone import ConeH

logger = setup_logger(__name__)


@dataclass(frozen=True)
class FaceProjection:
    """
    Projection data of one face.

    ``I`` is the independent row subset actually used (k = len(I)).
    ``A_tilde`` is ``None`` when the face is a single point (k = n); its
    rows come from the original rows listed in ``row_map`` (-1 marks the
    zero placeholder row of an unconstrained projection).
    """

    A: IntMatrix
    b: IntVector
    I: Tuple[int, ...]
    requested: Tuple[int, ...]
    v: Optional[Tuple[Fraction, ...]]
    H: Optional[IntMatrix]
    U: IntMatrix
    U_inv: IntMatrix
    z_tilde: IntVector
    A_tilde: Optional[IntMatrix]
    b_tilde: IntVector
    row_map: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.I)

    @property
    def n(self) -> int:
        return self.A.ncols

    @property
    def projected_dimension(self) -> int:
        return self.n - self.k

    def contains_projected(self, y: Sequence[int]) -> bool:
        if self.A_tilde is None:
            return len(y) == 0
        return all(v <= beta for v, beta in zip(self.A_tilde.apply(y), self.b_tilde))


def _identity_projection(A: IntMatrix, b: IntVector, v) -> FaceProjection:
    n = A.ncols
    eye = IntMatrix.identity(n)
    return FaceProjection(
        A=A, b=b, I=(), requested=(), v=v, H=None, U=eye, U_inv=eye, z_tilde=(),
        A_tilde=A, b_tilde=b, row_map=tuple(range(A.nrows)),
    )


def _has_relative_interior(A: IntMatrix, b: IntVector, I: Tuple[int, ...], others: List[int]) -> bool:
    # max s  s.t.  A_I x = b_I,  a_j x + s <= b_j (j in others),  s <= 1
    n = A.ncols
    A_eq = [list(A.rows[i]) + [0] for i in I]
    b_eq = [b[i] for i in I]
    A_ub = [list(A.rows[j]) + [1] for j in others] + [[0] * n + [1]]
    b_ub = [b[j] for j in others] + [1]
    result = maximize([0] * n + [1], A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, free=range(n + 1))
    return result.is_optimal and result.objective > 0


def face_projection(
    A: IntMatrix,
    b: Sequence[int],
    I: Sequence[int],
    v: Optional[Sequence] = None,
    check_modularity: bool = True,
) -> FaceProjection:
    """
    Project the face ``F_I`` of ``P(A, b)``.

    Redundant rows of I are dropped first. Raises ``FaceDimensionError``
    when F_I is empty or lower-dimensional than n - rank(A_I), and
    ``LatticeFreeError`` when aff(F_I) holds no integer point.
    """
    b = tuple(b)
    m, n = A.shape
    if len(b) != m:
        raise DimensionMismatchError(f"{len(b)} right-hand sides for {m} rows")
    requested = tuple(sorted(set(I)))
    if any(i < 0 or i >= m for i in requested):
        raise FaceDimensionError(f"row indices {requested} out of range for {m} rows")
    v = None if v is None else tuple(Fraction(x) for x in v)
    if not requested:
        return _identity_projection(A, b, v)

    chosen = independent_rows(A, requested)
    if not chosen:
        # only zero rows: F_I is P itself when every b_i = 0, empty otherwise
        if any(b[i] != 0 for i in requested):
            raise FaceDimensionError(f"face of rows {requested} is empty")
        if v is not None and len(v) != n:
            raise DimensionMismatchError(f"point of length {len(v)} in dimension {n}")
        return replace(_identity_projection(A, b, v), requested=requested)
    k = len(chosen)
    A_I = A.select_rows(chosen)
    span_rank = rank(A_I)
    others = [j for j in range(m) if j not in requested
              and rank(A_I.stack(A.select_rows([j]))) > span_rank]

    if v is not None:
        if len(v) != n:
            raise DimensionMismatchError(f"point of length {len(v)} in dimension {n}")
        if any(dot(A.rows[i], v) != b[i] for i in requested):
            raise FaceDimensionError(f"point {v} is not on the face defined by rows {requested}")
    strict = v is not None and all(dot(A.rows[j], v) < b[j] for j in others)
    if not strict and not _has_relative_interior(A, b, requested, others):
        raise FaceDimensionError(f"rows {requested} do not define a face of dimension {n - k}")

    hnf = hermite(A_I)
    U_inv = [list(r) for r in hnf.U_inv.rows]
    U = [list(r) for r in hnf.U.rows]
    for col in range(k, n):
        lead = next(U_inv[r][col] for r in range(n) if U_inv[r][col] != 0)
        if lead < 0:
            for r in range(n):
                U_inv[r][col] = -U_inv[r][col]
            U[col] = [-x for x in U[col]]
    U_inv_m = IntMatrix(tuple(tuple(r) for r in U_inv))
    U_m = IntMatrix(tuple(tuple(r) for r in U))

    solution = solve_linear(hnf.H, [b[i] for i in chosen])
    if not is_integral(solution.values):
        raise LatticeFreeError(f"affine hull of the face of rows {requested} contains no integer point")
    z_tilde = tuple(int(x) for x in solution.values)

    AU = A.matmul(U_inv_m)
    tilde_rows, tilde_rhs, row_map = [], [], []
    for i, row in enumerate(AU.rows):
        head, tail = row[:k], row[k:]
        rhs = b[i] - dot(head, z_tilde)
        if any(tail):
            tilde_rows.append(tail)
            tilde_rhs.append(rhs)
            row_map.append(i)
        elif rhs < 0:
            raise FaceDimensionError(f"face of rows {requested} is empty")
    if k < n and not tilde_rows:
        # no constraint survives: the projection is all of R^(n-k)
        tilde_rows, tilde_rhs, row_map = [(0,) * (n - k)], [0], [-1]

    A_tilde = IntMatrix(tuple(tilde_rows)) if k < n else None
    fp = FaceProjection(
        A=A, b=b, I=chosen, requested=requested, v=v, H=hnf.H, U=U_m, U_inv=U_inv_m,
        z_tilde=z_tilde, A_tilde=A_tilde, b_tilde=tuple(tilde_rhs) if k < n else (),
        row_map=tuple(row_map) if k < n else (),
    )
    if check_modularity and A_tilde is not None and rank(A) == n:
        bound = delta_modulus(A) // gcd_max_minors(A_I)
        projected = delta_modulus(A_tilde)
        if projected > bound:
            raise InternalCheckError(f"projected matrix is {projected}-modular, above the bound {bound}")
    logger.debug("face projected", rows=chosen, codimension=k, projected_rows=len(row_map))
    return fp


def lift_point(fp: FaceProjection, y: Sequence[int]) -> IntVector:
    """Map a lattice point of the projected polyhedron back onto F_I ∩ Z^n."""
    if len(y) != fp.projected_dimension:
        raise DimensionMismatchError(f"point of length {len(y)} for a projection of dimension {fp.projected_dimension}")
    if not fp.contains_projected(y):
        raise OutsideProjectionError(f"point {tuple(y)} is outside the projected polyhedron")
    return fp.U_inv.apply(tuple(fp.z_tilde) + tuple(y))


def project_point(fp: FaceProjection, x: Sequence[int]) -> IntVector:
    """Inverse of ``lift_point`` on F_I ∩ Z^n."""
    if len(x) != fp.n:
        raise DimensionMismatchError(f"point of length {len(x)} in dimension {fp.n}")
    values = fp.A.apply(x)
    if any(val > beta for val, beta in zip(values, fp.b)) or any(values[i] != fp.b[i] for i in fp.requested):
        raise OutsideProjectionError(f"point {tuple(x)} is not on the face of rows {fp.requested}")
    return fp.U.apply(x)[fp.k:]


def cone_face_projection(
    C: ConeH, I: Sequence[int], v: Optional[Sequence] = None
) -> Tuple[FaceProjection, Optional[ConeH]]:
    """
    Face projection for ``C(A) = P(-A, 0)``; the projected polyhedron is
    again a cone ``{y : -Ã y >= 0}`` (``None`` for the face {0}).
    """
    fp = face_projection(C.A.negate(), (0,) * C.m, I, v)
    projected = None if fp.A_tilde is None else ConeH(fp.A_tilde.negate())
    return fp, projected
