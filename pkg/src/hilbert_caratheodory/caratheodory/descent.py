"""
Face descent for cones ``C(A) = {x : Ax >= 0}``.

Each interior step subtracts the largest multiple of one Hilbert basis element
h with ``Ah`` a 0/1 vector, which makes at least one more row tight; the
face it lands on is then projected unimodularly onto a lower-dimensional
cone. One element is spent per dimension lost. When no suitable element
exists the face is closed by the exact σ oracle.
"""

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from ..config.settings import settings
from ..core.models import Decomposition, DescentStep, DescentTrace, Strategy
from ..exactlin import IntMatrix, IntVector, delta_modulus, rank
from ..geometry import ConeH, cone_face_projection, facet_cone, project_point
from ..hilbert import hilbert_basis, pigeonhole_point, refine_to_support_minimal, support_minimal_element
from ..utils.error_handling import (
    DimensionMismatchError,
    EmptyParallelepipedError,
    GuardExceededError,
    InternalCheckError,
    OutsideConeError,
    RankDeficientError,
    StuckError,
)
from ..utils.logger import setup_logger
from .oracle import sigma

logger = setup_logger(__name__)


@lru_cache(maxsize=256)
def descent_guarantee(A: IntMatrix) -> Optional[int]:
    """
    Proven bound on CR(C(A)) for the cases face descent covers:
    n when Δ(A) <= 2, n for square A with Δ <= 4, n + Δ - 3 for square A
    with Δ >= 5, otherwise ``None``.
    """
    n = A.ncols
    delta = delta_modulus(A)
    if delta <= 2:
        return n
    if A.is_square:
        return n if delta <= 4 else n + delta - 3
    return None


def _interior_element(Cf: ConeH) -> Tuple[Optional[IntVector], str]:
    try:
        h, _ = support_minimal_element(Cf.A)
        return h, "interior-step"
    except (EmptyParallelepipedError, GuardExceededError):
        pass
    if Cf.is_simplicial and Cf.n >= Cf.delta:
        p = pigeonhole_point(Cf.A)
        return refine_to_support_minimal(Cf.A, p), "pigeonhole-step"
    return None, "stuck"


def decompose_face_descent(
    A: IntMatrix, z: Sequence[int], strict: bool = False
) -> Tuple[Decomposition, DescentTrace]:
    """
    Decompose z in C(A) by alternating interior steps and face projections.

    With ``strict`` (or ``descent_close_stuck`` switched off) a face without
    a usable element raises ``StuckError`` carrying the trace; otherwise the
    σ oracle closes it and the trace records both the stuck step and the
    closure. The result carries ``descent_guarantee(A)`` as its certified
    bound when the run stayed within what the guarantee covers.
    """
    n = A.ncols
    z = tuple(int(v) for v in z)
    if len(z) != n:
        raise DimensionMismatchError(f"point of length {len(z)} for a matrix with {n} columns")
    if rank(A) < n:
        raise RankDeficientError(f"matrix {A.shape} does not have full column rank")
    C = ConeH(A)
    if not C.contains(z):
        raise OutsideConeError(f"point {z} is not in C(A)")

    close_stuck = settings.descent_close_stuck and not strict
    trace = DescentTrace()
    pairs: List[Tuple[IntVector, int]] = []
    frame = IntMatrix.identity(n)
    current = C
    y = z

    while any(y):
        tight = tuple(
            i for i, v in enumerate(current.A.apply(y)) if v == 0 and any(current.A.rows[i])
        )
        if tight:
            fp, projected = cone_face_projection(current, tight, v=y)
            if projected is None:
                raise InternalCheckError(f"non-zero point {frame.apply(y)} projected onto the zero face")
            point = frame.apply(y)
            y = project_point(fp, y)
            frame = frame.matmul(fp.U_inv.select_cols(range(fp.k, fp.n)))
            current = projected
            trace.steps.append(
                DescentStep(action="face-projection", point=point, rows=tight, dimension=current.n)
            )
            logger.debug("descent face projection", rows=tight, dimension=current.n)
            continue

        d = current.n
        if d == 1:
            g = current.rays[0]
            c = y[0] // g[0]
            element = frame.apply(g)
            pairs.append((element, c))
            trace.steps.append(
                DescentStep(
                    action="interior-step", point=frame.apply(y), element=element, multiplicity=c, dimension=0
                )
            )
            break

        Cf = facet_cone(current)
        h, action = _interior_element(Cf)
        if h is None:
            point = frame.apply(y)
            trace.steps.append(DescentStep(action="stuck", point=point, dimension=d))
            logger.debug("descent stuck", point=point, dimension=d)
            if not close_stuck:
                raise StuckError(f"no usable Hilbert basis element at dimension {d}", trace=trace)
            _, witness = sigma(y, hilbert_basis(current))
            for element, c in witness.as_pairs():
                pairs.append((frame.apply(element), c))
            trace.steps.append(DescentStep(action="terminal-oracle", point=point, dimension=0))
            break

        Ah = Cf.A.apply(h)
        Ay = Cf.A.apply(y)
        lam = min(Ay[i] for i, v in enumerate(Ah) if v)
        element = frame.apply(h)
        trace.steps.append(
            DescentStep(action=action, point=frame.apply(y), element=element, multiplicity=lam, dimension=d)
        )
        pairs.append((element, lam))
        y = tuple(a - lam * b for a, b in zip(y, h))
        logger.debug("descent step", action=action, element=element, multiplicity=lam, dimension=d)

    bound = descent_guarantee(A)
    stuck_at = trace.stuck_dimension
    if bound is not None and stuck_at is not None and stuck_at > max(3, delta_modulus(A) - 1):
        bound = None
    result = Decomposition.from_pairs(z, pairs, Strategy.FACE_DESCENT, certified_bound=bound, trace=trace)
    if result.total() != z:
        raise InternalCheckError(f"face descent produced {result.total()} instead of {z}")
    if bound is not None and result.length > bound:
        raise InternalCheckError(f"face descent used {result.length} elements, above the guarantee {bound}")
    return result, trace
