"""
LP-rounding decomposition and the eligibility set D.

Starting from an optimal vertex λ of ``max { 1ᵀλ : Hλ = b, λ >= 0 }`` the
fractional parts μ of λ either sum to at most d/2 (their image r = H_B μ is
decomposed separately), or the ceiling gaps γ are small and b is rewritten as
``Σ η_i h_i + (q - 1) s`` with ``q = |det H_B|`` and ``s = H_B γ``. Either
way at most ⌊3d/2⌋ distinct elements are used whenever the multipliers on the
vertex support are at least delta_H, which every point of D guarantees.
"""

from fractions import Fraction
from itertools import combinations
from math import ceil, comb, floor
from typing import List, Optional, Sequence, Tuple

from ..config.settings import settings
from ..core.models import Decomposition, EligibilityReport, Strategy
from ..exactlin import IntMatrix, IntVector, OptimalVertex, det, lp_max_sum, maximize
from ..geometry import ConeH
from ..hilbert import HilbertBasis
from ..utils.error_handling import (
    DimensionMismatchError,
    GuardExceededError,
    InternalCheckError,
    OutsideConeError,
)
from ..utils.helpers import dot, format_fraction
from ..utils.logger import setup_logger
from .oracle import DensityRow, box_points, sigma

logger = setup_logger(__name__)


def search_integral_point(
    generators: Sequence[Sequence[int]], r: Sequence[int], A: Optional[IntMatrix] = None
) -> Optional[Tuple[int, ...]]:
    """
    Lexicographically smallest ``β >= 0`` integral with ``Σ β_i g_i = r``.

    ``A`` describes a pointed cone containing every generator (the
    non-negative orthant when omitted); its column sums give a weight that
    is positive on every non-zero generator.
    Returns ``None`` when r is not a non-negative integer combination.
    """
    r = tuple(r)
    gens = [tuple(g) for g in generators]
    t = len(gens)
    if not any(r):
        return (0,) * t
    if A is None:
        A = IntMatrix.identity(len(r))
    weight = tuple(sum(col) for col in A.columns())
    w = [dot(weight, g) for g in gens]
    if any(v <= 0 for v in w):
        raise InternalCheckError("generator weight is not positive; cone description does not contain the generators")

    def in_cone(v: Sequence[int]) -> bool:
        return all(dot(row, v) >= 0 for row in A.rows)

    budget = settings.sigma_enumeration_max
    visited = 0
    failed = set()
    beta = [0] * t

    def rec(k: int, rest: IntVector) -> bool:
        nonlocal visited
        if not any(rest):
            for j in range(k, t):
                beta[j] = 0
            return True
        if k == t or (k, rest) in failed:
            return False
        g = gens[k]
        limit = dot(weight, rest) // w[k]
        for c in range(limit + 1):
            visited += 1
            if visited > budget:
                raise GuardExceededError(f"integral point search exceeded {budget} nodes")
            remaining = tuple(a - c * b for a, b in zip(rest, g))
            if not in_cone(remaining):
                break
            beta[k] = c
            if rec(k + 1, remaining):
                return True
        failed.add((k, rest))
        return False

    return tuple(beta) if rec(0, r) else None


def integral_point_of_Q(HB: HilbertBasis, r: Sequence[int]) -> Tuple[int, ...]:
    """
    Non-negative integral β with ``Hβ = r`` over the whole basis.

    The LP optimum of ``Q(H, r)`` bounds Σβ; this is checked.
    """
    r = tuple(int(v) for v in r)
    C = HB.cone
    if len(r) != C.n:
        raise DimensionMismatchError(f"point of length {len(r)} for a cone in dimension {C.n}")
    if not C.contains(r):
        raise OutsideConeError(f"point {r} is not in the cone")
    beta = search_integral_point(HB.elements, r, C.A)
    if beta is None:
        raise InternalCheckError(f"point {r} is not generated by the basis")
    if any(r):
        optimum = lp_max_sum(HB.matrix(), r).objective
        if sum(beta) > optimum:
            raise InternalCheckError(f"Σβ = {sum(beta)} exceeds the LP optimum {optimum}")
    return beta


def _in_strip(H: IntMatrix, b: Sequence[int], tau: Tuple[int, ...], delta: int) -> bool:
    # max s  s.t.  Hλ = b,  λ_i + s <= Δ (i not in τ),  λ >= 0;  member iff s* > 0
    t = H.ncols
    outside = [i for i in range(t) if i not in tau]
    A_eq = [list(row) + [0] for row in H.rows]
    A_ub = [[1 if j == i else 0 for j in range(t)] + [1] for i in outside]
    result = maximize(
        [0] * t + [1],
        A_ub=A_ub,
        b_ub=[delta] * len(outside),
        A_eq=A_eq,
        b_eq=list(b),
        free=[t],
    )
    return result.is_optimal and result.objective > 0


def _vertex_report(HB: HilbertBasis, b: IntVector) -> Tuple[EligibilityReport, OptimalVertex]:
    delta_H = HB.require_delta_H()
    H = HB.intrinsic_matrix()
    target = HB.frame.to_intrinsic(b)
    vertex = lp_max_sum(H, target)
    ok = all(vertex.values[i] >= delta_H for i in vertex.support)
    report = EligibilityReport(
        point=b,
        vertex_multipliers_ok=ok,
        delta_H=delta_H,
        vertex_basis=vertex.basis,
        multipliers=[format_fraction(v) for v in vertex.values],
    )
    return report, vertex


def d_membership(b: Sequence[int], HB: HilbertBasis) -> EligibilityReport:
    """
    Exact test of ``b ∈ D``: b lies in no strip
    ``{Σ λ_i h_i : λ >= 0, λ_i < Δ for i ∉ τ}`` with ``|τ| = d - 1``.
    """
    b = tuple(int(v) for v in b)
    C = HB.cone
    if len(b) != C.n:
        raise DimensionMismatchError(f"point of length {len(b)} for a cone in dimension {C.n}")
    if not C.contains(b):
        raise OutsideConeError(f"point {b} is not in the cone")
    report, _ = _vertex_report(HB, b)
    d = HB.dimension
    t = len(HB)
    subsets = comb(t, d - 1) if d >= 1 else 0
    if subsets > settings.d_membership_max_subsets:
        raise GuardExceededError(f"{subsets} strips exceed the limit of {settings.d_membership_max_subsets}")
    H = HB.intrinsic_matrix()
    target = HB.frame.to_intrinsic(b)
    in_D = d >= 1
    tested = 0
    for tau in combinations(range(t), max(d - 1, 0)):
        tested += 1
        if _in_strip(H, target, tau, report.delta_H):
            in_D = False
            break
    report.in_D = in_D
    report.strips_tested = tested
    logger.debug("D membership tested", point=b, in_D=in_D, strips=tested)
    return report


def d_density(C: ConeH, HB: HilbertBasis, deltas: Sequence[int]) -> List[DensityRow]:
    """Exact fraction of box points of the cone that lie in D, per box radius."""
    rows = []
    for delta in deltas:
        points = box_points(C, delta)
        count = sum(1 for x in points if d_membership(x, HB).in_D)
        rows.append(DensityRow(delta=delta, count=count, total=len(points)))
    return rows


def decompose_lp_rounding(
    b: Sequence[int], HB: HilbertBasis, exact_membership: bool = False
) -> Tuple[Decomposition, EligibilityReport]:
    """
    Decompose b by rounding an optimal LP vertex.

    The result is certified ⌊3d/2⌋ (d the cone dimension) when the rounding
    stays non-negative; otherwise the exact σ witness is returned with the
    ``lp-fallback`` tag and no certificate.
    """
    b = tuple(int(v) for v in b)
    C = HB.cone
    if len(b) != C.n:
        raise DimensionMismatchError(f"point of length {len(b)} for a cone in dimension {C.n}")
    if not C.contains(b):
        raise OutsideConeError(f"point {b} is not in the cone")
    report, vertex = _vertex_report(HB, b)
    if exact_membership:
        report = d_membership(b, HB)
    d = HB.dimension
    bound = (3 * d) // 2
    if not any(b):
        return Decomposition.from_pairs(b, [], Strategy.LP_ROUNDING, certified_bound=bound), report

    H = HB.intrinsic_matrix()
    B = vertex.basis
    lam = {i: vertex.values[i] for i in B}
    H_B = H.select_cols(B)
    elements = HB.elements
    pairs: List[Tuple[IntVector, int]] = []

    mu = {i: lam[i] - floor(lam[i]) for i in B}
    if sum(mu.values()) <= Fraction(d, 2):
        pairs.extend((elements[i], floor(lam[i])) for i in B)
        r = HB.frame.from_intrinsic(tuple(int(v) for v in H_B.apply([mu[i] for i in B])))
        beta = integral_point_of_Q(HB, r)
        if sum(beta) > sum(mu.values()):
            raise InternalCheckError(f"Σβ = {sum(beta)} exceeds Σμ = {sum(mu.values())}")
        pairs.extend((elements[j], c) for j, c in enumerate(beta))
        branch = "fractional"
    else:
        gamma = {i: ceil(lam[i]) - lam[i] for i in B}
        s = HB.frame.from_intrinsic(tuple(int(v) for v in H_B.apply([gamma[i] for i in B])))
        q = abs(det(H_B))
        eta = {i: lam[i] - (q - 1) * gamma[i] for i in B}
        if any(v < 0 for v in eta.values()):
            logger.debug("lp rounding fell back to the oracle", point=b, q=q)
            _, witness = sigma(b, HB)
            fallback = Decomposition.from_pairs(b, witness.as_pairs(), Strategy.LP_FALLBACK)
            return fallback, report
        delta_beta = integral_point_of_Q(HB, s)
        if sum(delta_beta) > sum(gamma.values()):
            raise InternalCheckError(f"Σδ = {sum(delta_beta)} exceeds Σγ = {sum(gamma.values())}")
        pairs.extend((elements[i], int(eta[i])) for i in B)
        pairs.extend((elements[j], (q - 1) * c) for j, c in enumerate(delta_beta))
        branch = "ceiling"

    result = Decomposition.from_pairs(b, pairs, Strategy.LP_ROUNDING, certified_bound=bound)
    if result.total() != b:
        raise InternalCheckError(f"LP rounding produced {result.total()} instead of {b}")
    logger.debug("lp rounding decomposition", point=b, branch=branch, length=result.length)
    return result, report
