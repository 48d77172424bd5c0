"""
Exact representation length σ(x) and the box statistics built on it.

σ is found by trying subsets of the Hilbert basis in increasing size (and
lexicographically within a size). For linearly independent subsets the
multipliers are unique and come from a cached exact solve; dependent
subsets are searched depth-first with a weight vector that is positive on
the cone.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..config.settings import settings
from ..core.models import Decomposition, DecompositionCheck, Strategy
from ..exactlin import IntMatrix, IntVector, inverse
from ..exactlin.determinants import rat_apply
from ..exactlin.matrix import independent_rows
from ..geometry import ConeH, box_polytope, intrinsic_cone, lattice_points
from ..hilbert import HilbertBasis
from ..utils.error_handling import (
    CapExceededError,
    DimensionMismatchError,
    GuardExceededError,
    OutsideConeError,
    PreconditionError,
)
from ..utils.helpers import dot, map_ordered
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def sigma_cap_bound(n: int) -> int:
    """``max(1, 2n - 2)``: the general upper bound on CR(C) for an n-dimensional cone."""
    return max(1, 2 * n - 2)


class RepresentationSearch:
    """Subset-wise search for ``z = Σ λ_i h_i`` with integers ``λ_i >= 1``."""

    def __init__(self, HB: HilbertBasis):
        self.HB = HB
        self.vectors = HB.intrinsic_elements()
        self.dimension = HB.dimension
        inner = intrinsic_cone(HB.cone) if self.dimension else None
        self.A = inner.A if inner is not None else None
        self.weight = tuple(sum(col) for col in self.A.columns()) if self.A is not None else ()
        self._solvers: Dict[Tuple[int, ...], Optional[tuple]] = {}

    def _solver(self, S: Tuple[int, ...]):
        if S not in self._solvers:
            M = IntMatrix.from_columns([self.vectors[i] for i in S])
            rows = independent_rows(M)
            if len(rows) < len(S):
                self._solvers[S] = None
            else:
                self._solvers[S] = (M, rows, inverse(M.select_rows(rows)))
        return self._solvers[S]

    def _in_cone(self, v: Sequence[int]) -> bool:
        return all(dot(row, v) >= 0 for row in self.A.rows)

    def _solve_independent(self, z: IntVector, solver) -> Optional[Tuple[int, ...]]:
        M, rows, inv = solver
        lam = rat_apply(inv, [z[r] for r in rows])
        if any(v.denominator != 1 or v < 1 for v in lam):
            return None
        lam = tuple(int(v) for v in lam)
        if M.apply(lam) != z:
            return None
        return lam

    def _solve_bounded(self, z: IntVector, S: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        hs = [self.vectors[i] for i in S]
        wh = [dot(self.weight, h) for h in hs]
        s = len(hs)
        # minimum remainder that later elements still need: one copy of each
        tails = [tuple(sum(h[j] for h in hs[k:]) for j in range(len(z))) for k in range(s + 1)]
        budget = settings.sigma_enumeration_max
        visited = 0
        lam = [0] * s

        def rec(k: int, r: IntVector) -> bool:
            nonlocal visited
            h = hs[k]
            if k == s - 1:
                c = dot(self.weight, r) // wh[k] if wh[k] else 0
                if c >= 1 and tuple(c * v for v in h) == r:
                    lam[k] = c
                    return True
                return False
            limit = (dot(self.weight, r) - dot(self.weight, tails[k + 1])) // wh[k]
            for c in range(1, limit + 1):
                visited += 1
                if visited > budget:
                    raise GuardExceededError(f"representation search exceeded {budget} nodes")
                rest = tuple(a - c * b for a, b in zip(r, h))
                if not self._in_cone(tuple(a - b for a, b in zip(rest, tails[k + 1]))):
                    break
                lam[k] = c
                if rec(k + 1, rest):
                    return True
            return False

        return tuple(lam) if rec(0, z) else None

    def find(self, z: IntVector, S: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        solver = self._solver(S)
        if solver is not None:
            return self._solve_independent(z, solver)
        return self._solve_bounded(z, S)


@lru_cache(maxsize=64)
def _search_for(HB: HilbertBasis) -> RepresentationSearch:
    return RepresentationSearch(HB)


def _require_member(z: Sequence[int], C: ConeH) -> IntVector:
    z = tuple(int(v) for v in z)
    if len(z) != C.n:
        raise DimensionMismatchError(f"point of length {len(z)} for a cone in dimension {C.n}")
    if not C.contains(z):
        raise OutsideConeError(f"point {z} is not in the cone")
    return z


def sigma(z: Sequence[int], HB: HilbertBasis, cap: Optional[int] = None) -> Tuple[int, Decomposition]:
    """
    σ(z) with a witness decomposition of that length.

    ``cap`` bounds the subset size (default ``max(1, 2d - 2)`` for a
    d-dimensional cone); ``CapExceededError`` when nothing is found.
    """
    z = _require_member(z, HB.cone)
    if not any(z):
        return 0, Decomposition.from_pairs(z, [], Strategy.ORACLE)
    if cap is None:
        cap = settings.sigma_default_cap or sigma_cap_bound(HB.dimension)
    search = _search_for(HB)
    target = HB.frame.to_intrinsic(z)
    t = len(HB)
    for size in range(1, min(cap, t) + 1):
        for S in combinations(range(t), size):
            lam = search.find(target, S)
            if lam is not None:
                pairs = [(HB.elements[i], c) for i, c in zip(S, lam)]
                return size, Decomposition.from_pairs(z, pairs, Strategy.ORACLE)
    raise CapExceededError(f"no representation of {z} with at most {cap} elements")


@dataclass(frozen=True)
class BoxMaximum:
    value: int
    point: IntVector
    points: int


@dataclass(frozen=True)
class DensityRow:
    delta: int
    count: int
    total: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.count, self.total)


def box_points(C: ConeH, delta: int) -> List[IntVector]:
    if delta < 1:
        raise PreconditionError(f"box radius must be at least 1, got {delta}")
    return lattice_points(box_polytope(C, delta))


def cr_box(C: ConeH, HB: HilbertBasis, delta: int, cap: Optional[int] = None, threads: int = 1) -> BoxMaximum:
    """
    Largest σ over ``C ∩ Z^n ∩ [-δ, δ]^n`` and the first point attaining it.

    A lower bound on CR(C), nondecreasing in δ.
    """
    points = box_points(C, delta)
    values = map_ordered(lambda x: sigma(x, HB, cap)[0], points, threads)
    best, where = 0, tuple(0 for _ in range(C.n))
    for x, v in zip(points, values):
        if v > best:
            best, where = v, x
    logger.debug("box maximum computed", box=delta, points=len(points), value=best)
    return BoxMaximum(value=best, point=where, points=len(points))


def density(C: ConeH, HB: HilbertBasis, k: int, deltas: Sequence[int], threads: int = 1) -> List[DensityRow]:
    """Exact fraction of box points with ``σ <= k`` for every box radius."""
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")

    def short(x: IntVector) -> bool:
        if not any(x):
            return True
        if k == 0:
            return False
        try:
            sigma(x, HB, cap=k)
            return True
        except CapExceededError:
            return False

    rows = []
    for delta in deltas:
        points = box_points(C, delta)
        if not points:
            raise PreconditionError(f"box of radius {delta} meets no cone lattice point")
        flags = map_ordered(short, points, threads)
        rows.append(DensityRow(delta=delta, count=sum(flags), total=len(points)))
    return rows


def verify_decomposition(d: Decomposition, HB: HilbertBasis) -> DecompositionCheck:
    """Check the sum identity, basis membership, multiplicities and the certified bound."""
    messages = []
    if d.total() != tuple(d.point):
        messages.append("sum mismatch")
    for term in d.terms:
        if tuple(term.element) not in HB:
            messages.append(f"foreign element {tuple(term.element)}")
        if term.multiplicity < 1:
            messages.append(f"non-positive multiplicity {term.multiplicity}")
    if len({tuple(t.element) for t in d.terms}) != len(d.terms):
        messages.append("repeated element")
    if d.certified_bound is not None and d.length > d.certified_bound:
        messages.append(f"length {d.length} exceeds certified bound {d.certified_bound}")
    return DecompositionCheck(valid=not messages, messages=messages)
