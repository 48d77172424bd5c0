"""
Exact rational two-phase simplex with Bland's anti-cycling rule.

``maximize`` takes scipy-style arguments (``c, A_ub, b_ub, A_eq, b_eq``) but
works on ``Fraction`` tableaux, so every reported value is exact. Entering
and leaving variables are chosen by lowest index, which makes the returned
vertex a deterministic function of the input.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..utils.error_handling import InfeasibleError, InternalCheckError, ShapeError, UnboundedError
from ..utils.logger import setup_logger
from .matrix import IntMatrix, RatVector

logger = setup_logger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPSolution:
    status: str
    x: Optional[RatVector] = None
    objective: Optional[Fraction] = None
    basis: Tuple[int, ...] = ()

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


@dataclass(frozen=True)
class OptimalVertex:
    """
    Optimal basic solution of ``max { 1ᵀλ : Hλ = b, λ >= 0 }``.

    ``basis`` lists the basic column indices (at most n of them); ``values``
    is zero outside the basis.
    """

    basis: Tuple[int, ...]
    values: RatVector
    objective: Fraction

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v != 0)


class SimplexTableau:
    """Dense tableau for ``max cᵀx, Ax = b, x >= 0`` with ``b >= 0``."""

    def __init__(self, A: List[List[Fraction]], b: List[Fraction]):
        self.A = A
        self.b = b
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.basis: List[int] = []
        self.reduced: List[Fraction] = []
        self.value = Fraction(0)

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        row = [v / piv for v in self.A[i]]
        rhs = self.b[i] / piv
        self.A[i] = row
        self.b[i] = rhs
        for k in range(self.m):
            if k != i:
                f = self.A[k][j]
                if f:
                    self.A[k] = [a - f * r for a, r in zip(self.A[k], row)]
                    self.b[k] -= f * rhs
        f = self.reduced[j]
        if f:
            self.reduced = [a - f * r for a, r in zip(self.reduced, row)]
            self.value += f * rhs
        self.basis[i] = j

    def set_objective(self, c: Sequence[Fraction]) -> None:
        self.reduced = list(c)
        self.value = Fraction(0)
        for i, j in enumerate(self.basis):
            f = self.reduced[j]
            if f:
                self.reduced = [a - f * r for a, r in zip(self.reduced, self.A[i])]
                self.value += f * self.b[i]

    def bland_step(self, allowed: int) -> str:
        entering = next((j for j in range(allowed) if self.reduced[j] > 0), None)
        if entering is None:
            return OPTIMAL
        candidates = [(self.b[i] / self.A[i][entering], self.basis[i], i)
                      for i in range(self.m) if self.A[i][entering] > 0]
        if not candidates:
            return UNBOUNDED
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return "go_on"

    def run(self, allowed: int) -> str:
        while True:
            status = self.bland_step(allowed)
            if status != "go_on":
                return status

    def drop_row(self, i: int) -> None:
        del self.A[i]
        del self.b[i]
        del self.basis[i]
        self.m -= 1


def _solve_standard(A: List[List[Fraction]], b: List[Fraction], c: List[Fraction]) -> LPSolution:
    m = len(A)
    n = len(c)
    rows = []
    rhs = []
    for row, beta in zip(A, b):
        if beta < 0:
            row, beta = [-v for v in row], -beta
        rows.append(list(row))
        rhs.append(beta)

    # phase one: artificial variables n .. n+m-1
    tab = SimplexTableau(
        [row + [Fraction(1 if k == i else 0) for k in range(m)] for i, row in enumerate(rows)],
        rhs,
    )
    tab.n = n + m
    tab.basis = list(range(n, n + m))
    tab.set_objective([Fraction(0)] * n + [Fraction(-1)] * m)
    if m:
        tab.run(n + m)
    if tab.value < 0:
        return LPSolution(status=INFEASIBLE)

    # drive artificials out of the basis; rows with no original entry are redundant
    i = 0
    while i < tab.m:
        if tab.basis[i] >= n:
            j = next((j for j in range(n) if tab.A[i][j] != 0), None)
            if j is None:
                tab.drop_row(i)
                continue
            tab.pivot(i, j)
        i += 1
    tab.A = [row[:n] for row in tab.A]
    tab.n = n

    tab.set_objective(c)
    status = tab.run(n)
    if status == UNBOUNDED:
        return LPSolution(status=UNBOUNDED)

    x = [Fraction(0)] * n
    for i, j in enumerate(tab.basis):
        x[j] = tab.b[i]
    return LPSolution(status=OPTIMAL, x=tuple(x), objective=tab.value, basis=tuple(sorted(tab.basis)))


def maximize(
    c: Sequence,
    A_ub: Optional[Sequence[Sequence]] = None,
    b_ub: Optional[Sequence] = None,
    A_eq: Optional[Sequence[Sequence]] = None,
    b_eq: Optional[Sequence] = None,
    free: Sequence[int] = (),
) -> LPSolution:
    """
    Exact LP ``max cᵀx`` s.t. ``A_ub x <= b_ub``, ``A_eq x = b_eq``.

    Variables are non-negative unless listed in ``free``. ``basis`` of the
    result is expressed in the caller's variables (free variables appear
    when either of their split parts is basic).
    """
    n = len(c)
    A_ub = [list(r) for r in (A_ub or [])]
    A_eq = [list(r) for r in (A_eq or [])]
    b_ub = list(b_ub or [])
    b_eq = list(b_eq or [])
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ShapeError("constraint rows and right-hand sides differ in length")
    if any(len(r) != n for r in A_ub + A_eq):
        raise ShapeError("constraint row length does not match the objective")

    free = tuple(sorted(set(free)))
    n_split = n + len(free)
    n_total = n_split + len(A_ub)

    def extend(row, slack_index):
        full = [Fraction(v) for v in row]
        full += [-Fraction(row[j]) for j in free]
        slacks = [Fraction(0)] * len(A_ub)
        if slack_index is not None:
            slacks[slack_index] = Fraction(1)
        return full + slacks

    A = [extend(r, k) for k, r in enumerate(A_ub)] + [extend(r, None) for r in A_eq]
    b = [Fraction(v) for v in b_ub] + [Fraction(v) for v in b_eq]
    cost = [Fraction(v) for v in c] + [-Fraction(c[j]) for j in free] + [Fraction(0)] * len(A_ub)

    if not A:
        if any(v != 0 for v in cost):
            return LPSolution(status=UNBOUNDED)
        return LPSolution(status=OPTIMAL, x=(Fraction(0),) * n, objective=Fraction(0))

    result = _solve_standard(A, b, cost)
    if not result.is_optimal:
        logger.debug("lp finished", status=result.status, variables=n, rows=len(A))
        return result

    raw = result.x
    x = list(raw[:n])
    for k, j in enumerate(free):
        x[j] -= raw[n + k]
    split_owner = {n + k: j for k, j in enumerate(free)}
    basis = sorted({split_owner.get(j, j) for j in result.basis if j < n_split})
    logger.debug("lp finished", status=OPTIMAL, variables=n, rows=len(A), objective=str(result.objective))
    return LPSolution(status=OPTIMAL, x=tuple(x), objective=result.objective, basis=tuple(basis))


def lp_max_sum(H: IntMatrix, b: Sequence[int]) -> OptimalVertex:
    """
    Optimal vertex of ``max { λ_1 + ... + λ_t : Hλ = b, λ >= 0 }``.

    H holds the generators as columns. Raises ``InfeasibleError`` when b is
    outside pos(H) and ``UnboundedError`` when the generators do not span a
    pointed cone.
    """
    if len(b) != H.nrows:
        raise ShapeError(f"right-hand side of length {len(b)} does not fit {H.shape}")
    t = H.ncols
    solution = maximize([1] * t, A_eq=[list(r) for r in H.rows], b_eq=list(b))
    if solution.status == INFEASIBLE:
        raise InfeasibleError(f"point {tuple(b)} is not in the cone generated by the columns")
    if solution.status == UNBOUNDED:
        raise UnboundedError("norm maximisation is unbounded; the generated cone is not pointed")
    if H.apply(solution.x) != tuple(Fraction(v) for v in b):
        raise InternalCheckError("simplex vertex does not satisfy Hλ = b")
    return OptimalVertex(basis=solution.basis, values=solution.x, objective=solution.objective)
