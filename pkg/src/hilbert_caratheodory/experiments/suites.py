"""
Seeded acceptance suites.

Each suite draws ``count`` independent instances from ``(seed, index)``,
checks one family of guarantees on each and returns a ``SuiteSummary``.
Reports contain no timings, so equal seeds give byte-identical output.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np

from ..caratheodory import (
    cr_box,
    d_membership,
    decompose_face_descent,
    decompose_lp_rounding,
    descent_guarantee,
    sigma_cap_bound,
    verify_decomposition,
)
from ..core.models import SuiteRecord, SuiteSummary
from ..exactlin import IntMatrix, delta_modulus, gcd_max_minors, hermite, rank, smith
from ..geometry import (
    ConeH,
    Polytope,
    box_polytope,
    cone_face_projection,
    lattice_points,
    lift_point,
    project_point,
    unit_parallelepiped,
)
from ..hilbert import hilbert_basis, pigeonhole_point
from ..utils.error_handling import HilbertCaratheodoryError, PreconditionError
from ..utils.helpers import map_ordered
from ..utils.logger import setup_logger
from .instances import (
    instance_rng,
    random_cone_point,
    random_delta2_matrix,
    random_face_point,
    random_integer_matrix,
    random_simplicial_matrix,
    random_small_cone,
)

logger = setup_logger(__name__)


@dataclass(frozen=True)
class SuiteOptions:
    """Instance sizes; ``None`` lets each suite pick its own per instance."""

    n: Optional[int] = None
    delta_max: Optional[int] = None
    points: int = 10
    box: Optional[int] = None


def _pick(rng: np.random.Generator, fixed: Optional[int], choices: List[int]) -> int:
    return fixed if fixed is not None else int(rng.choice(choices))


def _descent_points(
    A: IntMatrix, rng: np.random.Generator, points: int, bound_of: Callable, allow_stuck: bool
) -> str:
    C = ConeH(A)
    HB = hilbert_basis(C)
    n = A.ncols
    bound = bound_of(A)
    longest = 0
    for _ in range(points):
        z = random_cone_point(rng, C)
        d, trace = decompose_face_descent(A, z)
        check = verify_decomposition(d, HB)
        if not check.valid:
            return f"fail z={list(z)} {'; '.join(check.messages)}"
        if bound is not None and d.length > bound:
            return f"fail z={list(z)} length {d.length} > {bound}"
        if trace.stuck and not allow_stuck:
            return f"fail z={list(z)} stuck at dimension {trace.stuck_dimension}"
        longest = max(longest, d.length)
    return f"ok n={n} rows={A.nrows} delta={delta_modulus(A)} bound={bound} longest={longest}"


def thm3_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """Δ(A) <= 2: face descent never gets stuck and uses at most n elements."""
    n = _pick(rng, options.n, [2, 3, 4, 5])
    A = random_delta2_matrix(rng, n)
    return _descent_points(A, rng, options.points, lambda M: M.ncols, allow_stuck=False)


def thm4_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """Square A: at most n elements for Δ <= 4, at most n + Δ - 3 for 5 <= Δ <= n."""
    n = _pick(rng, options.n, [4, 5, 6])
    delta = int(rng.integers(1, min(options.delta_max or n, n) + 1))
    A = random_simplicial_matrix(rng, n, delta)
    return _descent_points(A, rng, options.points, descent_guarantee, allow_stuck=True)


def thm1_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """Box points of D get LP-rounding decompositions of length <= ⌊3n/2⌋."""
    n = _pick(rng, options.n, [2, 3])
    delta_max = options.delta_max or 4
    for _ in range(50):
        C = random_small_cone(rng, n, delta_max)
        HB = hilbert_basis(C)
        if len(HB) <= 6:
            break
    else:
        return "fail no cone with at most 6 basis elements in 50 draws"
    box = options.box if options.box is not None else 20
    bound = (3 * n) // 2
    in_D = 0
    for b in lattice_points(box_polytope(C, box)):
        report = d_membership(b, HB)
        if not report.in_D:
            continue
        in_D += 1
        if not report.vertex_multipliers_ok:
            return f"fail b={list(b)} vertex multipliers below delta_H={report.delta_H}"
        d, _ = decompose_lp_rounding(b, HB)
        if d.length > bound or not verify_decomposition(d, HB).valid:
            return f"fail b={list(b)} length {d.length} > {bound}"
    return f"ok n={n} t={len(HB)} delta_H={HB.delta_H} box={box} in_D={in_D}"


def icp_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """Box maxima of σ stay within n and within 2n - 2 in dimensions 2 and 3."""
    n = _pick(rng, options.n, [2, 3])
    C = random_small_cone(rng, n, options.delta_max or 4)
    HB = hilbert_basis(C)
    box = options.box if options.box is not None else 6
    result = cr_box(C, HB, box)
    if result.value > n or result.value > sigma_cap_bound(n):
        return f"fail sigma={result.value} at {list(result.point)}"
    return f"ok n={n} t={len(HB)} box={box} max_sigma={result.value} points={result.points}"


def lemma3_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """The pigeonhole point is a non-zero lattice point of P_1(A)."""
    n = _pick(rng, options.n, [2, 3, 4, 5, 6])
    delta = int(rng.integers(1, n + 1))
    A = random_simplicial_matrix(rng, n, delta)
    h = pigeonhole_point(A)
    Ah = A.apply(h)
    if not any(h) or any(v < 0 or v > 1 for v in Ah):
        return f"fail h={list(h)} Ah={list(Ah)}"
    if h not in lattice_points(unit_parallelepiped(A)):
        return f"fail h={list(h)} missing from the P_1 enumeration"
    return f"ok n={n} det={delta} h={list(h)}"


def lemma2_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """Face projections respect the modularity bound and lift back exactly."""
    n = _pick(rng, options.n, [2, 3, 4])
    C = random_small_cone(rng, n, options.delta_max or 6)
    I, v = random_face_point(rng, C)
    fp, _ = cone_face_projection(C, I, v)
    if fp.A_tilde is not None and fp.k:
        limit = delta_modulus(C.A) // gcd_max_minors(C.A.select_rows(fp.I))
        got = delta_modulus(fp.A_tilde) if rank(fp.A_tilde) == fp.A_tilde.ncols else 0
        if got > limit:
            return f"fail rows={list(I)} projected delta {got} > {limit}"
    box = options.box if options.box is not None else 5
    face = [x for x in lattice_points(box_polytope(C, box)) if all(C.A.apply(x)[i] == 0 for i in I)]
    for x in face:
        if lift_point(fp, project_point(fp, x)) != x:
            return f"fail rows={list(I)} round trip of {list(x)}"
    return f"ok n={n} rows={list(I)} dimension={fp.projected_dimension} face_points={len(face)}"


def algebra_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """HNF and SNF identities, and |det H| = gcd of the maximal minors."""
    rows = int(rng.integers(1, 7))
    cols = int(rng.integers(rows, 7))
    A = random_integer_matrix(rng, rows, cols)
    S = smith(A)
    if S.U.matmul(A).matmul(S.V) != S.D:
        return f"fail smith identity on {A}"
    if rank(A) < rows:
        return f"ok {rows}x{cols} rank-deficient smith={list(S.diagonal)}"
    H = hermite(A)
    padded = IntMatrix(tuple(tuple(r) + (0,) * (cols - rows) for r in H.H.rows))
    if A.matmul(H.U_inv) != padded or padded.matmul(H.U) != A:
        return f"fail hermite identity on {A}"
    det_H = 1
    for i in range(rows):
        det_H *= H.H[i][i]
    if det_H != gcd_max_minors(A):
        return f"fail det H={det_H} gcd={gcd_max_minors(A)}"
    return f"ok {rows}x{cols} det_H={det_H}"


def hilbert_instance(rng: np.random.Generator, options: SuiteOptions) -> str:
    """
    The computed basis equals the irreducible points of
    ``{x : 0 <= Ax <= Σ_r Ar}`` over the extreme rays r.

    Every basis element lies in a half-open parallelepiped spanned by some
    rays, so the region holds all of them; any split ``x = y + (x - y)`` of
    a region point stays inside the region, so pairwise tests are exact.
    """
    n = _pick(rng, options.n, [2, 3])
    C = random_small_cone(rng, n, options.delta_max or 4)
    HB = hilbert_basis(C)
    ceiling = tuple(sum(col) for col in zip(*(C.A.apply(r) for r in C.rays)))
    region = Polytope(C.A.negate().stack(C.A), (0,) * C.m + ceiling)
    values = {x: C.A.apply(x) for x in lattice_points(region) if any(x)}
    ordered = sorted(values, key=lambda x: sum(values[x]))
    oracle = []
    for x in ordered:
        vx = values[x]
        below = (y for y in ordered if sum(values[y]) < sum(vx))
        if not any(all(a >= b for a, b in zip(vx, values[y])) for y in below):
            oracle.append(x)
    oracle.sort()
    if tuple(oracle) != HB.elements:
        return f"fail basis {list(HB.elements)} != region oracle {oracle}"
    return f"ok n={n} delta={C.delta} t={len(HB)} region_points={len(ordered)}"


SUITES: Dict[str, Callable[[np.random.Generator, SuiteOptions], str]] = {
    "thm3": thm3_instance,
    "thm4": thm4_instance,
    "thm1": thm1_instance,
    "icp": icp_instance,
    "lemma3": lemma3_instance,
    "lemma2": lemma2_instance,
    "algebra": algebra_instance,
    "hilbert": hilbert_instance,
}

DEFAULT_COUNTS = {
    "thm3": 100,
    "thm4": 50,
    "thm1": 20,
    "icp": 50,
    "lemma3": 200,
    "lemma2": 100,
    "algebra": 500,
    "hilbert": 25,
}


def run_suite(
    kind: str,
    seed: int,
    count: Optional[int] = None,
    options: Optional[SuiteOptions] = None,
    threads: int = 1,
) -> SuiteSummary:
    """Run ``count`` seeded instances of one suite; failures never abort the run."""
    if kind not in SUITES:
        raise PreconditionError(f"unknown suite {kind!r}; choose from {', '.join(SUITES)}")
    instance = SUITES[kind]
    options = options or SuiteOptions()
    count = count if count is not None else DEFAULT_COUNTS[kind]

    def one(index: int) -> SuiteRecord:
        rng = instance_rng(seed, index)
        try:
            detail = instance(rng, options)
        except HilbertCaratheodoryError as e:
            detail = f"fail {type(e).__name__}: {e}"
        return SuiteRecord(index=index, passed=not detail.startswith("fail"), detail=detail)

    records = map_ordered(one, list(range(count)), threads)
    summary = SuiteSummary(kind=kind, seed=seed, count=count, records=records)
    logger.info("suite finished", kind=kind, seed=seed, count=count, failures=summary.failures)
    return summary


def format_summary(summary: SuiteSummary) -> str:
    lines = [f"{r.index} {'pass' if r.passed else 'FAIL'} {r.detail}" for r in summary.records]
    lines.append(
        f"summary kind={summary.kind} seed={summary.seed} count={summary.count} failures={summary.failures}"
    )
    return "\n".join(lines) + "\n"
