"""
Hilbert bases of pointed rational cones.

Candidates are the primitive ray generators plus the lattice points of the
fundamental parallelepipeds of a placing triangulation; the Hilbert basis
is the set of candidates that are not the sum of another candidate and a
non-zero cone point. Lower-dimensional cones are handled in their own
lattice ``lin(C) ∩ Z^n``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from ..config.settings import settings
from ..core.models import HilbertVerificationReport
from ..exactlin import IntMatrix, IntVector, delta_modulus, rank
from ..geometry import ConeH, IntrinsicFrame, Polytope, box_polytope, intrinsic_cone, lattice_points
from ..utils.error_handling import DimensionMismatchError, GuardExceededError, OutsideConeError, PreconditionError
from ..utils.logger import setup_logger
from .fundamental import fundamental_points, simplex_generators, triangulate

logger = setup_logger(__name__)


@dataclass(frozen=True)
class HilbertBasis:
    """
    Sorted Hilbert basis of a cone.

    ``delta_H`` is the largest absolute maximal minor of the element matrix,
    measured in the cone's intrinsic lattice; ``None`` when the basis has
    more than ``delta_h_max_elements`` elements or they do not span.
    """

    cone: ConeH
    elements: Tuple[IntVector, ...]
    delta_H: Optional[int]
    frame: IntrinsicFrame

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element) -> bool:
        return tuple(element) in self.elements

    @property
    def n(self) -> int:
        return self.cone.n

    @property
    def dimension(self) -> int:
        return self.frame.dimension

    def matrix(self) -> IntMatrix:
        """Element matrix with the elements as columns."""
        return IntMatrix.from_columns(self.elements)

    def intrinsic_elements(self) -> Tuple[IntVector, ...]:
        return tuple(self.frame.to_intrinsic(h) for h in self.elements)

    def intrinsic_matrix(self) -> IntMatrix:
        return IntMatrix.from_columns(self.intrinsic_elements())

    def require_delta_H(self) -> int:
        if self.delta_H is None:
            raise GuardExceededError(
                f"delta_H was not computed for {len(self)} elements "
                f"(limit {settings.delta_h_max_elements})"
            )
        return self.delta_H


def _sort_key(v: Sequence[int]):
    return sum(v), tuple(v)


def irreducible_candidates(C: ConeH, candidates: Iterable[Sequence[int]]) -> List[IntVector]:
    """Candidates h with no other candidate h' such that h - h' is a non-zero cone point."""
    pool = sorted({tuple(c) for c in candidates if any(c)}, key=_sort_key)
    keep = []
    for h in pool:
        reducible = False
        for other in pool:
            if other == h:
                continue
            diff = tuple(a - b for a, b in zip(h, other))
            if C.contains(diff):
                reducible = True
                break
        if not reducible:
            keep.append(h)
    return keep


def _delta_H(elements: Sequence[IntVector], d: int) -> Optional[int]:
    if not elements:
        return 1
    if len(elements) > settings.delta_h_max_elements:
        logger.warning("delta_H skipped", elements=len(elements), limit=settings.delta_h_max_elements)
        return None
    M = IntMatrix(tuple(elements))
    if rank(M) < d:
        # a claimed basis that does not span; verification reports the gaps
        return None
    return delta_modulus(M)


@lru_cache(maxsize=256)
def hilbert_basis(C: ConeH) -> HilbertBasis:
    """
    The unique inclusion-minimal generating set of ``C ∩ Z^n``.

    Raises ``NotPointedError`` for cones containing a line.
    """
    C.require_pointed()
    frame = C.intrinsic_frame
    d = frame.dimension
    if d == 0:
        return HilbertBasis(cone=C, elements=(), delta_H=1, frame=frame)

    inner = intrinsic_cone(C)
    rays = inner.rays
    candidates = set(rays)
    simplices = triangulate(rays)
    for simplex in simplices:
        candidates.update(fundamental_points(simplex_generators(rays, simplex)))
    intrinsic = irreducible_candidates(inner, candidates)

    elements = tuple(sorted(frame.from_intrinsic(y) for y in intrinsic))
    delta_H = _delta_H([frame.to_intrinsic(h) for h in elements], d)
    logger.debug(
        "hilbert basis computed",
        dimension=d,
        rays=len(rays),
        simplices=len(simplices),
        candidates=len(candidates),
        elements=len(elements),
        delta_H=delta_H,
    )
    return HilbertBasis(cone=C, elements=elements, delta_H=delta_H, frame=frame)


def basis_from_elements(C: ConeH, elements: Iterable[Sequence[int]]) -> HilbertBasis:
    """Wrap a given element list (e.g. read from a basis file) without recomputing it."""
    C.require_pointed()
    frame = C.intrinsic_frame
    elements = tuple(sorted(tuple(int(v) for v in e) for e in elements))
    for e in elements:
        if len(e) != C.n:
            raise DimensionMismatchError(f"element {e} has the wrong length for dimension {C.n}")
    in_lattice = all(frame.from_intrinsic(frame.to_intrinsic(e)) == e for e in elements)
    delta_H = _delta_H([frame.to_intrinsic(e) for e in elements], frame.dimension) if in_lattice else None
    return HilbertBasis(cone=C, elements=elements, delta_H=delta_H, frame=frame)


def is_irreducible(h: Sequence[int], C: ConeH, candidates: Optional[Iterable[Sequence[int]]] = None) -> bool:
    """
    True iff h is not a sum of two non-zero lattice points of C.

    With ``candidates`` (a superset of the Hilbert basis) the test is
    ``no candidate h' with h - h' in C \\ {0}``; otherwise the lattice points
    of ``{y : 0 <= Ay <= Ah}`` are enumerated.
    """
    h = tuple(h)
    if len(h) != C.n:
        raise DimensionMismatchError(f"vector of length {len(h)} for a cone in dimension {C.n}")
    if not any(h):
        raise PreconditionError("the zero vector is neither reducible nor irreducible")
    if not C.contains(h):
        raise OutsideConeError(f"vector {h} is not in the cone")
    if candidates is not None:
        for other in candidates:
            other = tuple(other)
            if other == h or not any(other):
                continue
            diff = tuple(a - b for a, b in zip(h, other))
            if any(diff) and C.contains(diff):
                return False
        return True
    C.require_pointed()
    Ah = C.A.apply(h)
    below = Polytope(C.A.negate().stack(C.A), (0,) * C.m + tuple(Ah))
    return all(y == h or not any(y) for y in lattice_points(below))


def verify_hilbert_basis(HB: HilbertBasis, delta: int) -> HilbertVerificationReport:
    """
    Certify a claimed basis: every element irreducible, and every lattice
    point of ``C ∩ [-δ, δ]^n`` a non-negative integer combination.
    """
    from ..caratheodory.lp_rounding import search_integral_point

    C = HB.cone
    report = HilbertVerificationReport(box=delta, elements=len(HB))
    for h in HB.elements:
        try:
            ok = is_irreducible(h, C)
        except PreconditionError:
            ok = False
        if not ok:
            report.irreducibility_failures.append(h)

    points = lattice_points(box_polytope(C, delta))
    report.checked_points = len(points)
    # elements outside C are already reported above and cannot be weighted
    generators = [h for h in HB.elements if any(h) and C.contains(h)]
    for x in points:
        if search_integral_point(generators, x, C.A) is None:
            report.generation_failures.append(x)
    logger.debug(
        "hilbert basis verified",
        box=delta,
        points=len(points),
        irreducibility_failures=len(report.irreducibility_failures),
        generation_failures=len(report.generation_failures),
    )
    return report
