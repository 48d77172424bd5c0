"""
Lattice points of half-open fundamental parallelepipeds and the placing
triangulation used to cover a cone by simplicial pieces.
"""

from fractions import Fraction
from itertools import product
from math import floor
from typing import Dict, List, Sequence, Tuple

from ..exactlin import IntMatrix, IntVector, det, inverse, smith
from ..exactlin.determinants import rat_apply
from ..exactlin.matrix import independent_rows
from ..utils.error_handling import RankDeficientError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

Simplex = Tuple[int, ...]


def fundamental_points(generators: Sequence[Sequence[int]]) -> List[IntVector]:
    """
    Lattice points of ``{Σ λ_i g_i : 0 <= λ_i < 1}``.

    Coset representatives of Z^n / GZ^n come from the Smith form
    ``U G V = D`` as ``U⁻¹ y`` with ``0 <= y_i < d_i``, and are then reduced
    into the parallelepiped. Exactly ``|det G|`` points, 0 included.
    """
    G = IntMatrix.from_columns(generators)
    if not G.is_square or det(G) == 0:
        raise RankDeficientError("fundamental parallelepiped needs n linearly independent generators")
    n = G.nrows
    snf = smith(G)
    U_inv = inverse(snf.U)
    G_inv = inverse(G)
    points = []
    for y in product(*(range(d) for d in snf.diagonal)):
        x = rat_apply(U_inv, y)
        lam = rat_apply(G_inv, x)
        shift = [floor(v) for v in lam]
        p = tuple(int(xi - sum(G.rows[i][j] * shift[j] for j in range(n))) for i, xi in enumerate(x))
        points.append(p)
    return sorted(points)


def _coefficients(generators: Sequence[Sequence[int]], x: Sequence[int]) -> Tuple[Fraction, ...]:
    return rat_apply(inverse(IntMatrix.from_columns(generators)), x)


def triangulate(rays: Sequence[Sequence[int]]) -> List[Simplex]:
    """
    Placing triangulation of a full-dimensional pointed cone.

    Rays are placed in the order given (callers pass them lexicographically
    sorted). The first n independent rays form the initial simplex; each
    further ray is joined to every boundary facet it sees. Simplices are
    returned as sorted tuples of ray indices.
    """
    rays = [tuple(r) for r in rays]
    if not rays:
        return []
    n = len(rays[0])
    start = independent_rows(IntMatrix(tuple(rays)))
    if len(start) < n:
        raise RankDeficientError("rays do not span the ambient space")
    simplices: List[Simplex] = [tuple(start)]
    for r in range(len(rays)):
        if r in start:
            continue
        facet_count: Dict[Simplex, List[Tuple[Simplex, int]]] = {}
        for s in simplices:
            for opposite in s:
                facet = tuple(i for i in s if i != opposite)
                facet_count.setdefault(facet, []).append((s, opposite))
        added = []
        for facet, owners in facet_count.items():
            if len(owners) != 1:
                continue
            s, opposite = owners[0]
            coeffs = _coefficients([rays[i] for i in s], rays[r])
            if coeffs[s.index(opposite)] < 0:
                added.append(tuple(sorted(facet + (r,))))
        simplices.extend(added)
    logger.debug("cone triangulated", rays=len(rays), simplices=len(simplices))
    return simplices


def simplex_generators(rays: Sequence[Sequence[int]], simplex: Simplex) -> List[IntVector]:
    return [tuple(rays[i]) for i in simplex]
