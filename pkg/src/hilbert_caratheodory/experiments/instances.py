"""
Seeded random instances for the experiment suites.

Every generator takes a ``numpy.random.Generator``; suites derive one per
instance from ``(seed, index)`` so instances do not depend on each other.
Matrices are returned as exact ``IntMatrix`` values; numpy only draws.
"""

from fractions import Fraction
from math import floor
from typing import Callable, Optional, Tuple

import numpy as np

from ..exactlin import IntMatrix, IntVector, delta_modulus, rank
from ..geometry import ConeH
from ..utils.error_handling import InternalCheckError

MAX_TRIES = 500


def instance_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _draw(rng: np.random.Generator, low: int, high: int, size) -> list:
    return rng.integers(low, high + 1, size=size).tolist()


def random_unimodular(rng: np.random.Generator, n: int, steps: Optional[int] = None) -> IntMatrix:
    """Product of random elementary integer column operations and swaps."""
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return IntMatrix(tuple(tuple(r) for r in M))
    for _ in range(steps if steps is not None else 2 * n):
        i, j = _draw(rng, 0, n - 1, 2)
        if i == j:
            continue
        c = int(rng.choice([-1, 1]))
        for row in M:
            row[i] += c * row[j]
        if rng.random() < 0.3:
            for row in M:
                row[i], row[j] = row[j], row[i]
    return IntMatrix(tuple(tuple(r) for r in M))


def _permute_rows(rng: np.random.Generator, A: IntMatrix) -> IntMatrix:
    order = rng.permutation(A.nrows).tolist()
    return A.select_rows(order)


def _reject(draw: Callable[[], IntMatrix], accept: Callable[[IntMatrix], bool], what: str) -> IntMatrix:
    for _ in range(MAX_TRIES):
        A = draw()
        if accept(A):
            return A
    raise InternalCheckError(f"no {what} found in {MAX_TRIES} draws")


def random_delta2_matrix(rng: np.random.Generator, n: int, extra_rows: Optional[int] = None) -> IntMatrix:
    """
    Full-column-rank matrix with Δ(A) <= 2: ``[I; R]`` with a small random R
    (rejected until every minor of R is at most 2), times a unimodular
    matrix, rows shuffled.
    """
    k = extra_rows if extra_rows is not None else int(rng.integers(0, 4))

    def draw() -> IntMatrix:
        rows = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        for _ in range(k):
            rows.append(tuple(_draw(rng, -1, 1, n)))
        return IntMatrix(tuple(rows))

    base = _reject(draw, lambda A: delta_modulus(A) <= 2, "matrix with delta at most 2")
    return _permute_rows(rng, base.matmul(random_unimodular(rng, n)))


def random_simplicial_matrix(rng: np.random.Generator, n: int, delta: int) -> IntMatrix:
    """Square matrix with ``|det A| = delta``: ``U1 · diag(1, ..., 1, delta) · U2``."""
    D = IntMatrix.diagonal([1] * (n - 1) + [delta])
    return random_unimodular(rng, n).matmul(D).matmul(random_unimodular(rng, n))


def random_small_cone(
    rng: np.random.Generator, n: int, delta_max: int, max_rows: Optional[int] = None, entry: int = 2
) -> ConeH:
    """Pointed full-dimensional cone with ``Δ(A) <= delta_max`` and small entries."""
    rows_cap = max_rows if max_rows is not None else n + 2

    def draw() -> IntMatrix:
        m = int(rng.integers(n, rows_cap + 1))
        return IntMatrix(tuple(tuple(_draw(rng, -entry, entry, n)) for _ in range(m)))

    def accept(A: IntMatrix) -> bool:
        if rank(A) < n or delta_modulus(A) > delta_max:
            return False
        return ConeH(A).is_full_dimensional

    return ConeH(_reject(draw, accept, f"cone with delta at most {delta_max}"))


def random_cone_point(rng: np.random.Generator, C: ConeH, bound: int = 50) -> IntVector:
    """
    Non-zero lattice point of C with coordinates in ``[-bound, bound]``:
    the floor of a random non-negative rational combination of the rays,
    accepted when it stays in the cone.
    """
    rays = C.rays
    if not rays:
        return tuple(0 for _ in range(C.n))
    scale = 8
    for _ in range(MAX_TRIES):
        coeffs = [Fraction(c, 4) for c in _draw(rng, 0, 4 * scale, len(rays))]
        z = tuple(floor(sum(c * r[j] for c, r in zip(coeffs, rays))) for j in range(C.n))
        if not any(z) or max(abs(v) for v in z) > bound:
            scale = max(1, scale - 1)
            continue
        if C.contains(z):
            return z
    return rays[0]


def random_face_point(rng: np.random.Generator, C: ConeH) -> Tuple[Tuple[int, ...], IntVector]:
    """
    A point v summing a random non-empty subset of the rays, with the rows
    tight at v; v lies in the relative interior of the face those rows cut out.
    """
    rays = C.rays
    chosen = [r for r, keep in zip(rays, rng.random(len(rays)) < 0.5) if keep] or [rays[int(rng.integers(len(rays)))]]
    v = tuple(sum(r[j] for r in chosen) for j in range(C.n))
    tight = tuple(i for i, value in enumerate(C.A.apply(v)) if value == 0)
    return tight, v


def random_integer_matrix(rng: np.random.Generator, rows: int, cols: int, entry: int = 9) -> IntMatrix:
    return IntMatrix(tuple(tuple(_draw(rng, -entry, entry, cols)) for _ in range(rows)))
