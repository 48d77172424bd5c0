"""
Hermite and Smith normal forms with their unimodular transforms.

The elimination keeps the transforms in lockstep with the reduced matrix
(``add_rows`` / ``add_columns`` style), so the defining identities can be
checked exactly at the end of every call.
"""

from dataclasses import dataclass
from typing import List, Tuple

from sympy import ZZ

from ..utils.error_handling import InternalCheckError, RankDeficientError
from ..utils.logger import setup_logger
from .matrix import IntMatrix

logger = setup_logger(__name__)


@dataclass(frozen=True)
class HermiteDecomposition:
    """
    ``A_I · U_inv = (H, 0)`` and ``A_I = (H, 0) · U``.

    H is k x k lower triangular with positive diagonal, entries left of a
    pivot reduced into [0, pivot). ``swaps`` records the column exchanges
    performed, in order.
    """

    H: IntMatrix
    U: IntMatrix
    U_inv: IntMatrix
    swaps: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U · A · V = D`` with D diagonal and d_1 | d_2 | ... ."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    diagonal: Tuple[int, ...]


def _eye(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _frozen(m: List[List[int]]) -> IntMatrix:
    return IntMatrix(tuple(tuple(r) for r in m))


def add_columns(m: List[List[int]], i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # replace m[:, i] by a*m[:, i] + b*m[:, j]
    # and m[:, j] by c*m[:, i] + d*m[:, j]
    for row in m:
        e = row[i]
        row[i] = a * e + b * row[j]
        row[j] = c * e + d * row[j]


def add_rows(m: List[List[int]], i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # replace m[i, :] by a*m[i, :] + b*m[j, :]
    # and m[j, :] by c*m[i, :] + d*m[j, :]
    ri, rj = m[i], m[j]
    m[i] = [a * x + b * y for x, y in zip(ri, rj)]
    m[j] = [c * x + d * y for x, y in zip(ri, rj)]


class _ColumnReducer:
    """Column operations applied to W = A·V with U = V⁻¹ kept alongside."""

    def __init__(self, A: IntMatrix):
        n = A.ncols
        self.W = [list(r) for r in A.rows]
        self.V = _eye(n)
        self.U = _eye(n)
        self.swaps: List[Tuple[int, int]] = []

    def swap(self, i: int, j: int) -> None:
        for m in (self.W, self.V):
            for row in m:
                row[i], row[j] = row[j], row[i]
        self.U[i], self.U[j] = self.U[j], self.U[i]
        self.swaps.append((i, j))

    def negate(self, i: int) -> None:
        for m in (self.W, self.V):
            for row in m:
                row[i] = -row[i]
        self.U[i] = [-x for x in self.U[i]]

    def subtract(self, j: int, i: int, q: int) -> None:
        # col_j -= q * col_i; inverse: row_i(U) += q * row_j(U)
        if q == 0:
            return
        for m in (self.W, self.V):
            for row in m:
                row[j] -= q * row[i]
        self.U[i] = [x + q * y for x, y in zip(self.U[i], self.U[j])]

    def combine(self, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j), ad - bc = 1
        add_columns(self.W, i, j, a, b, c, d)
        add_columns(self.V, i, j, a, b, c, d)
        add_rows(self.U, i, j, d, -c, -b, a)


def hermite(A: IntMatrix) -> HermiteDecomposition:
    """
    Column-style Hermite normal form of a k x n matrix of full row rank.

    Returns H, U and U⁻¹ with ``A · U⁻¹ = (H, 0)``; both identities
    ``A · U⁻¹ = (H, 0)`` and ``U · U⁻¹ = I`` are verified before returning.
    """
    k, n = A.shape
    if k > n:
        raise RankDeficientError(f"{k}x{n} matrix cannot have full row rank")
    red = _ColumnReducer(A)
    W = red.W

    for r in range(k):
        for j in range(r + 1, n):
            while W[r][j] != 0:
                p, x = W[r][r], W[r][j]
                if p == 0:
                    red.swap(r, j)
                elif x % p == 0:
                    red.subtract(j, r, x // p)
                else:
                    s, t, g = ZZ.gcdex(ZZ(p), ZZ(x))
                    red.combine(r, j, int(s), int(t), -(x // int(g)), p // int(g))
        if W[r][r] == 0:
            raise RankDeficientError(f"matrix {A} does not have full row rank")
        if W[r][r] < 0:
            red.negate(r)
        pivot = W[r][r]
        for j in range(r):
            red.subtract(j, r, W[r][j] // pivot)

    H = IntMatrix(tuple(tuple(W[i][:k]) for i in range(k)))
    U = _frozen(red.U)
    U_inv = _frozen(red.V)

    expected = tuple(tuple(W[i][:k]) + (0,) * (n - k) for i in range(k))
    if A.matmul(U_inv).rows != expected:
        raise InternalCheckError("Hermite round trip A·U⁻¹ = (H, 0) failed")
    if U.matmul(U_inv) != IntMatrix.identity(n):
        raise InternalCheckError("Hermite transform is not inverted by U⁻¹")

    logger.debug("hermite normal form", shape=A.shape, swaps=len(red.swaps))
    return HermiteDecomposition(H=H, U=U, U_inv=U_inv, swaps=tuple(red.swaps))


def smith(A: IntMatrix) -> SmithDecomposition:
    """
    Smith normal form with transforms: ``U · A · V = D``.

    Minimum-pivot elimination followed by a divisibility repair; the
    diagonal is non-negative and satisfies d_i | d_{i+1}.
    """
    rows, cols = A.shape
    M = [list(r) for r in A.rows]
    U = _eye(rows)
    V = _eye(cols)

    def swap_rows(i: int, j: int) -> None:
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for m in (M, V):
            for row in m:
                row[i], row[j] = row[j], row[i]

    def row_sub(i: int, t: int, q: int) -> None:
        # row_i -= q * row_t
        for m in (M, U):
            m[i] = [x - q * y for x, y in zip(m[i], m[t])]

    def col_sub(j: int, t: int, q: int) -> None:
        # col_j -= q * col_t
        for m in (M, V):
            for row in m:
                row[j] -= q * row[t]

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(M[i][j]), i, j)
                       for i in range(t, rows) for j in range(t, cols) if M[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            pivot = M[t][t]
            for i in range(t + 1, rows):
                if M[i][t]:
                    row_sub(i, t, M[i][t] // pivot)
            for j in range(t + 1, cols):
                if M[t][j]:
                    col_sub(j, t, M[t][j] // pivot)
            if any(M[i][t] for i in range(t + 1, rows)) or any(M[t][j] for j in range(t + 1, cols)):
                continue
            offender = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if M[i][j] % pivot != 0),
                None,
            )
            if offender is None:
                break
            # pull the non-divisible row into row t; the next pass lowers the pivot
            M[t] = [x + y for x, y in zip(M[t], M[offender])]
            U[t] = [x + y for x, y in zip(U[t], U[offender])]
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]

    D = _frozen(M)
    Uf, Vf = _frozen(U), _frozen(V)
    if Uf.matmul(A).matmul(Vf) != D:
        raise InternalCheckError("Smith identity U·A·V = D failed")
    diagonal = tuple(M[i][i] for i in range(min(rows, cols)))
    return SmithDecomposition(D=D, U=Uf, V=Vf, diagonal=diagonal)
