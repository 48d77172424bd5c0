"""
Exact integer matrices and rational vectors.

Every matrix in the package is an ``IntMatrix``: an immutable, hashable
row-major tuple of Python integers. Rational data (LP values, solutions of
linear systems) is carried as tuples of ``fractions.Fraction``.
"""

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ..utils.error_handling import ShapeError
from ..utils.validators import validate_matrix_rows

IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]


def int_vector(values: Iterable) -> IntVector:
    """Coerce integer-like values (Python or numpy ints) to an ``IntVector``."""
    return tuple(operator.index(v) for v in values)


def rat_vector(values: Iterable) -> RatVector:
    """Coerce values to a vector of canonical fractions."""
    return tuple(Fraction(v) for v in values)


def is_integral(values: Iterable) -> bool:
    return all(Fraction(v).denominator == 1 for v in values)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with at least one row and one column."""

    rows: Tuple[IntVector, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not validate_matrix_rows(rows):
            raise ShapeError("matrix must be a non-empty rectangular array of integers")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "IntMatrix":
        return cls(tuple(int_vector(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise ShapeError("at least one column is required")
        return cls.from_rows(zip(*columns))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: int) -> IntVector:
        return self.rows[index]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def col(self, j: int) -> IntVector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> Tuple[IntVector, ...]:
        return tuple(zip(*self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.columns())

    def select_rows(self, indices: Iterable[int]) -> "IntMatrix":
        return IntMatrix(tuple(self.rows[i] for i in indices))

    def select_cols(self, indices: Iterable[int]) -> "IntMatrix":
        indices = tuple(indices)
        return IntMatrix(tuple(tuple(r[j] for j in indices) for r in self.rows))

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        if other.ncols != self.ncols:
            raise ShapeError(f"cannot stack {self.shape} on {other.shape}")
        return IntMatrix(self.rows + other.rows)

    def negate(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-v for v in r) for r in self.rows))

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product; works for integer and ``Fraction`` vectors."""
        if len(vector) != self.ncols:
            raise ShapeError(f"vector of length {len(vector)} does not fit {self.shape}")
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.rows)

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows
        ))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return self.matmul(other)

    def to_domain(self) -> DomainMatrix:
        """Dense sympy ``DomainMatrix`` over ZZ."""
        return DomainMatrix([[ZZ(v) for v in r] for r in self.rows], self.shape, ZZ)

    def to_text(self, header: Optional[str] = None) -> str:
        head = header if header is not None else f"matrix {self.nrows} {self.ncols}"
        body = "\n".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"{head}\n{body}\n"

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows) + "]"


def block_diagonal(first: IntMatrix, second: IntMatrix) -> IntMatrix:
    """Block-diagonal matrix ``diag(first, second)``."""
    left_pad = (0,) * second.ncols
    right_pad = (0,) * first.ncols
    rows = tuple(r + left_pad for r in first.rows) + tuple(right_pad + r for r in second.rows)
    return IntMatrix(rows)


def independent_rows(A: IntMatrix, candidates: Optional[Iterable[int]] = None) -> Tuple[int, ...]:
    """Greedy maximal linearly independent subset of rows, in the given order."""
    from .determinants import rank

    chosen: Tuple[int, ...] = ()
    target = None
    for i in (range(A.nrows) if candidates is None else candidates):
        trial = chosen + (i,)
        if rank(A.select_rows(trial)) == len(trial):
            chosen = trial
            if target is None:
                target = min(A.shape)
            if len(chosen) == target:
                break
    return chosen
