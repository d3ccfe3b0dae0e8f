"""Dense square matrices over the Gaussian rationals, all arithmetic exact."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import GaussianRational, ScalarLike, scalar_from_json, scalar_to_json


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple[tuple[GaussianRational, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: row of length {len(row)} in {n}x{n}")

    @staticmethod
    def from_rows(rows: Iterable[Sequence[ScalarLike]]) -> SquareMatrix:
        return SquareMatrix(
            tuple(tuple(GaussianRational.of(x) for x in row) for row in rows)
        )

    @staticmethod
    def identity(n: int) -> SquareMatrix:
        return SquareMatrix.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(n: int) -> SquareMatrix:
        return SquareMatrix.from_rows([[0] * n for _ in range(n)])

    @staticmethod
    def diagonal(entries: Sequence[ScalarLike]) -> SquareMatrix:
        n = len(entries)
        return SquareMatrix.from_rows(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.rows[i][j]

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        self._check_dim(other)
        return SquareMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: SquareMatrix) -> SquareMatrix:
        self._check_dim(other)
        return SquareMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> SquareMatrix:
        return SquareMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, SquareMatrix):
            self._check_dim(other)
            cols = tuple(zip(*other.rows))
            return SquareMatrix(
                tuple(
                    tuple(sum((a * b for a, b in zip(row, col)), GaussianRational())
                          for col in cols)
                    for row in self.rows
                )
            )
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> SquareMatrix:
        return self.scale(other)

    def scale(self, factor: ScalarLike) -> SquareMatrix:
        c = GaussianRational.of(factor)
        return SquareMatrix(tuple(tuple(c * a for a in row) for row in self.rows))

    def __pow__(self, k: int) -> SquareMatrix:
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        result = SquareMatrix.identity(self.n)
        for _ in range(k):
            result = result * self
        return result

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(tuple(zip(*self.rows)))

    def conjugate_transpose(self) -> SquareMatrix:
        return SquareMatrix(
            tuple(tuple(a.conjugate() for a in col) for col in zip(*self.rows))
        )

    def trace(self) -> GaussianRational:
        return sum((self.rows[i][i] for i in range(self.n)), GaussianRational())

    def determinant(self) -> GaussianRational:
        """Exact determinant by Gaussian elimination over the scalar field."""
        n = self.n
        work = [list(row) for row in self.rows]
        det = GaussianRational(Fraction(1))
        for col in range(n):
            pivot_row = next(
                (r for r in range(col, n) if not work[r][col].is_zero()), None
            )
            if pivot_row is None:
                return GaussianRational()
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                det = -det
            pivot = work[col][col]
            det = det * pivot
            for r in range(col + 1, n):
                factor = work[r][col] / pivot
                if factor.is_zero():
                    continue
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return det

    def kron(self, other: SquareMatrix) -> SquareMatrix:
        """Tensor (Kronecker) product, self as the left factor."""
        m = other.n
        size = self.n * m
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                row.append(self.rows[i // m][j // m] * other.rows[i % m][j % m])
            rows.append(tuple(row))
        return SquareMatrix(tuple(rows))

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def is_real(self) -> bool:
        return all(a.is_real() for row in self.rows for a in row)

    def is_hermitian(self) -> bool:
        return self == self.conjugate_transpose()

    def anticommutator(self, other: SquareMatrix) -> SquareMatrix:
        return self * other + other * self

    def commutator(self, other: SquareMatrix) -> SquareMatrix:
        return self * other - other * self

    def to_lists(self) -> list[list[dict]]:
        return [[scalar_to_json(a) for a in row] for row in self.rows]

    @staticmethod
    def from_lists(data: Sequence[Sequence]) -> SquareMatrix:
        rows = []
        for row in data:
            parsed = []
            for cell in row:
                if isinstance(cell, dict):
                    parsed.append(scalar_from_json(cell))
                elif isinstance(cell, str):
                    from .scalars import parse_scalar

                    parsed.append(parse_scalar(cell))
                elif isinstance(cell, list) and len(cell) == 2:
                    parsed.append(GaussianRational(Fraction(cell[0], cell[1])))
                else:
                    parsed.append(GaussianRational.of(cell))
            rows.append(tuple(parsed))
        return SquareMatrix(tuple(rows))

    def __str__(self) -> str:
        cells = [[str(a) for a in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(
            "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells
        )

    def _check_dim(self, other: SquareMatrix) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n}x{self.n} vs {other.n}x{other.n}")


def scalar_matrix(n: int, value: ScalarLike) -> SquareMatrix:
    return SquareMatrix.identity(n).scale(value)
