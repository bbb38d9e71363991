"""Exact integer matrices and Smith normal form."""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)


def _object_zeros(rows: int, cols: int) -> np.ndarray:
    array = np.empty((rows, cols), dtype=object)
    array.fill(0)
    return array


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """Integer matrix backed by a numpy object array of Python ints.

    Entries never overflow; every arithmetic step stays in Python ints.
    """

    entries: np.ndarray

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> "IntMatrix":
        """Build a matrix from nested sequences.

        Args:
            rows: Row-major entries
            n_cols: Column count, required when ``rows`` is empty

        Returns:
            IntMatrix with exact entries
        """
        if not rows:
            return cls.zeros(0, n_cols or 0)
        width = len(rows[0])
        array = _object_zeros(len(rows), width)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError("ragged rows")
            for j, value in enumerate(row):
                array[i, j] = int(value)
        return cls(array)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(_object_zeros(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        array = _object_zeros(n, n)
        for i in range(n):
            array[i, i] = 1
        return cls(array)

    @classmethod
    def column(cls, values: Iterable[int]) -> "IntMatrix":
        values = [int(v) for v in values]
        array = _object_zeros(len(values), 1)
        for i, value in enumerate(values):
            array[i, 0] = value
        return cls(array)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.entries.T.copy())

    def __getitem__(self, key):
        return self.entries[key]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix(np.asarray(self.entries @ other.entries, dtype=object))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Multiply by a column vector and return the result as a tuple."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.shape} matrix")
        return tuple(
            sum((self.entries[i, j] * int(vector[j]) for j in range(self.cols)), 0)
            for i in range(self.rows)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self.entries == other.entries))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.to_lists_flat())))

    def is_zero(self) -> bool:
        return all(value == 0 for value in self.entries.flat)

    def to_lists(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def to_lists_flat(self) -> list[int]:
        return [int(v) for v in self.entries.flat]

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.entries.copy())

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [[int(v) for v in row] for row in self.entries]
        sign = 1
        previous = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
            previous = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True, eq=False)
class SNFDecomposition:
    """Smith normal form ``U @ A @ V == S`` with the inverses of U and V."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(self.S[i, i]) for i in range(min(self.S.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Non-zero diagonal entries, in divisibility order."""
        return tuple(d for d in self.diagonal if d != 0)

    def verify(self, matrix: IntMatrix) -> bool:
        """Check every Smith form invariant exactly against ``matrix``."""
        if self.U @ matrix @ self.V != self.S:
            return False
        if self.U @ self.U_inv != IntMatrix.identity(self.U.rows):
            return False
        if self.V @ self.V_inv != IntMatrix.identity(self.V.rows):
            return False
        for i in range(self.S.rows):
            for j in range(self.S.cols):
                if i != j and self.S[i, j] != 0:
                    return False
        diagonal = self.diagonal
        if any(d < 0 for d in diagonal):
            return False
        for first, second in zip(diagonal, diagonal[1:]):
            if first == 0 and second != 0:
                return False
            if first != 0 and second % first != 0:
                return False
        return True


class _Reducer:
    """Row/column elimination that keeps U, V and their inverses in step."""

    def __init__(self, matrix: IntMatrix):
        m, n = matrix.shape
        self.D = matrix.entries.copy()
        self.U = IntMatrix.identity(m).entries
        self.U_inv = IntMatrix.identity(m).entries
        self.V = IntMatrix.identity(n).entries
        self.V_inv = IntMatrix.identity(n).entries

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.D[[i, j]] = self.D[[j, i]]
        self.U[[i, j]] = self.U[[j, i]]
        self.U_inv[:, [i, j]] = self.U_inv[:, [j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        self.D[:, [i, j]] = self.D[:, [j, i]]
        self.V[:, [i, j]] = self.V[:, [j, i]]
        self.V_inv[[i, j]] = self.V_inv[[j, i]]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]."""
        self.D[target] = self.D[target] + factor * self.D[source]
        self.U[target] = self.U[target] + factor * self.U[source]
        self.U_inv[:, source] = self.U_inv[:, source] - factor * self.U_inv[:, target]

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]."""
        self.D[:, target] = self.D[:, target] + factor * self.D[:, source]
        self.V[:, target] = self.V[:, target] + factor * self.V[:, source]
        self.V_inv[source] = self.V_inv[source] - factor * self.V_inv[target]

    def negate_row(self, i: int) -> None:
        self.D[i] = -self.D[i]
        self.U[i] = -self.U[i]
        self.U_inv[:, i] = -self.U_inv[:, i]

    def pivot(self, k: int) -> tuple[int, int] | None:
        """Smallest non-zero |entry| in the trailing block, ties broken lexicographically."""
        best = None
        best_value = None
        m, n = self.D.shape
        for i in range(k, m):
            for j in range(k, n):
                value = abs(self.D[i, j])
                if value and (best_value is None or value < best_value):
                    best, best_value = (i, j), value
        return best

    def reduce(self) -> None:
        m, n = self.D.shape
        for k in range(min(m, n)):
            while True:
                position = self.pivot(k)
                if position is None:
                    return
                self.swap_rows(k, position[0])
                self.swap_cols(k, position[1])
                p = self.D[k, k]

                clean = True
                for i in range(k + 1, m):
                    if self.D[i, k] != 0:
                        self.add_row(i, k, -(self.D[i, k] // p))
                        clean = clean and self.D[i, k] == 0
                for j in range(k + 1, n):
                    if self.D[k, j] != 0:
                        self.add_col(j, k, -(self.D[k, j] // p))
                        clean = clean and self.D[k, j] == 0
                if not clean:
                    continue

                offender = next(
                    (i for i in range(k + 1, m) for j in range(k + 1, n) if self.D[i, j] % p != 0),
                    None,
                )
                if offender is not None:
                    self.add_row(k, offender, 1)
                    continue
                break
            if self.D[k, k] < 0:
                self.negate_row(k)


def smith_normal_form(matrix: IntMatrix) -> SNFDecomposition:
    """Compute the Smith normal form of an integer matrix.

    Pivots are the smallest non-zero absolute value of the trailing block (ties:
    lexicographically least position), so the returned bases are reproducible.

    Args:
        matrix: Any integer matrix, including empty shapes

    Returns:
        SNFDecomposition with ``U @ matrix @ V == S``
    """
    reducer = _Reducer(matrix)
    reducer.reduce()
    logger.debug("smith form of %dx%d matrix computed", matrix.rows, matrix.cols)
    return SNFDecomposition(
        U=IntMatrix(reducer.U),
        S=IntMatrix(reducer.D),
        V=IntMatrix(reducer.V),
        U_inv=IntMatrix(reducer.U_inv),
        V_inv=IntMatrix(reducer.V_inv),
    )
