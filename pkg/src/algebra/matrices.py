"""Square and rectangular matrices over CycloScalar with exact elimination."""
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from algebra.exact_scalars import CycloScalar, Level, embed_numeric
from utilities.errors import DimensionMismatch, DivisionByZero

logger = logging.getLogger(__name__)

SparseRow = Dict[int, CycloScalar]


class RepMatrix:
    def __init__(self, rows: Sequence[Sequence[CycloScalar]], level: Level):
        self.level = level
        self.rows: List[List[CycloScalar]] = [list(row) for row in rows]
        width = len(self.rows[0]) if self.rows else 0
        if any(len(row) != width for row in self.rows):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def identity(cls, n: int, level: Level) -> "RepMatrix":
        return cls.diagonal([CycloScalar.one(level)] * n, level)

    @classmethod
    def zero(cls, n: int, level: Level, m: Optional[int] = None) -> "RepMatrix":
        zero = CycloScalar.zero(level)
        return cls([[zero] * (n if m is None else m) for _ in range(n)], level)

    @classmethod
    def diagonal(cls, entries: Sequence[CycloScalar], level: Level) -> "RepMatrix":
        matrix = cls.zero(len(entries), level)
        for i, value in enumerate(entries):
            matrix.rows[i][i] = value
        return matrix

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[CycloScalar]], level: Level) -> "RepMatrix":
        return cls([list(row) for row in zip(*columns)], level)

    @classmethod
    def from_integers(cls, rows: Sequence[Sequence[int]], level: Level) -> "RepMatrix":
        return cls([[CycloScalar.rational(level, v) for v in row] for row in rows], level)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> CycloScalar:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> List[CycloScalar]:
        return [row[j] for row in self.rows]

    def is_square(self) -> bool:
        rows, cols = self.shape
        return rows == cols

    # arithmetic

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        rows, inner = self.shape
        if other.shape[0] != inner:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.shape[1]
        zero = CycloScalar.zero(self.level)
        result = []
        for row in self.rows:
            out = [zero] * cols
            for k, a in enumerate(row):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.rows[k]):
                    if not b.is_zero():
                        out[j] = out[j] + a * b
            result.append(out)
        return RepMatrix(result, self.level)

    def apply(self, vector: Sequence[CycloScalar]) -> List[CycloScalar]:
        zero = CycloScalar.zero(self.level)
        result = []
        for row in self.rows:
            total = zero
            for a, x in zip(row, vector):
                if not a.is_zero() and not x.is_zero():
                    total = total + a * x
            result.append(total)
        return result

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        self._same_shape(other)
        return RepMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.level)

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        self._same_shape(other)
        return RepMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.level)

    def scale(self, c: CycloScalar) -> "RepMatrix":
        return RepMatrix([[c * a for a in row] for row in self.rows], self.level)

    def __pow__(self, k: int) -> "RepMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = RepMatrix.identity(self.n, self.level)
        for _ in range(k):
            result = result @ self
        return result

    def transpose(self) -> "RepMatrix":
        return RepMatrix([list(col) for col in zip(*self.rows)], self.level)

    def commutator(self, other: "RepMatrix") -> "RepMatrix":
        return self @ other - other @ self

    def _same_shape(self, other: "RepMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    # structure

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def is_diagonal(self) -> bool:
        return all(a.is_zero() for i, row in enumerate(self.rows) for j, a in enumerate(row) if i != j)

    def diagonal_entries(self) -> List[CycloScalar]:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def is_scalar(self) -> bool:
        if not self.is_diagonal():
            return False
        entries = self.diagonal_entries()
        return all(e == entries[0] for e in entries)

    def leading_entry(self) -> CycloScalar:
        for row in self.rows:
            for a in row:
                if not a.is_zero():
                    return a
        raise DivisionByZero("the zero matrix has no leading entry")

    def normalized(self) -> "RepMatrix":
        """Projective representative: divided by its first nonzero entry."""
        return self.scale(self.leading_entry().inverse())

    def projectively_equal(self, other: "RepMatrix") -> bool:
        if self.shape != other.shape:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized() == other.normalized()

    def sparse_rows(self) -> List[SparseRow]:
        return [{j: a for j, a in enumerate(row) if not a.is_zero()} for row in self.rows]

    def rank(self) -> int:
        return rank(self.sparse_rows())

    def determinant(self) -> CycloScalar:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        work = [list(row) for row in self.rows]
        n = self.n
        det = CycloScalar.one(self.level)
        for col in range(n):
            pivot = next((i for i in range(col, n) if not work[i][col].is_zero()), None)
            if pivot is None:
                return CycloScalar.zero(self.level)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            head = work[col][col]
            det = det * head
            inv = head.inverse()
            for i in range(col + 1, n):
                if work[i][col].is_zero():
                    continue
                factor = work[i][col] * inv
                work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
        return det

    def inverse(self) -> "RepMatrix":
        n = self.n
        identity = RepMatrix.identity(n, self.level)
        columns = [solve(self, identity.column(j)) for j in range(n)]
        return RepMatrix.from_columns(columns, self.level)

    def numeric(self, digits: int = 12) -> np.ndarray:
        return np.array([[embed_numeric(a, digits) for a in row] for row in self.rows], dtype=complex)

    def to_lists(self) -> List[List[dict]]:
        return [[a.to_dict() for a in row] for row in self.rows]

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[dict]]) -> "RepMatrix":
        rows = [[CycloScalar.from_dict(a) for a in row] for row in data]
        return cls(rows, rows[0][0].level)

    def __repr__(self) -> str:
        return f"RepMatrix({self.shape[0]}x{self.shape[1]}, r={self.level.r})"


class EchelonBasis:
    """Row-echelon accumulator: each stored row has leading coefficient 1 at its pivot."""

    def __init__(self):
        self.rows: Dict[int, SparseRow] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vector: SparseRow) -> SparseRow:
        work = {j: a for j, a in vector.items() if not a.is_zero()}
        for pivot in sorted(self.rows):
            coeff = work.get(pivot)
            if coeff is None:
                continue
            for j, a in self.rows[pivot].items():
                value = work[j] - coeff * a if j in work else -(coeff * a)
                if value.is_zero():
                    work.pop(j, None)
                else:
                    work[j] = value
        return work

    def add(self, vector: SparseRow) -> bool:
        """Insert the vector; False when it already lies in the span."""
        work = self.reduce(vector)
        if not work:
            return False
        pivot = min(work)
        inv = work[pivot].inverse()
        self.rows[pivot] = {j: a * inv for j, a in work.items()}
        return True

    def reduced(self) -> Dict[int, SparseRow]:
        """Reduced row-echelon form: every pivot column is zero outside its own row."""
        rows = {p: dict(row) for p, row in self.rows.items()}
        for pivot in sorted(rows, reverse=True):
            for other in rows:
                if other == pivot or pivot not in rows[other]:
                    continue
                coeff = rows[other][pivot]
                target = rows[other]
                for j, a in rows[pivot].items():
                    value = target[j] - coeff * a if j in target else -(coeff * a)
                    if value.is_zero():
                        target.pop(j, None)
                    else:
                        target[j] = value
        return rows


def rank(rows: Iterable[SparseRow]) -> int:
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return len(basis)


def nullspace(rows: Iterable[SparseRow], ncols: int, level: Level) -> List[List[CycloScalar]]:
    """Basis of {x : row . x = 0 for every row}; one vector per free column, with a 1 there."""
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    reduced = basis.reduced()
    free = [j for j in range(ncols) if j not in reduced]
    zero, one = CycloScalar.zero(level), CycloScalar.one(level)
    vectors = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for pivot, row in reduced.items():
            if f in row:
                x[pivot] = -row[f]
        vectors.append(x)
    logger.debug("nullspace: %d columns, rank %d, dimension %d", ncols, len(reduced), len(vectors))
    return vectors


def solve(matrix: RepMatrix, rhs: Sequence[CycloScalar]) -> List[CycloScalar]:
    """The unique x with matrix @ x = rhs; DivisionByZero when the matrix is singular."""
    n = matrix.n
    if not matrix.is_square() or len(rhs) != n:
        raise DimensionMismatch("solve needs a square matrix and a matching right-hand side")
    augmented = []
    for row, b in zip(matrix.rows, rhs):
        sparse = {j: a for j, a in enumerate(row) if not a.is_zero()}
        if not b.is_zero():
            sparse[n] = b
        augmented.append(sparse)
    basis = EchelonBasis()
    for row in augmented:
        basis.add(row)
    reduced = basis.reduced()
    if any(p not in reduced for p in range(n)):
        raise DivisionByZero("singular matrix")
    zero = CycloScalar.zero(matrix.level)
    return [reduced[p].get(n, zero) for p in range(n)]
