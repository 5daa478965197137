"""Commutants of finite sets of matrices over the cyclotomic field.

The commutant dimension does not change under field extension, so a
one-dimensional commutant here certifies irreducibility over C.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.exact_scalars import CycloScalar, Level
from algebra.matrices import RepMatrix, SparseRow, nullspace
from representations.mcg_rep import generator_matrices, vacuum_orbit_rank
from utilities.errors import DimensionMismatch

logger = logging.getLogger(__name__)


@dataclass
class CommutantReport:
    generator_count: int
    dimension: int
    basis: List[RepMatrix] = field(default_factory=list)
    label: str = ""

    @property
    def commutant_dimension(self) -> int:
        return len(self.basis)

    @property
    def irreducible(self) -> bool:
        return self.commutant_dimension == 1

    def verify(self, generators: Sequence[RepMatrix]) -> bool:
        """Re-multiply: every basis element commutes exactly with every generator."""
        return all(x.commutator(m).is_zero() for x in self.basis for m in generators)

    def summary(self) -> Dict[str, object]:
        return {
            "label": self.label,
            "generators": self.generator_count,
            "dimension": self.dimension,
            "commutant_dimension": self.commutant_dimension,
            "verdict": "irreducible" if self.irreducible else "reducible",
        }


def _allowed_pairs(mats: Sequence[RepMatrix], n: int) -> List[Tuple[int, int]]:
    """Entries X[i][j] not forced to zero by a diagonal generator with d_i != d_j."""
    diagonals = [m.diagonal_entries() for m in mats if m.is_diagonal()]
    return [
        (i, j) for i in range(n) for j in range(n)
        if all(d[i] == d[j] for d in diagonals)
    ]


def _equations(m: RepMatrix, unknowns: Dict[Tuple[int, int], int], n: int) -> List[SparseRow]:
    """Rows of X -> XM - MX, one per entry (i, j), over the allowed unknowns."""
    rows = []
    for i in range(n):
        for j in range(n):
            row: SparseRow = {}
            for k in range(n):
                for pair, coeff in (((i, k), m.rows[k][j]), ((k, j), -m.rows[i][k])):
                    col = unknowns.get(pair)
                    if col is None or coeff.is_zero():
                        continue
                    value = row[col] + coeff if col in row else coeff
                    if value.is_zero():
                        row.pop(col, None)
                    else:
                        row[col] = value
            if row:
                rows.append(row)
    return rows


def commutant(mats: Sequence[RepMatrix], label: str = "") -> CommutantReport:
    if not mats:
        raise DimensionMismatch("commutant needs at least one matrix")
    n = mats[0].n
    if any(m.shape != (n, n) for m in mats):
        raise DimensionMismatch("commutant needs square matrices of one dimension")
    level = mats[0].level
    pairs = _allowed_pairs(mats, n)
    unknowns = {pair: col for col, pair in enumerate(pairs)}
    rows: List[SparseRow] = []
    for m in mats:
        if not m.is_diagonal():
            rows.extend(_equations(m, unknowns, n))
    logger.info("commutant: %d matrices of size %d, %d unknowns after diagonal pruning, %d equations",
                len(mats), n, len(pairs), len(rows))
    basis = [_to_matrix(vector, pairs, n, level) for vector in nullspace(rows, len(pairs), level)]
    return CommutantReport(len(mats), n, basis, label)


def _to_matrix(vector: Sequence[CycloScalar], pairs: Sequence[Tuple[int, int]], n: int,
               level: Level) -> RepMatrix:
    matrix = RepMatrix.zero(n, level)
    for (i, j), value in zip(pairs, vector):
        matrix.rows[i][j] = value
    return matrix


def irreducibility_verdict(genus: int, level: Level, strategy: str = "accel",
                           budget: Optional[int] = None) -> CommutantReport:
    named = generator_matrices(genus, level, strategy, budget)
    report = commutant([m for _, m in named], label=f"genus {genus}, r={level.r}")
    logger.info("genus %d at r=%d: commutant dimension %d", genus, level.r, report.commutant_dimension)
    return report


@dataclass
class CounterexampleReport:
    eigenvalues: Tuple[int, int]
    start: Tuple[int, int]
    orbit_rank: int
    commutant_dimension: int

    @property
    def irreducible(self) -> bool:
        return self.commutant_dimension == 1

    def summary(self) -> Dict[str, object]:
        return {
            "eigenvalues": list(self.eigenvalues),
            "start": list(self.start),
            "orbit_rank": self.orbit_rank,
            "commutant_dimension": self.commutant_dimension,
            "verdict": "irreducible" if self.irreducible else "reducible",
        }


def counterexample_demo(level: Level, unitary: bool = False) -> CounterexampleReport:
    """Z acting on C^2 with distinct eigenvalues: the orbit of (1, 1) spans, yet the action is reducible."""
    eigenvalues = (1, -1) if unitary else (1, 2)
    z = RepMatrix.from_integers([[eigenvalues[0], 0], [0, eigenvalues[1]]], level)
    start = [CycloScalar.one(level), CycloScalar.one(level)]
    rank = vacuum_orbit_rank(1, level, depth=2, generators=[z], start=start)
    return CounterexampleReport(eigenvalues, (1, 1), rank, commutant([z]).commutant_dimension)
