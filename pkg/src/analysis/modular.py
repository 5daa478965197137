"""Search for bounded modular invariants inside the commutant of S and T."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from algebra.exact_scalars import CycloScalar, Level
from algebra.matrices import RepMatrix
from analysis.commutant import commutant
from representations.mcg_rep import generator_matrices, s_matrix, t_matrix
from utilities.config import DEFAULT_INVARIANT_BOUND

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModularInvariant:
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def is_diagonal(self) -> bool:
        return all(v == 0 for i, row in enumerate(self.entries) for j, v in enumerate(row) if i != j)

    def matrix(self, level: Level) -> RepMatrix:
        return RepMatrix.from_integers(self.entries, level)

    def check(self, s: RepMatrix, t: RepMatrix) -> bool:
        z = self.matrix(s.level)
        return self.entries[0][0] == 1 and (z @ s == s @ z) and (z @ t == t @ z)


def _as_integer(x: CycloScalar) -> Optional[int]:
    if not x.is_rational():
        return None
    value = Fraction(x.base[0])
    return value.numerator if value.denominator == 1 else None


def modular_invariants(level: Level, bound: int = DEFAULT_INVARIANT_BOUND) -> List[ModularInvariant]:
    """Every Z with entries in 0..bound, Z[0][0] = 1, commuting with S and T.

    Candidates are integer combinations of the commutant basis; since the basis
    vector for free entry f is 1 at f and 0 at the other free entries, a
    candidate is fixed by its values on the free entries.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    s, t = s_matrix(level), t_matrix(level)
    report = commutant([s, t], label=f"S,T at r={level.r}")
    basis = report.basis
    n = report.dimension
    found = []
    for values in product(range(bound + 1), repeat=len(basis)):
        candidate = RepMatrix.zero(n, level)
        for c, b in zip(values, basis):
            if c:
                candidate = candidate + b.scale(CycloScalar.rational(level, c))
        entries = [[_as_integer(a) for a in row] for row in candidate.rows]
        if any(v is None or not 0 <= v <= bound for row in entries for v in row):
            continue
        if entries[0][0] != 1:
            continue
        found.append(ModularInvariant(tuple(tuple(row) for row in entries)))
    logger.info("r=%d: %d modular invariants with entries <= %d (commutant dimension %d)",
                level.r, len(found), bound, len(basis))
    return sorted(found, key=lambda z: z.entries)


def commutant_dimension_table(r_max: int = 10, genus: int = 1) -> List[Tuple[int, int]]:
    """Computed commutant dimensions of the genus-1 generators for 3 <= r <= r_max."""
    table = []
    for r in range(3, r_max + 1):
        level = Level(r)
        mats = [m for _, m in generator_matrices(genus, level)]
        table.append((r, commutant(mats).commutant_dimension))
    return table
