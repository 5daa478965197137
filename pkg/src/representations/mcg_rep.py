"""Dehn twist matrices on the handlebody spaces and checks built on them.

A twist along a curve acts by adjoining the curve, colored Omega with framing -1,
in a collar just inside the boundary; the result is read back in the spine
basis with `express`. Every matrix here is meaningful only up to a global
scalar.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from algebra.exact_scalars import CycloScalar, Level, eta
from algebra.matrices import EchelonBasis, RepMatrix
from representations.handlebody import (
    LOOP, RING, CurveInsertion, HandlebodySkein, check_curves, express, gram_matrix, loop, ring,
)
from representations.solid_torus import hopf_matrix, multiplication_matrix, omega_vector
from representations.spines import Labeling, enumerate_basis, spine_for, vacuum
from skein.recoupling import colors, xi
from utilities.config import DEFAULT_ORBIT_DEPTH
from utilities.errors import DimensionMismatch, InvalidCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveSpec:
    name: str
    genus: int
    curve: CurveInsertion


def named_curves(genus: int) -> Dict[str, CurveInsertion]:
    spine = spine_for(genus)
    if genus == 1:
        return {"meridian": ring(0), "longitude": loop(1)}
    curves = {f"pants{e}": ring(e) for e in range(len(spine.edges))}
    curves.update({f"handle{k}": loop(k + 1) for k in range(genus)})
    curves["outer"] = loop(1, genus)
    return curves


def parse_curve_text(text: str, genus: int, name: str = "explicit") -> CurveSpec:
    """One curve per file: `RING <edge>` or `LOOP <first hole> [<last hole>]`."""
    found = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *args = line.split()
        try:
            values = [int(a) for a in args]
        except ValueError:
            raise InvalidCurve(f"line {number}: expected integers, got {line!r}") from None
        if head.upper() == RING.upper() and len(values) == 1:
            found.append(ring(values[0]))
        elif head.upper() == LOOP.upper() and len(values) in (1, 2):
            found.append(loop(*values))
        else:
            raise InvalidCurve(f"line {number}: cannot read {line!r}")
    if len(found) != 1:
        raise InvalidCurve(f"a curve file holds exactly one curve, found {len(found)}")
    check_curves(spine_for(genus), found)
    return CurveSpec(name, genus, found[0])


def resolve_curve(name_or_path: Union[str, Path], genus: int) -> CurveSpec:
    curves = named_curves(genus)
    key = str(name_or_path)
    if key in curves:
        return CurveSpec(key, genus, curves[key])
    path = Path(name_or_path)
    if not path.is_file():
        raise InvalidCurve(f"{key!r} is neither a genus-{genus} curve name ({', '.join(curves)}) nor a file")
    return parse_curve_text(path.read_text(), genus, name=path.stem)


def dehn_twist_matrix(curve: Union[CurveSpec, CurveInsertion], genus: int, level: Level,
                      strategy: str = "accel", budget: Optional[int] = None) -> RepMatrix:
    insertion = curve.curve if isinstance(curve, CurveSpec) else curve
    basis = enumerate_basis(genus, level)
    columns = []
    for v in basis:
        columns.append(express(HandlebodySkein(genus, v, (insertion,)), level, strategy, budget))
    logger.info("twist along %s on genus %d at r=%d: %d columns", insertion, genus, level.r, len(basis))
    return RepMatrix.from_columns(columns, level)


def pants_twist_matrix(edge: int, genus: int, level: Level) -> RepMatrix:
    """diag(xi of the label on `edge`): a full twist in the edge dual to the pants curve."""
    spine = spine_for(genus)
    if not 0 <= edge < len(spine.edges):
        raise InvalidCurve(f"genus {genus} has no edge {edge}")
    return RepMatrix.diagonal([xi(v[edge], level) for v in enumerate_basis(genus, level)], level)


def t_matrix(level: Level) -> RepMatrix:
    return RepMatrix.diagonal([xi(a, level) for a in colors(level)], level)


def s_matrix(level: Level) -> RepMatrix:
    return hopf_matrix(level).scale(eta(level))


def longitude_matrix(level: Level) -> RepMatrix:
    """Twist along the curve parallel to the core: multiplication by Omega at framing -1."""
    return multiplication_matrix(omega_vector(level, -1))


def generator_names(genus: int) -> List[str]:
    if genus == 1:
        return ["meridian", "longitude"]
    names = []
    for k in range(genus):
        names += [f"pants{k}", f"handle{k}"]
    names.append(f"pants{genus}")
    if genus >= 3:
        # meets handle1 once and misses the chain
        names.append(f"pants{spine_for(genus).top_rail(1)}")
    return names


def generator_matrices(genus: int, level: Level, strategy: str = "accel",
                       budget: Optional[int] = None) -> List[Tuple[str, RepMatrix]]:
    spine_for(genus)
    if genus == 1:
        return [("meridian", t_matrix(level)), ("longitude", longitude_matrix(level))]
    curves = named_curves(genus)
    result = []
    for name in generator_names(genus):
        curve = curves[name]
        if curve.kind == RING:
            matrix = pants_twist_matrix(curve.edge, genus, level)
        else:
            matrix = dehn_twist_matrix(curve, genus, level, strategy, budget)
        result.append((name, matrix))
    return result


def vacuum_orbit_rank(genus: int, level: Level, depth: int = DEFAULT_ORBIT_DEPTH,
                      generators: Optional[Sequence[RepMatrix]] = None, start: Optional[Sequence[CycloScalar]] = None,
                      strategy: str = "accel", budget: Optional[int] = None) -> int:
    """Rank of the span of words of length <= depth in the generators and their
    inverses applied to v_0 (or to `start`)."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if generators is None:
        generators = [m for _, m in generator_matrices(genus, level, strategy, budget)]
    moves = list(generators) + [m.inverse() for m in generators]
    size = generators[0].n
    if start is None:
        basis_list = enumerate_basis(genus, level)
        origin = basis_list.index(vacuum(genus))
        first = [CycloScalar.one(level) if i == origin else CycloScalar.zero(level) for i in range(size)]
    else:
        first = list(start)
    span = EchelonBasis()
    span.add({i: a for i, a in enumerate(first) if not a.is_zero()})
    frontier = [first]
    for step in range(depth):
        if len(span) == size or not frontier:
            break
        fresh = []
        for vector in frontier:
            for move in moves:
                image = move.apply(vector)
                if span.add({i: a for i, a in enumerate(image) if not a.is_zero()}):
                    fresh.append(image)
        frontier = fresh
        logger.info("orbit depth %d: rank %d of %d", step + 1, len(span), size)
    return len(span)


@dataclass
class EigentupleReport:
    genus: int
    r: int
    tuples: Dict[Labeling, Tuple[CycloScalar, ...]] = field(default_factory=dict)
    collisions: List[Tuple[Labeling, Labeling]] = field(default_factory=list)

    @property
    def distinct(self) -> bool:
        return not self.collisions


def pants_eigentuple_check(genus: int, level: Level) -> EigentupleReport:
    """Pants-twist eigenvalues per basis vector; distinct tuples mean one-dimensional joint eigenspaces."""
    report = EigentupleReport(genus, level.r)
    seen: Dict[Tuple[CycloScalar, ...], Labeling] = {}
    for labeling in enumerate_basis(genus, level):
        values = tuple(xi(a, level) for a in labeling)
        report.tuples[labeling] = values
        if values in seen:
            report.collisions.append((seen[values], labeling))
        else:
            seen[values] = labeling
    return report


def _span_families(genus: int) -> List[CurveInsertion]:
    if genus == 1:
        return [loop(1)]
    return [loop(k) for k in range(1, genus + 1)] + [loop(1, genus)]


def omega_span_rank(genus: int, level: Level, copies: int = 1, strategy: str = "accel",
                    budget: Optional[int] = None) -> int:
    """Rank of the Omega(C) vectors, C running over parallel families of the loop curves."""
    families = _span_families(genus)
    start = vacuum(genus)
    span = EchelonBasis()
    for counts in product(range(copies + 1), repeat=len(families)):
        curves = tuple(
            CurveInsertion(LOOP, holes=c.holes, copies=n) for c, n in zip(families, counts) if n
        )
        vector = express(HandlebodySkein(genus, start, curves), level, strategy, budget)
        span.add({i: a for i, a in enumerate(vector) if not a.is_zero()})
    logger.info("omega span for genus %d at r=%d with %d copies: rank %d", genus, level.r, copies, len(span))
    return len(span)


def unitarity_defect(matrix: RepMatrix, gram: RepMatrix) -> float:
    """max |N N^* - I| for N = D^(1/2) M D^(-1/2), D = |diag gram|, with N scaled to
    unit determinant modulus. The spine basis is orthogonal for the pairing, so N is
    the twist in an orthonormal basis."""
    if gram.shape != matrix.shape:
        raise DimensionMismatch(f"gram {gram.shape} against twist {matrix.shape}")
    weights = np.sqrt(np.abs(np.diag(gram.numeric())))
    normalized = weights[:, None] * matrix.numeric() / weights[None, :]
    n = normalized.shape[0]
    normalized = normalized / abs(np.linalg.det(normalized)) ** (1.0 / n)
    return float(np.max(np.abs(normalized @ normalized.conj().T - np.eye(n))))


def transverse_unitarity(genus: int, level: Level, strategy: str = "accel",
                         budget: Optional[int] = None) -> Dict[str, float]:
    """Unitarity defect of each named twist along a curve crossing the spine."""
    gram = gram_matrix(genus, level, strategy, budget)
    if genus == 1:
        return {"longitude": unitarity_defect(longitude_matrix(level), gram)}
    defects = {}
    for name, curve in named_curves(genus).items():
        if curve.kind == LOOP:
            defects[name] = unitarity_defect(dehn_twist_matrix(curve, genus, level, strategy, budget), gram)
    logger.info("unitarity defects for genus %d at r=%d: %s", genus, level.r, defects)
    return defects
