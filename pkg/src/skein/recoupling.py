"""Named scalar data of the colored skein theory: Delta, xi, eta, Omega, theta,
tetrahedron, 6j and half-twist coefficients.

Delta and xi have closed forms. theta, the tetrahedron and the half-twist
coefficients are evaluations of small networks by the strand-level engine,
computed once per level and cached.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, List, Tuple

from algebra.exact_scalars import CycloScalar, Level, eta, power_of_A
from skein.diagram import admissible_triple
from utilities.errors import OutOfRange, ZeroTheta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OmegaElement:
    level: Level
    coefficients: Tuple[CycloScalar, ...]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, a: int) -> CycloScalar:
        return self.coefficients[a]

    def with_framing(self, framing: int) -> "OmegaElement":
        """Coefficients eta * Delta(a) * xi_a^framing."""
        return OmegaElement(
            self.level, tuple(c * xi(a, self.level) ** framing for a, c in enumerate(self.coefficients))
        )


def _check_color(a: int, level: Level):
    if not 0 <= a <= level.max_color:
        raise OutOfRange(f"color {a} outside 0..{level.max_color} at r={level.r}", "recoupling_data")


@lru_cache(maxsize=None)
def quantum_integer(n: int, level: Level) -> CycloScalar:
    """[n] = (A^2n - A^-2n) / (A^2 - A^-2)."""
    numerator = power_of_A(2 * n, level) - power_of_A(-2 * n, level)
    return numerator / (power_of_A(2, level) - power_of_A(-2, level))


def quantum_dimension(n: int, level: Level) -> CycloScalar:
    """(-1)^n [n+1] for any n >= -1; no color range check."""
    value = quantum_integer(n + 1, level)
    return -value if n % 2 else value


def delta(a: int, level: Level) -> CycloScalar:
    _check_color(a, level)
    return quantum_dimension(a, level)


@lru_cache(maxsize=None)
def xi(a: int, level: Level) -> CycloScalar:
    _check_color(a, level)
    value = power_of_A(a * a + 2 * a, level)
    return -value if a % 2 else value


def admissible(a: int, b: int, c: int, level: Level) -> bool:
    return admissible_triple(a, b, c, level.r)


def colors(level: Level) -> range:
    return range(level.max_color + 1)


def fusion_channels(a: int, b: int, level: Level) -> List[int]:
    """Colors c with (a, b, c) admissible, in increasing order."""
    return [c for c in range(abs(a - b), a + b + 1, 2) if admissible(a, b, c, level)]


def omega(level: Level) -> OmegaElement:
    unit = eta(level)
    return OmegaElement(level, tuple(unit * delta(a, level) for a in colors(level)))


# network values through the strand-level engine

def _naive_value(diagram, level: Level) -> CycloScalar:
    from skein.naive_engine import eval_naive

    return eval_naive(diagram, level).value


@lru_cache(maxsize=None)
def theta(a: int, b: int, c: int, level: Level) -> CycloScalar:
    for x in (a, b, c):
        _check_color(x, level)
    from skein.diagram import theta_network

    value = _naive_value(theta_network(a, b, c), level)
    logger.debug("theta(%d,%d,%d) at r=%d computed", a, b, c, level.r)
    return value


# vertex triples (a,b,e) (c,d,e) (a,d,f) (b,c,f) on vertices 0..3
_EDGE_ENDS = ((0, 2), (0, 3), (1, 3), (1, 2), (0, 1), (2, 3))


def tetrahedral_relabelings(labels: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """The 24 label tuples describing the same tetrahedral network."""
    by_pair = {frozenset(ends): label for ends, label in zip(_EDGE_ENDS, labels)}
    for sigma in permutations(range(4)):
        yield tuple(by_pair[frozenset((sigma[i], sigma[j]))] for i, j in _EDGE_ENDS)


@lru_cache(maxsize=None)
def raw_tetrahedron(a: int, b: int, c: int, d: int, e: int, f: int, level: Level) -> CycloScalar:
    """Engine value of the planar tetrahedron, no symmetry reduction."""
    triples = ((a, b, e), (c, d, e), (a, d, f), (b, c, f))
    if not all(admissible(*t, level) for t in triples):
        return CycloScalar.zero(level)
    from skein.diagram import tetrahedral_network

    return _naive_value(tetrahedral_network(a, b, c, d, e, f), level)


def tetrahedron(a: int, b: int, c: int, d: int, e: int, f: int, level: Level) -> CycloScalar:
    labels = (a, b, c, d, e, f)
    for x in labels:
        _check_color(x, level)
    return _canonical_tetrahedron(min(tetrahedral_relabelings(labels)), level)


@lru_cache(maxsize=None)
def _canonical_tetrahedron(labels: Tuple[int, ...], level: Level) -> CycloScalar:
    a, b, c, d, e, f = labels
    triples = ((a, b, e), (c, d, e), (a, d, f), (b, c, f))
    if not all(admissible(*t, level) for t in triples):
        return CycloScalar.zero(level)
    for p, q, s, t, u, v in tetrahedral_relabelings(labels):
        if u == 0:
            # a zero edge fuses its neighbours: the network is a theta graph
            return theta(p, s, v, level)
    return raw_tetrahedron(a, b, c, d, e, f, level)


def _nonzero_theta(a: int, b: int, c: int, level: Level) -> CycloScalar:
    value = theta(a, b, c, level)
    if value.is_zero():
        raise ZeroTheta(f"theta({a},{b},{c}) vanishes at r={level.r}")
    return value


@lru_cache(maxsize=None)
def sixj(a: int, b: int, c: int, d: int, e: int, f: int, level: Level) -> CycloScalar:
    """Coefficient of the tree (b c -> f, a f -> d) when the tree
    (a b -> e, e c -> d) is re-expanded; 0 unless all four triples are admissible."""
    if not (admissible(a, b, e, level) and admissible(e, c, d, level)
            and admissible(b, c, f, level) and admissible(a, f, d, level)):
        return CycloScalar.zero(level)
    tet = tetrahedron(a, b, c, d, e, f, level)
    return tet * delta(f, level) / (_nonzero_theta(b, c, f, level) * _nonzero_theta(a, f, d, level))


@lru_cache(maxsize=None)
def sixj_inverse(a: int, b: int, c: int, d: int, e: int, f: int, level: Level) -> CycloScalar:
    """Coefficient of the tree (a b -> e, e c -> d) when the tree
    (b c -> f, a f -> d) is re-expanded."""
    if not (admissible(a, b, e, level) and admissible(e, c, d, level)
            and admissible(b, c, f, level) and admissible(a, f, d, level)):
        return CycloScalar.zero(level)
    tet = tetrahedron(a, b, c, d, e, f, level)
    return tet * delta(e, level) / (_nonzero_theta(a, b, e, level) * _nonzero_theta(e, c, d, level))


@lru_cache(maxsize=None)
def half_twist(a: int, b: int, y: int, over: bool, level: Level) -> CycloScalar:
    """lambda with crossing o split_y(a, b) = lambda * split_y(b, a); `over` puts a over b."""
    if not admissible(a, b, y, level):
        return CycloScalar.zero(level)
    if a == 0 or b == 0:
        return CycloScalar.one(level)
    from skein.diagram import twisted_theta

    return _naive_value(twisted_theta(a, b, y, over), level) / _nonzero_theta(a, b, y, level)


@lru_cache(maxsize=None)
def hopf_value(a: int, b: int, level: Level) -> CycloScalar:
    """Zero-framed Hopf link colored (a, b), evaluated by the fusion-tree engine."""
    from skein.accel_engine import eval_accel
    from skein.diagram import hopf_link

    return eval_accel(hopf_link(a, b), level).value


def tables(level: Level) -> Dict[str, List[Tuple]]:
    """Delta, xi and theta tables keyed by name, rows in color order."""
    rows = {
        "delta": [(a, delta(a, level)) for a in colors(level)],
        "xi": [(a, xi(a, level)) for a in colors(level)],
        "theta": [],
    }
    for a in colors(level):
        for b in colors(level):
            for c in colors(level):
                if a <= b <= c and admissible(a, b, c, level):
                    rows["theta"].append((a, b, c, theta(a, b, c, level)))
    return rows
