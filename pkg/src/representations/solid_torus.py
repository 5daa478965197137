"""The reduced skein space RT of the solid torus.

Vectors are coefficient tuples in the phi_a basis, phi_a being the core colored a.
phi_a is the a-th Chebyshev polynomial in the core alpha, and the reduction
kills phi_{r-1} and reflects higher indices about r-1.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from algebra.exact_scalars import CycloScalar, Level, eta
from algebra.matrices import RepMatrix
from skein.recoupling import colors, delta, hopf_value, xi
from utilities.errors import OutOfRange

logger = logging.getLogger(__name__)

Coefficient = Union[int, CycloScalar]


@dataclass(frozen=True)
class RTVector:
    level: Level
    coefficients: Tuple[CycloScalar, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.level.r - 1:
            raise ValueError(f"RT vectors have {self.level.r - 1} coordinates")

    @classmethod
    def basis(cls, a: int, level: Level) -> "RTVector":
        zero, one = CycloScalar.zero(level), CycloScalar.one(level)
        return cls(level, tuple(one if b == a else zero for b in colors(level)))

    def __getitem__(self, a: int) -> CycloScalar:
        return self.coefficients[a]

    def __add__(self, other: "RTVector") -> "RTVector":
        return RTVector(self.level, tuple(x + y for x, y in zip(self.coefficients, other.coefficients)))

    def scale(self, c: CycloScalar) -> "RTVector":
        return RTVector(self.level, tuple(c * x for x in self.coefficients))


def reduce_index(n: int, r: int) -> Tuple[int, int]:
    """(sign, index) with phi_n = sign * phi_index in RT; sign 0 means phi_n = 0."""
    sign = 1
    while True:
        if 0 <= n <= r - 2:
            return sign, n
        if n == r - 1 or n == -1:
            return 0, 0
        if n >= r:
            n, sign = 2 * (r - 1) - n, -sign
        else:
            # phi_{-m} = -phi_{m-2}
            n, sign = -n - 2, -sign


def _scalar(c: Coefficient, level: Level) -> CycloScalar:
    return c if isinstance(c, CycloScalar) else CycloScalar.rational(level, c)


def chebyshev_expand(k: int) -> List[int]:
    """Integer coefficients of alpha^k in the unreduced phi basis (indices 0..k)."""
    current = [1]
    for _ in range(k):
        nxt = [0] * (len(current) + 1)
        for a, c in enumerate(current):
            if c:
                nxt[a + 1] += c
                if a >= 1:
                    nxt[a - 1] += c
        current = nxt
    return current


def _reduce(unreduced: Sequence[CycloScalar], level: Level) -> RTVector:
    coeffs = [CycloScalar.zero(level) for _ in colors(level)]
    for n, c in enumerate(unreduced):
        if c.is_zero():
            continue
        sign, index = reduce_index(n, level.r)
        if sign:
            coeffs[index] = coeffs[index] + c if sign > 0 else coeffs[index] - c
    return RTVector(level, tuple(coeffs))


def chebyshev_reduce(poly: Sequence[Coefficient], level: Level) -> RTVector:
    """A polynomial in alpha (coefficient of alpha^k at index k) as an RT vector."""
    top = len(poly)
    unreduced = [CycloScalar.zero(level) for _ in range(max(top, 1))]
    for k, c in enumerate(poly):
        c = _scalar(c, level)
        if c.is_zero():
            continue
        for n, m in enumerate(chebyshev_expand(k)):
            if m:
                unreduced[n] = unreduced[n] + c * m
    return _reduce(unreduced, level)


def rt_multiply(x: RTVector, y: RTVector) -> RTVector:
    """Product in the skein algebra: phi_a phi_b = sum phi_c, c = |a-b|, |a-b|+2, ..., a+b."""
    level = x.level
    unreduced = [CycloScalar.zero(level) for _ in range(2 * level.r)]
    for a, ca in enumerate(x.coefficients):
        if ca.is_zero():
            continue
        for b, cb in enumerate(y.coefficients):
            if cb.is_zero():
                continue
            product = ca * cb
            for c in range(abs(a - b), a + b + 1, 2):
                unreduced[c] = unreduced[c] + product
    return _reduce(unreduced, level)


def omega_vector(level: Level, framing: int = 0) -> RTVector:
    """Omega with the given framing: eta * Delta(a) * xi_a^framing."""
    unit = eta(level)
    return RTVector(level, tuple(unit * delta(a, level) * xi(a, level) ** framing for a in colors(level)))


def t_vector(b: int, level: Level) -> RTVector:
    """b parallel (-1)-framed copies of Omega in the solid torus."""
    if not 0 <= b <= level.max_color:
        raise OutOfRange(f"t_b needs 0 <= b <= {level.max_color}, got {b}", "rep_spaces")
    result = RTVector.basis(0, level)
    twisted = omega_vector(level, -1)
    for _ in range(b):
        result = rt_multiply(result, twisted)
    return result


def twist_basis_matrix(level: Level) -> RepMatrix:
    """M[b][a] = xi_a^b Delta(a): the pairings of t_b with phi_a, up to the factor c^b."""
    rows = [[xi(a, level) ** b * delta(a, level) for a in colors(level)] for b in colors(level)]
    return RepMatrix(rows, level)


def hopf_matrix(level: Level) -> RepMatrix:
    return RepMatrix([[hopf_value(a, b, level) for b in colors(level)] for a in colors(level)], level)


def hopf_pairing(x: RTVector, y: RTVector) -> CycloScalar:
    """Bilinear pairing from gluing two solid tori into S^3."""
    level = x.level
    total = CycloScalar.zero(level)
    for a, ca in enumerate(x.coefficients):
        if ca.is_zero():
            continue
        for b, cb in enumerate(y.coefficients):
            if not cb.is_zero():
                total = total + ca * cb * hopf_value(a, b, level)
    return total


@dataclass
class PairingNormalization:
    constant: CycloScalar
    ratio_to_eta: CycloScalar
    consistent: bool


def pairing_normalization(level: Level) -> PairingNormalization:
    """The constant c with <t_b, phi_a> = c^b xi_a^b Delta(a), checked over every a, b."""
    constant = hopf_pairing(t_vector(1, level), RTVector.basis(0, level))
    consistent = True
    for b in colors(level):
        tb = t_vector(b, level)
        for a in colors(level):
            expected = constant ** b * xi(a, level) ** b * delta(a, level)
            if hopf_pairing(tb, RTVector.basis(a, level)) != expected:
                consistent = False
    return PairingNormalization(constant, constant / eta(level), consistent)


def multiplication_matrix(x: RTVector) -> RepMatrix:
    """Matrix of phi -> x * phi on the phi basis."""
    level = x.level
    columns = [rt_multiply(x, RTVector.basis(b, level)).coefficients for b in colors(level)]
    return RepMatrix.from_columns(columns, level)
