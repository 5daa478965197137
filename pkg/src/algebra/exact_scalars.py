"""Exact arithmetic in Q(zeta_{4r}) extended by eta.

A = zeta_{4r} = e^{2 pi i / 4r}. eta = (A^2 - A^-2) / (i sqrt(2r)) and
eta^2 = -(A^2 - A^-2)^2 / (2r) lies in Q(zeta_{4r}). For odd r eta is carried as a
formal square root. For even r, sqrt(2r) is a Gauss sum over Q(zeta_{2r}), so eta
is an ordinary field element and every scalar has a zero eta part.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from utilities.errors import DivisionByZero

logger = logging.getLogger(__name__)

Coefficients = Tuple[Fraction, ...]
Number = Union[int, Fraction, "CycloScalar"]

_X = sympy.Symbol("x")


@dataclass(frozen=True)
class Level:
    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 3:
            raise ValueError(f"level r must be an integer >= 3, got {self.r!r}")

    @property
    def order(self) -> int:
        return 4 * self.r

    @property
    def field(self) -> "CyclotomicField":
        return cyclotomic_field(self.r)

    @property
    def max_color(self) -> int:
        return self.r - 2


class CyclotomicField:
    def __init__(self, r: int):
        self.r = r
        self.order = 4 * r
        phi = sympy.Poly(sympy.cyclotomic_poly(self.order, _X), _X)
        self.modulus = phi
        self.degree = phi.degree()
        # monic, low-degree-first tail: x^d = -sum(tail[i] x^i)
        coeffs = [int(c) for c in reversed(phi.all_coeffs())]
        self._tail = coeffs[: self.degree]
        self._powers = self._power_table()
        self.zero_vector: Coefficients = (Fraction(0),) * self.degree
        self.eta_squared = self._eta_squared()
        self.eta_vector: Optional[Coefficients] = self._eta_in_field() if r % 2 == 0 else None
        logger.debug("built Q(zeta_%d) of degree %d", self.order, self.degree)

    def _power_table(self) -> List[Coefficients]:
        d = self.degree
        table: List[Coefficients] = []
        current = [Fraction(0)] * d
        current[0] = Fraction(1)
        for _ in range(self.order):
            table.append(tuple(current))
            top = current[-1]
            shifted = [Fraction(0)] + current[:-1]
            if top:
                shifted = [s - top * t for s, t in zip(shifted, self._tail)]
            current = shifted
        return table

    def power(self, k: int) -> Coefficients:
        return self._powers[k % self.order]

    def add(self, u: Coefficients, v: Coefficients) -> Coefficients:
        return tuple(a + b for a, b in zip(u, v))

    def sub(self, u: Coefficients, v: Coefficients) -> Coefficients:
        return tuple(a - b for a, b in zip(u, v))

    def scale(self, u: Coefficients, c: Fraction) -> Coefficients:
        return tuple(a * c for a in u)

    def mul(self, u: Coefficients, v: Coefficients) -> Coefficients:
        d = self.degree
        raw = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    raw[i + j] += a * b
        result = list(raw[:d])
        for k in range(d, 2 * d - 1):
            c = raw[k]
            if c:
                for i, p in enumerate(self._powers[k]):
                    if p:
                        result[i] += c * p
        return tuple(result)

    def inverse(self, u: Coefficients) -> Coefficients:
        if not any(u):
            raise DivisionByZero("inverse of zero in the cyclotomic field")
        poly = sympy.Poly(list(reversed(u)), _X, domain=sympy.QQ)
        inv = poly.invert(self.modulus.set_domain(sympy.QQ))
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return tuple(coeffs)

    def _eta_squared(self) -> Coefficients:
        diff = self.sub(self.power(2), self.power(-2))
        return self.scale(self.mul(diff, diff), Fraction(-1, 2 * self.r))

    def _eta_in_field(self) -> Coefficients:
        # 4 | 2r: sum_{k < 2r} A^{2k^2} = (1 + i) sqrt(2r)
        gauss = self.zero_vector
        for k in range(2 * self.r):
            gauss = self.add(gauss, self.power(2 * k * k))
        i = self.power(self.r)
        one_plus_i = self.add(self.power(0), i)
        diff = self.sub(self.power(2), self.power(-2))
        return self.mul(self.mul(diff, one_plus_i), self.inverse(self.mul(i, gauss)))

    def numeric_root(self) -> complex:
        return complex(np.exp(2j * np.pi / self.order))

    def numeric_eta(self) -> float:
        return math.sqrt(2.0 / self.r) * math.sin(math.pi / self.r)


@lru_cache(maxsize=None)
def cyclotomic_field(r: int) -> CyclotomicField:
    return CyclotomicField(r)


class CycloScalar:
    """An element base + eta_part * eta with base, eta_part in Q(zeta_{4r})."""

    __slots__ = ("field", "base", "eta", "_hash")

    def __init__(self, field: CyclotomicField, base: Sequence[Fraction], eta: Sequence[Fraction] = None):
        self.field = field
        self.base = tuple(base)
        self.eta = tuple(eta) if eta is not None else field.zero_vector
        if field.eta_vector is not None and any(self.eta):
            self.base = field.add(self.base, field.mul(self.eta, field.eta_vector))
            self.eta = field.zero_vector
        self._hash = None

    # construction

    @classmethod
    def zero(cls, level: Level) -> "CycloScalar":
        field = level.field
        return cls(field, field.zero_vector)

    @classmethod
    def one(cls, level: Level) -> "CycloScalar":
        return cls.rational(level, 1)

    @classmethod
    def rational(cls, level: Level, value: Union[int, Fraction]) -> "CycloScalar":
        field = level.field
        return cls(field, field.scale(field.power(0), Fraction(value)))

    @classmethod
    def eta_unit(cls, level: Level) -> "CycloScalar":
        field = level.field
        return cls(field, field.zero_vector, field.power(0))

    @property
    def level(self) -> Level:
        return Level(self.field.r)

    def is_zero(self) -> bool:
        return not any(self.base) and not any(self.eta)

    def has_eta(self) -> bool:
        return any(self.eta)

    def is_rational(self) -> bool:
        return not self.has_eta() and not any(self.base[1:])

    def _coerce(self, other: Number) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            if other.field is not self.field and other.field.r != self.field.r:
                raise ValueError(f"level mismatch: r={self.field.r} vs r={other.field.r}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.field, self.field.scale(self.field.power(0), Fraction(other)))
        return NotImplemented

    # ring operations

    def __add__(self, other: Number) -> "CycloScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        return CycloScalar(f, f.add(self.base, other.base), f.add(self.eta, other.eta))

    __radd__ = __add__

    def __neg__(self) -> "CycloScalar":
        return CycloScalar(self.field, tuple(-a for a in self.base), tuple(-a for a in self.eta))

    def __sub__(self, other: Number) -> "CycloScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        return CycloScalar(f, f.sub(self.base, other.base), f.sub(self.eta, other.eta))

    def __rsub__(self, other: Number) -> "CycloScalar":
        return (-self) + other

    def __mul__(self, other: Number) -> "CycloScalar":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            f = self.field
            return CycloScalar(f, f.scale(self.base, c), f.scale(self.eta, c))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if not self.has_eta() and not other.has_eta():
            return CycloScalar(f, f.mul(self.base, other.base))
        base = f.mul(self.base, other.base)
        if self.has_eta() and other.has_eta():
            base = f.add(base, f.mul(f.mul(self.eta, other.eta), f.eta_squared))
        eta = f.add(f.mul(self.base, other.eta), f.mul(self.eta, other.base))
        return CycloScalar(f, base, eta)

    __rmul__ = __mul__

    def inverse(self) -> "CycloScalar":
        if self.is_zero():
            raise DivisionByZero("division by the zero scalar")
        f = self.field
        if not self.has_eta():
            return CycloScalar(f, f.inverse(self.base))
        # (b + e eta)^-1 = (b - e eta) / (b^2 - e^2 eta^2)
        norm = f.sub(f.mul(self.base, self.base), f.mul(f.mul(self.eta, self.eta), f.eta_squared))
        inv_norm = f.inverse(norm)
        return CycloScalar(f, f.mul(self.base, inv_norm), tuple(-a for a in f.mul(self.eta, inv_norm)))

    def __truediv__(self, other: Number) -> "CycloScalar":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "CycloScalar":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "CycloScalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloScalar(self.field, self.field.power(0))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        return self.field.r == other.field.r and self.base == other.base and self.eta == other.eta

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                # equal to an int or Fraction, so hash like one
                self._hash = hash(self.base[0])
            else:
                self._hash = hash((self.field.r, self.base, self.eta))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # rendering

    def numeric(self, digits: int = 12) -> complex:
        return embed_numeric(self, digits)

    def to_dict(self) -> Dict[str, object]:
        return {
            "r": self.field.r,
            "base": [[c.numerator, c.denominator] for c in self.base],
            "eta": [[c.numerator, c.denominator] for c in self.eta],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "CycloScalar":
        field = cyclotomic_field(int(data["r"]))
        base = tuple(Fraction(int(n), int(d)) for n, d in data["base"])
        eta = tuple(Fraction(int(n), int(d)) for n, d in data.get("eta", []))
        if len(base) != field.degree or (eta and len(eta) != field.degree):
            raise ValueError("coefficient vector length does not match the field degree")
        return cls(field, base, eta or field.zero_vector)

    def __repr__(self) -> str:
        return f"CycloScalar(r={self.field.r}, {self})"

    def __str__(self) -> str:
        def render(coeffs: Coefficients) -> str:
            parts = [f"{c}*z^{i}" if i else f"{c}" for i, c in enumerate(coeffs) if c]
            return " + ".join(parts) if parts else "0"

        if self.has_eta():
            return f"({render(self.base)}) + ({render(self.eta)})*eta"
        return render(self.base)


def power_of_A(k: int, level: Level) -> CycloScalar:
    field = level.field
    return CycloScalar(field, field.power(k))


def eta(level: Level) -> CycloScalar:
    return CycloScalar.eta_unit(level)


def field_arith(x: CycloScalar, y: CycloScalar, op: str) -> CycloScalar:
    operations = {
        "add": lambda: x + y,
        "sub": lambda: x - y,
        "mul": lambda: x * y,
        "div": lambda: x / y,
    }
    if op not in operations:
        raise ValueError(f"unknown field operation {op!r}")
    return operations[op]()


def embed_numeric(x: CycloScalar, digits: int = 12) -> complex:
    if digits < 1:
        raise ValueError("digits must be at least 1")
    field = x.field
    powers = np.exp(2j * np.pi * np.arange(field.degree) / field.order)
    base = np.array([float(c) for c in x.base])
    value = complex(np.dot(base, powers))
    if x.has_eta():
        eta_part = np.array([float(c) for c in x.eta])
        value += complex(np.dot(eta_part, powers)) * field.numeric_eta()
    return complex(round(value.real, digits), round(value.imag, digits))
