"""Temperley-Lieb algebras TL_n over CycloScalar and the Jones-Wenzl idempotents.

A diagram on n strands pairs its 2n boundary points: top points 0..n-1 (left to
right) and bottom points n..2n-1 (left to right). Closed loops never appear in
a stored diagram; composition absorbs them as factors of delta = -A^2 - A^-2.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Tuple

from algebra.exact_scalars import CycloScalar, Level, power_of_A
from utilities.errors import DegenerateDenominator, OutOfRange, StrandMismatch

logger = logging.getLogger(__name__)


def loop_value(level: Level) -> CycloScalar:
    return -power_of_A(2, level) - power_of_A(-2, level)


@dataclass(frozen=True)
class TLDiagram:
    n: int
    pairing: Tuple[int, ...]

    def __post_init__(self):
        if len(self.pairing) != 2 * self.n:
            raise ValueError("pairing must cover 2n boundary points")
        for p, q in enumerate(self.pairing):
            if q == p or self.pairing[q] != p:
                raise ValueError(f"pairing is not a fixed-point-free involution at {p}")
        if not _is_noncrossing(self.cyclic_pairs()):
            raise ValueError("pairing is not planar")

    @classmethod
    def identity(cls, n: int) -> "TLDiagram":
        return cls(n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def hook(cls, i: int, n: int) -> "TLDiagram":
        """The generator e_i (1 <= i < n): caps strands i-1, i at both ends."""
        if not 1 <= i < n:
            raise StrandMismatch(f"hook e_{i} does not exist in TL_{n}")
        pairing = list(range(n, 2 * n)) + list(range(n))
        pairing[i - 1], pairing[i] = i, i - 1
        pairing[n + i - 1], pairing[n + i] = n + i, n + i - 1
        return cls(n, tuple(pairing))

    def cyclic_position(self, point: int) -> int:
        return point if point < self.n else 3 * self.n - 1 - point

    def cyclic_pairs(self) -> List[Tuple[int, int]]:
        pairs = []
        for p, q in enumerate(self.pairing):
            if p < q:
                a, b = sorted((self.cyclic_position(p), self.cyclic_position(q)))
                pairs.append((a, b))
        return pairs

    def to_word(self) -> str:
        """Balanced-parenthesis word read around the boundary circle."""
        word = [""] * (2 * self.n)
        for a, b in self.cyclic_pairs():
            word[a], word[b] = "(", ")"
        return "".join(word)

    def tensor_identity(self, extra: int = 1) -> "TLDiagram":
        """Place `extra` through strands to the right of this diagram."""
        n, m = self.n, self.n + extra

        def relabel(p: int) -> int:
            return p if p < n else p - n + m

        pairing = [0] * (2 * m)
        for p, q in enumerate(self.pairing):
            pairing[relabel(p)] = relabel(q)
        for k in range(n, m):
            pairing[k], pairing[m + k] = m + k, k
        return TLDiagram(m, tuple(pairing))

    def __str__(self) -> str:
        return self.to_word()


def _is_noncrossing(pairs: Iterable[Tuple[int, int]]) -> bool:
    ordered = sorted(pairs)
    for i, (a, b) in enumerate(ordered):
        for c, d in ordered[i + 1:]:
            if a < c < b < d:
                return False
    return True


def compose_diagrams(upper: TLDiagram, lower: TLDiagram) -> Tuple[TLDiagram, int]:
    """Stack `upper` on top of `lower`; returns the glued diagram and its loop count."""
    if upper.n != lower.n:
        raise StrandMismatch(f"cannot compose TL_{upper.n} with TL_{lower.n}")
    n = upper.n
    visited = [False] * n

    def follow(in_upper: bool, point: int) -> int:
        while True:
            if in_upper:
                q = upper.pairing[point]
                if q < n:
                    return q
                visited[q - n] = True
                in_upper, point = False, q - n
            else:
                q = lower.pairing[point]
                if q >= n:
                    return q
                visited[q] = True
                in_upper, point = True, n + q

    pairing = [0] * (2 * n)
    for p in range(n):
        pairing[p] = follow(True, p)
    for p in range(n, 2 * n):
        pairing[p] = follow(False, p)
    loops = 0
    for m in range(n):
        if visited[m]:
            continue
        loops += 1
        point = m
        while True:
            visited[point] = True
            middle = upper.pairing[n + point] - n
            visited[middle] = True
            point = lower.pairing[middle]
            if point == m:
                break
    return TLDiagram(n, tuple(pairing)), loops


class TLElement:
    def __init__(self, n: int, level: Level, terms: Dict[TLDiagram, CycloScalar] = None):
        self.n = n
        self.level = level
        self.terms: Dict[TLDiagram, CycloScalar] = {}
        for diagram, coeff in (terms or {}).items():
            if diagram.n != n:
                raise StrandMismatch(f"diagram on {diagram.n} strands in TL_{n}")
            if not coeff.is_zero():
                self.terms[diagram] = coeff

    @classmethod
    def identity(cls, n: int, level: Level) -> "TLElement":
        return cls(n, level, {TLDiagram.identity(n): CycloScalar.one(level)})

    @classmethod
    def hook(cls, i: int, n: int, level: Level) -> "TLElement":
        return cls(n, level, {TLDiagram.hook(i, n): CycloScalar.one(level)})

    @classmethod
    def zero(cls, n: int, level: Level) -> "TLElement":
        return cls(n, level)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, diagram: TLDiagram) -> CycloScalar:
        return self.terms.get(diagram, CycloScalar.zero(self.level))

    def __add__(self, other: "TLElement") -> "TLElement":
        self._check(other)
        terms = dict(self.terms)
        for diagram, coeff in other.terms.items():
            terms[diagram] = terms[diagram] + coeff if diagram in terms else coeff
        return TLElement(self.n, self.level, terms)

    def __neg__(self) -> "TLElement":
        return TLElement(self.n, self.level, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + (-other)

    def scale(self, c: CycloScalar) -> "TLElement":
        return TLElement(self.n, self.level, {d: c * v for d, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.level == other.level and self.terms == other.terms

    def _check(self, other: "TLElement"):
        if self.n != other.n:
            raise StrandMismatch(f"TL_{self.n} and TL_{other.n} elements do not combine")
        if self.level != other.level:
            raise ValueError("TL elements over different levels")

    def tensor_identity(self, extra: int = 1) -> "TLElement":
        return TLElement(
            self.n + extra, self.level, {d.tensor_identity(extra): c for d, c in self.terms.items()}
        )

    def items(self) -> Iterator[Tuple[TLDiagram, CycloScalar]]:
        return iter(sorted(self.terms.items(), key=lambda item: item[0].pairing))

    def __str__(self) -> str:
        return " + ".join(f"({c})*{d.to_word()}" for d, c in self.items()) or "0"


def tl_compose(x: TLElement, y: TLElement) -> TLElement:
    """Vertical stacking, x on top of y."""
    x._check(y)
    delta = loop_value(x.level)
    terms: Dict[TLDiagram, CycloScalar] = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            diagram, loops = compose_diagrams(dx, dy)
            coeff = cx * cy
            if loops:
                coeff = coeff * delta ** loops
            terms[diagram] = terms[diagram] + coeff if diagram in terms else coeff
    return TLElement(x.n, x.level, terms)


def enumerate_diagrams(n: int) -> List[TLDiagram]:
    """All noncrossing pairings on n strands; there are Catalan(n) of them."""

    def matchings(positions: Tuple[int, ...]) -> Iterator[List[Tuple[int, int]]]:
        if not positions:
            yield []
            return
        first = positions[0]
        for k in range(1, len(positions), 2):
            inner, outer = positions[1:k], positions[k + 1:]
            for left in matchings(inner):
                for right in matchings(outer):
                    yield [(first, positions[k])] + left + right

    def point(position: int) -> int:
        return position if position < n else 3 * n - 1 - position

    diagrams = []
    for pairs in matchings(tuple(range(2 * n))):
        pairing = [0] * (2 * n)
        for a, b in pairs:
            pairing[point(a)], pairing[point(b)] = point(b), point(a)
        diagrams.append(TLDiagram(n, tuple(pairing)))
    return sorted(diagrams, key=lambda d: d.pairing)


@lru_cache(maxsize=None)
def jones_wenzl(a: int, level: Level) -> TLElement:
    """f^(a) through the Wenzl recursion
    f^(n+1) = f^(n) x 1 - (Delta(n-1)/Delta(n)) (f^(n) x 1) e_n (f^(n) x 1).
    """
    from skein.recoupling import delta

    if a < 0 or a > level.r - 1:
        raise OutOfRange(f"Jones-Wenzl index {a} outside 0..{level.r - 1}", "temperley_lieb")
    if a == 0:
        return TLElement.identity(0, level)
    if a == 1:
        return TLElement.identity(1, level)
    previous = jones_wenzl(a - 1, level)
    n = a - 1
    denominator = delta(n, level)
    if denominator.is_zero():
        raise DegenerateDenominator(f"Delta({n}) vanishes at r={level.r}")
    ratio = delta(n - 1, level) / denominator
    lifted = previous.tensor_identity()
    middle = tl_compose(tl_compose(lifted, TLElement.hook(n, a, level)), lifted)
    result = lifted - middle.scale(ratio)
    logger.debug("f^(%d) at r=%d has %d terms", a, level.r, len(result.terms))
    return result


def markov_trace(x: TLElement) -> CycloScalar:
    """Close every strand top-to-bottom in S^3; each loop contributes delta."""
    delta = loop_value(x.level)
    total = CycloScalar.zero(x.level)
    for diagram, coeff in x.terms.items():
        total = total + coeff * delta ** _closure_loops(diagram)
    return total


def _closure_loops(diagram: TLDiagram) -> int:
    n = diagram.n
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        point = start
        while not seen[point]:
            seen[point] = True
            partner = diagram.pairing[point]
            seen[partner] = True
            point = partner + n if partner < n else partner - n
    return loops
