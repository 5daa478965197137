"""Skein elements of a handlebody and the pairing that makes the spine basis usable.

A HandlebodySkein is a labeled spine with optional extra curves: rings around a
spine edge, or loops in the top face around holes i..j. Two handlebody
elements are paired in the double #g S^2 x S^1, drawn as surgery on g
zero-framed Omega rings: the first element sits in the front layer, the second
behind it, and ring k threads hole k. Coefficients of an arbitrary element in the
spine basis come from solving against the Gram matrix of that pairing.
"""
import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from algebra.exact_scalars import CycloScalar, Level
from algebra.matrices import RepMatrix, solve
from representations.spines import Labeling, Spine, enumerate_basis, spine_for
from skein.diagram import OMEGA, DiagramBuilder, GraphDiagram
from skein.evaluation import evaluate
from utilities.errors import DivisionByZero, InvalidCurve, SingularGram

logger = logging.getLogger(__name__)

RING, LOOP = "ring", "loop"


@dataclass(frozen=True)
class CurveInsertion:
    """A curve pushed into the handlebody, colored `color` (OMEGA by default).

    An Omega-colored curve with framing -1 realizes the Dehn twist along it.
    """
    kind: str
    edge: int = 0
    holes: Tuple[int, int] = (1, 1)
    color: int = OMEGA
    framing: int = -1
    copies: int = 1

    def __str__(self) -> str:
        if self.kind == RING:
            return f"RING {self.edge}"
        return f"LOOP {self.holes[0]} {self.holes[1]}"


def ring(edge: int, color: int = OMEGA, framing: int = -1, copies: int = 1) -> CurveInsertion:
    return CurveInsertion(RING, edge=edge, color=color, framing=framing, copies=copies)


def loop(first: int, last: Optional[int] = None, color: int = OMEGA, framing: int = -1,
         copies: int = 1) -> CurveInsertion:
    return CurveInsertion(LOOP, holes=(first, first if last is None else last), color=color,
                          framing=framing, copies=copies)


@dataclass(frozen=True)
class HandlebodySkein:
    genus: int
    labeling: Labeling
    curves: Tuple[CurveInsertion, ...] = ()

    def with_curve(self, curve: CurveInsertion) -> "HandlebodySkein":
        return replace(self, curves=self.curves + (curve,))


def check_curves(spine: Spine, curves: Sequence[CurveInsertion]):
    intervals = []
    for curve in curves:
        if curve.copies < 0:
            raise InvalidCurve(f"negative copy count in {curve}")
        if curve.kind == RING:
            if not 0 <= curve.edge < len(spine.edges):
                raise InvalidCurve(f"genus {spine.genus} has no edge {curve.edge}")
        elif curve.kind == LOOP:
            first, last = curve.holes
            if not 1 <= first <= last <= spine.genus:
                raise InvalidCurve(f"holes {first}..{last} out of range for genus {spine.genus}")
            intervals.append((first, last))
        else:
            raise InvalidCurve(f"unknown curve kind {curve.kind!r}")
    for i, (a, b) in enumerate(intervals):
        for c, d in intervals[i + 1:]:
            nested = (a <= c and d <= b) or (c <= a and b <= d)
            if not nested and not (b < c or d < a):
                raise InvalidCurve(f"loops around holes {a}..{b} and {c}..{d} cross")


class _Layout:
    """Slice builder addressing strands by tag. Hole markers ("H1", ...) are
    zero-width entries that only matter in the middle section."""

    def __init__(self, level: Level):
        self.builder = DiagramBuilder(level.r)
        self.order: List[str] = []

    @staticmethod
    def is_marker(tag: str) -> bool:
        return tag.startswith("H")

    def strands_before(self, position: int) -> int:
        return sum(1 for t in self.order[:position] if not self.is_marker(t))

    def index(self, tag: str) -> int:
        return self.strands_before(self.order.index(tag))

    def cup(self, position: int, left: str, right: str, color: int, framing: int = 0):
        self.builder.cup(self.strands_before(position), color, framing)
        self.order[position:position] = [left, right]

    def cap(self, left: str, right: str):
        self.builder.cap(self.index(left))
        self.order.remove(left)
        self.order.remove(right)

    def split(self, tag: str, left: str, right: str, b: int, c: int):
        self.builder.split(self.index(tag), b, c)
        p = self.order.index(tag)
        self.order[p:p + 1] = [left, right]

    def join(self, left: str, right: str, tag: str, c: int):
        self.builder.join(self.index(left), c)
        p = self.order.index(left)
        self.order[p:p + 2] = [tag]

    def step(self, tag: str, direction: int, moving_over: bool):
        """Swap `tag` with its neighbour; the moving strand passes over or under it."""
        p = self.order.index(tag)
        q = p + direction
        other = self.order[q]
        if not self.is_marker(other):
            i = self.index(tag)
            if direction > 0:
                self.builder.cross(i, over=moving_over)
            else:
                # the neighbour is the top-left strand of this crossing
                self.builder.cross(i - 1, over=not moving_over)
        self.order[p], self.order[q] = other, tag

    def previous_strand(self, tag: str) -> Optional[str]:
        for t in reversed(self.order[:self.order.index(tag)]):
            if not self.is_marker(t):
                return t
        return None

    def ring_around(self, tag: str, color: int, framing: int):
        self.builder.ring(self.index(tag), 1, color, framing)

    def surgery(self, marker: str):
        self.builder.ring(0, self.strands_before(self.order.index(marker)), OMEGA, 0)

    def open_loop(self, first: int, last: int, left: str, right: str, color: int, framing: int):
        p = self.order.index(f"H{first}")
        self.builder.cup(self.strands_before(p), color, framing)
        self.order[p:p + 1] = [left, f"H{first}", right]
        if first == last:
            return
        target = f"H{last}"
        while True:
            passed = self.order[self.order.index(right) + 1]
            self.step(right, +1, moving_over=True)
            if passed == target:
                return

    def close_loop(self, left: str, right: str):
        while self.previous_strand(right) != left:
            self.step(right, -1, moving_over=True)
        self.cap(left, right)


def _rings_on(curves: Sequence[CurveInsertion], edge: int) -> List[CurveInsertion]:
    return [c for c in curves if c.kind == RING and c.edge == edge for _ in range(c.copies)]


def _open_top(layout: _Layout, spine: Spine, labeling: Labeling, prefix: str, position: int,
              curves: Sequence[CurveInsertion] = ()):
    g = spine.genus
    layout.cup(position, f"{prefix}0", f"{prefix}t0", labeling[0])
    for k in range(1, g):
        right = f"{prefix}t{k}" if k < g - 1 else f"{prefix}{g}"
        layout.split(f"{prefix}t{k - 1}", f"{prefix}{k}", right, labeling[k], labeling[spine.top_rail(k)])
        if k < g - 1:
            for curve in _rings_on(curves, spine.top_rail(k)):
                layout.ring_around(right, curve.color, curve.framing)


def _close_bottom(layout: _Layout, spine: Spine, labeling: Labeling, prefix: str,
                  curves: Sequence[CurveInsertion] = ()):
    g = spine.genus
    rail = f"{prefix}{g}"
    for v in range(g - 1, 0, -1):
        created = f"{prefix}b{v - 1}"
        layout.join(f"{prefix}{v}", rail, created, labeling[spine.bottom_rail(v - 1)])
        if v - 1 >= 1:
            for curve in _rings_on(curves, spine.bottom_rail(v - 1)):
                layout.ring_around(created, curve.color, curve.framing)
        rail = created
    layout.cap(f"{prefix}0", rail)


def _middle(layout: _Layout, spine: Spine, curves: Sequence[CurveInsertion]):
    for edge in spine.middle_edges:
        for curve in _rings_on(curves, edge):
            layout.ring_around(f"X{edge}", curve.color, curve.framing)
    loops = [c for c in curves if c.kind == LOOP for _ in range(c.copies)]
    loops.sort(key=lambda c: (c.holes[0] - c.holes[1], c.holes[0]))
    opened = []
    for n, curve in enumerate(loops):
        legs = (f"L{n}a", f"L{n}b")
        layout.open_loop(curve.holes[0], curve.holes[1], *legs, curve.color, curve.framing)
        opened.append(legs)
    for k in range(1, spine.genus + 1):
        layout.surgery(f"H{k}")
    for legs in reversed(opened):
        layout.close_loop(*legs)


def doubled_diagram(x: HandlebodySkein, w: Labeling, level: Level) -> GraphDiagram:
    """x in the front layer, the plain labeled spine w behind it, one Omega surgery ring per hole."""
    spine = spine_for(x.genus)
    check_curves(spine, x.curves)
    if len(x.labeling) != len(spine.edges) or len(w) != len(spine.edges):
        raise InvalidCurve(f"labelings must have {len(spine.edges)} entries for genus {x.genus}")
    layout = _Layout(level)
    if spine.genus == 1:
        layout.cup(0, "X0", "X1", x.labeling[0])
        layout.cup(1, "W0", "W1", w[0])
        layout.order.insert(layout.order.index("W1"), "H1")
        _middle(layout, spine, x.curves)
        layout.order.remove("H1")
        layout.cap("W0", "W1")
        layout.cap("X0", "X1")
        return layout.builder.build()

    g = spine.genus
    _open_top(layout, spine, x.labeling, "X", 0, x.curves)
    _open_top(layout, spine, w, "W", 1)
    for k in range(g, 1, -1):
        for _ in range(k - 1):
            layout.step(f"W{k}", +1, moving_over=False)
    for k in range(1, g + 1):
        layout.order.insert(layout.order.index(f"W{k}"), f"H{k}")
    _middle(layout, spine, x.curves)
    layout.order = [t for t in layout.order if not layout.is_marker(t)]
    for k in range(2, g + 1):
        for _ in range(k - 1):
            layout.step(f"W{k}", -1, moving_over=False)
    _close_bottom(layout, spine, w, "W")
    _close_bottom(layout, spine, x.labeling, "X", x.curves)
    return layout.builder.build()


@lru_cache(maxsize=None)
def pairing(x: HandlebodySkein, w: Labeling, level: Level, strategy: str = "accel",
            budget: Optional[int] = None) -> CycloScalar:
    return evaluate(doubled_diagram(x, w, level), level, strategy, budget).value


@lru_cache(maxsize=None)
def gram_matrix(genus: int, level: Level, strategy: str = "accel", budget: Optional[int] = None) -> RepMatrix:
    """G[i][j] = <v_i, v_j> over the spine basis."""
    basis = enumerate_basis(genus, level)
    rows = [[pairing(HandlebodySkein(genus, v), w, level, strategy, budget) for w in basis] for v in basis]
    logger.info("gram matrix for genus %d at r=%d: %d x %d", genus, level.r, len(basis), len(basis))
    return RepMatrix(rows, level)


def express(skein: HandlebodySkein, level: Level, strategy: str = "accel",
            budget: Optional[int] = None) -> List[CycloScalar]:
    """Coefficients c with skein = sum c_i v_i in the spine basis."""
    basis = enumerate_basis(skein.genus, level)
    gram = gram_matrix(skein.genus, level, strategy, budget)
    rhs = [pairing(skein, w, level, strategy, budget) for w in basis]
    try:
        return solve(gram.transpose(), rhs)
    except DivisionByZero as exc:
        raise SingularGram(f"gram matrix for genus {skein.genus} at r={level.r} is singular") from exc
