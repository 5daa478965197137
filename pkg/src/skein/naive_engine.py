"""Strand-level evaluation of closed diagrams.

Every color-a edge is cabled into a parallel strands carrying f^(a); vertices become
triad connectors and crossings are smoothed by the Kauffman relation. The running
state is a linear combination of planar pairings of the current boundary points,
read left to right.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.exact_scalars import CycloScalar, Level, power_of_A
from algebra.temperley_lieb import jones_wenzl, loop_value
from skein import recoupling
from skein.diagram import (
    CAP, CUP, IDENTITY, JOIN, OVER, PROJ, SPLIT, UNDER,
    GraphDiagram, Slice, components, has_vertex_without_triad, structural_defects, validate,
)
from utilities.config import term_budget
from utilities.errors import InvalidDiagram, ResourceLimit

logger = logging.getLogger(__name__)

Key = Tuple[int, ...]
State = Dict[Key, CycloScalar]


@dataclass
class EvalResult:
    value: CycloScalar
    stats: Dict[str, int] = field(default_factory=dict)


@lru_cache(maxsize=None)
def _projector_terms(a: int, level: Level) -> Tuple[Tuple[Tuple[int, ...], CycloScalar], ...]:
    return tuple((d.pairing, c) for d, c in jones_wenzl(a, level).items())


def _add(state: State, key: Key, value: CycloScalar):
    if key in state:
        total = state[key] + value
        if total.is_zero():
            del state[key]
        else:
            state[key] = total
    elif not value.is_zero():
        state[key] = value


def _insert_block(key: Key, p: int, block: Sequence[int]) -> Key:
    width = len(block)
    shifted = [q + width if q >= p else q for q in key]
    shifted[p:p] = [p + o for o in block]
    return tuple(shifted)


def _nested_cups(m: int) -> List[int]:
    return [2 * m - 1 - t for t in range(2 * m)]


def _remove_pair(key: Key, q: int) -> Tuple[Key, bool]:
    x, y = key[q], key[q + 1]
    loop = x == q + 1
    joined = list(key)
    if not loop:
        joined[x], joined[y] = y, x
    del joined[q:q + 2]
    return tuple(i - 2 if i > q + 1 else i for i in joined), loop


def _hook(key: Key, q: int) -> Tuple[Key, bool]:
    """Cup-cap on points q, q+1; True when the two points were already paired."""
    x, y = key[q], key[q + 1]
    if x == q + 1:
        return key, True
    hooked = list(key)
    hooked[x], hooked[y] = y, x
    hooked[q], hooked[q + 1] = q + 1, q
    return tuple(hooked), False


class _Evaluator:
    def __init__(self, level: Level, budget: int):
        self.level = level
        self.budget = budget
        self.delta = loop_value(level)
        self.a_plus = power_of_A(1, level)
        self.a_minus = power_of_A(-1, level)
        self.state: State = {(): CycloScalar.one(level)}
        self.widths: List[int] = []
        self.stats = {"crossings": 0, "loops": 0, "recouplings": 0, "peak_states": 1}

    def offset(self, i: int) -> int:
        return sum(self.widths[:i])

    def _commit(self, state: State):
        self.state = state
        size = len(state)
        self.stats["peak_states"] = max(self.stats["peak_states"], size)
        if size > self.budget:
            raise ResourceLimit(f"{size} pairing states exceed the term budget {self.budget}")

    def insert(self, p: int, block: Sequence[int]):
        self._commit({_insert_block(k, p, block): v for k, v in self.state.items()})

    def cap_points(self, q: int):
        state: State = {}
        for key, value in self.state.items():
            joined, loop = _remove_pair(key, q)
            if loop:
                self.stats["loops"] += 1
                value = value * self.delta
            _add(state, joined, value)
        self._commit(state)

    def smooth(self, q: int, over: bool):
        keep, hook = (self.a_plus, self.a_minus) if over else (self.a_minus, self.a_plus)
        state: State = {}
        for key, value in self.state.items():
            _add(state, key, value * keep)
            hooked, loop = _hook(key, q)
            _add(state, hooked, value * hook * self.delta if loop else value * hook)
        self.stats["crossings"] += 1
        self._commit(state)

    def project(self, p: int, a: int):
        if a < 2:
            return
        terms = _projector_terms(a, self.level)
        state: State = {}
        for key, value in self.state.items():
            outside = key[p:p + a]
            # two window points joined to each other put a cap on f^(a)
            if any(p <= o < p + a for o in outside):
                continue
            for pairing, coeff in terms:
                projected = list(key)
                for j in range(a):
                    partner = pairing[j]
                    if partner < a:
                        projected[outside[j]] = outside[partner]
                    else:
                        projected[outside[j]] = p + partner - a
                        projected[p + partner - a] = outside[j]
                for k in range(a):
                    partner = pairing[a + k]
                    if partner >= a:
                        projected[p + k] = p + partner - a
                _add(state, tuple(projected), value * coeff)
        self._commit(state)

    # slices

    def cup(self, i: int, a: int):
        p = self.offset(i)
        self.widths[i:i] = [a, a]
        if a:
            self.insert(p, _nested_cups(a))
            self.project(p, a)

    def cap(self, i: int):
        p = self.offset(i)
        a = self.widths[i]
        for t in range(a):
            self.cap_points(p + a - 1 - t)
        del self.widths[i:i + 2]

    def cross(self, i: int, over: bool):
        p = self.offset(i)
        a, b = self.widths[i], self.widths[i + 1]
        for s in range(a - 1, -1, -1):
            for t in range(b):
                self.smooth(p + s + t, over)
        self.widths[i], self.widths[i + 1] = b, a

    def split(self, i: int, a: int, b: int, c: int):
        p = self.offset(i)
        m = (b + c - a) // 2
        if m:
            self.insert(p + b - m, _nested_cups(m))
        self.widths[i:i + 1] = [b, c]
        self.project(p, b)
        self.project(p + b, c)
        self.stats["recouplings"] += 1

    def join(self, i: int, a: int, b: int, c: int):
        p = self.offset(i)
        m = (a + b - c) // 2
        for t in range(m):
            self.cap_points(p + a - 1 - t)
        self.widths[i:i + 2] = [c]
        self.project(p, c)
        self.stats["recouplings"] += 1

    def run(self, slices: Sequence[Slice]) -> CycloScalar:
        for s in slices:
            if s.kind == CUP:
                self.cup(s.index, s.colors[0])
            elif s.kind == CAP:
                self.cap(s.index)
            elif s.kind in (OVER, UNDER):
                self.cross(s.index, s.kind == OVER)
            elif s.kind == SPLIT:
                self.split(s.index, *s.colors)
            elif s.kind == JOIN:
                self.join(s.index, *s.colors)
            elif s.kind == PROJ:
                self.project(self.offset(s.index), s.colors[0])
            elif s.kind != IDENTITY:
                raise InvalidDiagram([], f"unknown slice {s.kind}")
        return self.state.get((), CycloScalar.zero(self.level))


def _checked(diagram: GraphDiagram, level: Level):
    defects = validate(diagram, level.r)
    fatal = structural_defects(defects)
    if fatal:
        raise InvalidDiagram(fatal)
    return defects


def omega_assignments(diagram: GraphDiagram, level: Level):
    """Yield (slices, weight) for every coloring of the Omega components, together with
    the framing factor of the concretely colored link components."""
    found = components(diagram)
    omega_cups = [(c.cup_slices[0], diagram.framing_of(c.index)) for c in found if c.is_omega]
    factor = CycloScalar.one(level)
    for comp in found:
        framing = diagram.framing_of(comp.index)
        if framing and comp.is_link and not comp.is_omega:
            factor = factor * recoupling.xi(comp.color, level) ** framing
    weights = recoupling.omega(level)
    for choice in product(recoupling.colors(level), repeat=len(omega_cups)):
        slices = list(diagram.slices)
        weight = factor
        for (k, framing), u in zip(omega_cups, choice):
            slices[k] = Slice(CUP, slices[k].index, (u,))
            weight = weight * weights[u] * recoupling.xi(u, level) ** framing
        yield slices, weight


def eval_naive(diagram: GraphDiagram, level: Level, budget: Optional[int] = None) -> EvalResult:
    _checked(diagram, level)
    if has_vertex_without_triad(diagram):
        return EvalResult(CycloScalar.zero(level), {"no_triad": 1})
    budget = budget or term_budget()
    total = CycloScalar.zero(level)
    stats: Dict[str, int] = {}
    for slices, weight in omega_assignments(diagram, level):
        if weight.is_zero():
            continue
        evaluator = _Evaluator(level, budget)
        total = total + weight * evaluator.run(slices)
        for name, count in evaluator.stats.items():
            stats[name] = max(stats.get(name, 0), count) if name == "peak_states" else stats.get(name, 0) + count
    logger.debug("naive evaluation of %d slices at r=%d: %s", len(diagram.slices), level.r, stats)
    return EvalResult(total, stats)
