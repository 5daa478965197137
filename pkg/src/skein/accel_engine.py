"""Fusion-tree evaluation of closed diagrams.

The part of the diagram above the current slice is kept as a combination of
left-comb fusion trees: with strand colors c_1..c_n the tree carries channels
y_0 = 0, y_k in y_{k-1} (x) c_k, y_n = 0. Cups and caps become bubble factors,
vertices and crossings become 6j moves and half-twist coefficients, so no
strand-level expansion happens on the way.
"""
import logging
from functools import lru_cache
from typing import Dict, Optional, Tuple

from algebra.exact_scalars import CycloScalar, Level
from skein import recoupling as rc
from skein.diagram import (
    CAP, CUP, IDENTITY, JOIN, OMEGA, OVER, PROJ, SPLIT, UNDER, GraphDiagram, components, has_vertex_without_triad,
)
from skein.naive_engine import EvalResult, _checked, eval_naive
from utilities.config import term_budget
from utilities.errors import InvalidDiagram, ResourceLimit, RewriteStuck, ZeroTheta

logger = logging.getLogger(__name__)

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]
State = Dict[Key, CycloScalar]


@lru_cache(maxsize=None)
def _cup_channels(y: int, a: int, level: Level) -> Tuple[Tuple[int, CycloScalar], ...]:
    return tuple((z, rc.delta(z, level) / rc.theta(y, a, z, level)) for z in rc.fusion_channels(y, a, level))


@lru_cache(maxsize=None)
def _bubble(y: int, a: int, z: int, level: Level) -> CycloScalar:
    return rc.theta(y, a, z, level) / rc.delta(y, level)


@lru_cache(maxsize=None)
def crossing_transfer(y: int, p: int, q: int, d: int, e: int, over: bool,
                      level: Level) -> Tuple[Tuple[int, CycloScalar], ...]:
    """Comb channel e between legs (p, q) -> channels e' between legs (q, p) after one
    crossing of the two legs, as (e', coefficient) pairs."""
    result: Dict[int, CycloScalar] = {}
    for u in rc.fusion_channels(p, q, level):
        if not rc.admissible(y, u, d, level):
            continue
        forward = rc.sixj(y, p, q, d, e, u, level)
        if forward.is_zero():
            continue
        twisted = forward * rc.half_twist(p, q, u, over, level)
        for e2 in rc.fusion_channels(y, q, level):
            back = rc.sixj_inverse(y, q, p, d, e2, u, level)
            if not back.is_zero():
                result[e2] = result[e2] + twisted * back if e2 in result else twisted * back
    return tuple((e2, c) for e2, c in sorted(result.items()) if not c.is_zero())


@lru_cache(maxsize=None)
def split_transfer(y: int, a: int, b: int, c: int, d: int,
                   level: Level) -> Tuple[Tuple[int, CycloScalar], ...]:
    """Leg a of the comb vertex (y a -> d) splits into (b, c): new comb channels e."""
    pairs = []
    for e in rc.fusion_channels(y, b, level):
        coeff = rc.sixj_inverse(y, b, c, d, e, a, level)
        if not coeff.is_zero():
            pairs.append((e, coeff))
    return tuple(pairs)


@lru_cache(maxsize=None)
def join_factor(y: int, a: int, b: int, d: int, e: int, c: int, level: Level) -> CycloScalar:
    """Legs (a, b) of the comb (y a -> e, e b -> d) join into c."""
    if not rc.admissible(y, c, d, level):
        return CycloScalar.zero(level)
    return rc.sixj(y, a, b, d, e, c, level) * rc.theta(a, b, c, level) / rc.delta(c, level)


def _add(state: State, key: Key, value: CycloScalar):
    if key in state:
        total = state[key] + value
        if total.is_zero():
            del state[key]
        else:
            state[key] = total
    elif not value.is_zero():
        state[key] = value


class _FusionEvaluator:
    def __init__(self, level: Level, budget: int):
        self.level = level
        self.budget = budget
        self.state: State = {((), (0,)): CycloScalar.one(level)}
        self.omega = rc.omega(level)
        self.stats = {"crossings": 0, "loops": 0, "recouplings": 0, "peak_states": 1}

    def _commit(self, state: State):
        self.state = state
        self.stats["peak_states"] = max(self.stats["peak_states"], len(state))
        if len(state) > self.budget:
            raise ResourceLimit(f"{len(state)} fusion states exceed the term budget {self.budget}")

    def cup(self, i: int, color: int, framing: int):
        if color == OMEGA:
            choices = [(u, self.omega[u] * rc.xi(u, self.level) ** framing) for u in rc.colors(self.level)]
        else:
            choices = [(color, None)]
        state: State = {}
        for (cols, ys), value in self.state.items():
            y = ys[i]
            for u, weight in choices:
                base = value * weight if weight is not None else value
                new_cols = cols[:i] + (u, u) + cols[i:]
                for z, coeff in _cup_channels(y, u, self.level):
                    _add(state, (new_cols, ys[:i + 1] + (z, y) + ys[i + 1:]), base * coeff)
        self._commit(state)

    def cap(self, i: int):
        state: State = {}
        for (cols, ys), value in self.state.items():
            a = cols[i]
            if cols[i + 1] != a or ys[i] != ys[i + 2]:
                continue
            factor = _bubble(ys[i], a, ys[i + 1], self.level)
            _add(state, (cols[:i] + cols[i + 2:], ys[:i + 1] + ys[i + 3:]), value * factor)
        self.stats["loops"] += 1
        self._commit(state)

    def cross(self, i: int, over: bool):
        state: State = {}
        for (cols, ys), value in self.state.items():
            p, q = cols[i], cols[i + 1]
            new_cols = cols[:i] + (q, p) + cols[i + 2:]
            for e2, coeff in crossing_transfer(ys[i], p, q, ys[i + 2], ys[i + 1], over, self.level):
                _add(state, (new_cols, ys[:i + 1] + (e2,) + ys[i + 2:]), value * coeff)
        self.stats["crossings"] += 1
        self.stats["recouplings"] += 2
        self._commit(state)

    def _require_channel(self, a: int, b: int, c: int):
        if not rc.admissible(a, b, c, self.level):
            raise RewriteStuck(f"vertex ({a},{b},{c}) has no fusion channel at r={self.level.r}")

    def split(self, i: int, a: int, b: int, c: int):
        self._require_channel(a, b, c)
        state: State = {}
        for (cols, ys), value in self.state.items():
            new_cols = cols[:i] + (b, c) + cols[i + 1:]
            for e, coeff in split_transfer(ys[i], a, b, c, ys[i + 1], self.level):
                _add(state, (new_cols, ys[:i + 1] + (e,) + ys[i + 1:]), value * coeff)
        self.stats["recouplings"] += 1
        self._commit(state)

    def join(self, i: int, a: int, b: int, c: int):
        self._require_channel(a, b, c)
        state: State = {}
        for (cols, ys), value in self.state.items():
            factor = join_factor(ys[i], a, b, ys[i + 2], ys[i + 1], c, self.level)
            if not factor.is_zero():
                _add(state, (cols[:i] + (c,) + cols[i + 2:], ys[:i + 1] + ys[i + 2:]), value * factor)
        self.stats["recouplings"] += 1
        self._commit(state)

    def run(self, diagram: GraphDiagram, omega_framings: Dict[int, int]) -> CycloScalar:
        for k, s in enumerate(diagram.slices):
            if s.kind == CUP:
                self.cup(s.index, s.colors[0], omega_framings.get(k, 0))
            elif s.kind == CAP:
                self.cap(s.index)
            elif s.kind in (OVER, UNDER):
                self.cross(s.index, s.kind == OVER)
            elif s.kind == SPLIT:
                self.split(s.index, *s.colors)
            elif s.kind == JOIN:
                self.join(s.index, *s.colors)
            elif s.kind in (PROJ, IDENTITY):
                # every leg of a fusion tree already carries its projector
                continue
            else:
                raise InvalidDiagram([], f"unknown slice {s.kind}")
        return self.state.get(((), (0,)), CycloScalar.zero(self.level))


def eval_accel(diagram: GraphDiagram, level: Level, budget: Optional[int] = None) -> EvalResult:
    _checked(diagram, level)
    if has_vertex_without_triad(diagram):
        return EvalResult(CycloScalar.zero(level), {"no_triad": 1})
    budget = budget or term_budget()
    found = components(diagram)
    omega_framings = {c.cup_slices[0]: diagram.framing_of(c.index) for c in found if c.is_omega}
    factor = CycloScalar.one(level)
    for comp in found:
        framing = diagram.framing_of(comp.index)
        if framing and comp.is_link and not comp.is_omega:
            factor = factor * rc.xi(comp.color, level) ** framing
    evaluator = _FusionEvaluator(level, budget)
    try:
        value = factor * evaluator.run(diagram, omega_framings)
    except (RewriteStuck, ZeroTheta) as exc:
        logger.info("fusion evaluation stuck (%s); falling back to strand level", exc)
        result = eval_naive(diagram, level, budget)
        result.stats["fallback"] = 1
        return result
    logger.debug("accel evaluation of %d slices at r=%d: %s", len(diagram.slices), level.r, evaluator.stats)
    return EvalResult(value, evaluator.stats)
