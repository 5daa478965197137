"""Colored framed link and trivalent-graph diagrams encoded as slice words.

A diagram is read top to bottom. Each slice acts on the running list of colored
strands; a closed diagram starts and ends with no strands. Colors are integers
0..r-2, or OMEGA for a component carrying the Kirby color eta * sum Delta(c) phi_c.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

OMEGA = -1

CUP, CAP, OVER, UNDER, SPLIT, JOIN, PROJ, IDENTITY = "CUP", "CAP", "X+", "X-", "V", "J", "PROJ", "ID"
SLICE_KINDS = (CUP, CAP, OVER, UNDER, SPLIT, JOIN, PROJ, IDENTITY)
_ARITY = {CUP: (0, 1), CAP: (0, 0), OVER: (0, 0), UNDER: (0, 0), SPLIT: (3, 3), JOIN: (3, 3),
          PROJ: (1, 1), IDENTITY: (0, 0)}


@dataclass(frozen=True)
class Slice:
    kind: str
    index: int = 0
    colors: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == IDENTITY:
            return IDENTITY
        parts = [self.kind, str(self.index)] + [_color_token(c) for c in self.colors]
        return " ".join(parts)


@dataclass(frozen=True)
class GraphDiagram:
    slices: Tuple[Slice, ...] = ()
    framings: Tuple[int, ...] = ()
    r: Optional[int] = None

    def framing_of(self, component: int) -> int:
        return self.framings[component] if component < len(self.framings) else 0

    def with_framings(self, framings: Sequence[int]) -> "GraphDiagram":
        return GraphDiagram(self.slices, tuple(framings), self.r)

    def crossing_count(self) -> int:
        return sum(1 for s in self.slices if s.kind in (OVER, UNDER))


@dataclass(frozen=True)
class Defect:
    kind: str
    slice_index: Optional[int] = None
    detail: str = ""

    def __str__(self) -> str:
        where = f" at slice {self.slice_index}" if self.slice_index is not None else ""
        return f"{self.kind}{where}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class Component:
    index: int
    color: Optional[int]
    cup_slices: List[int] = field(default_factory=list)
    has_vertex: bool = False

    @property
    def is_link(self) -> bool:
        return not self.has_vertex

    @property
    def is_omega(self) -> bool:
        return self.color == OMEGA


def _color_token(c: int) -> str:
    return "W" if c == OMEGA else str(c)


def _parse_color(token: str) -> int:
    return OMEGA if token.upper() == "W" else int(token)


def admissible_triple(a: int, b: int, c: int, r: Optional[int] = None) -> bool:
    if min(a, b, c) < 0 or (a + b + c) % 2:
        return False
    if not (abs(a - b) <= c <= a + b):
        return False
    return r is None or a + b + c <= 2 * (r - 2)


# file format

def parse_diagram(text: str) -> GraphDiagram:
    slices: List[Slice] = []
    framings: Tuple[int, ...] = ()
    r = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0].upper()
        try:
            if head == "R":
                r = int(tokens[1])
            elif head == "FRAMING":
                framings = tuple(int(t) for t in tokens[1:])
            elif head == IDENTITY:
                slices.append(Slice(IDENTITY))
            elif head in _ARITY:
                low, high = _ARITY[head]
                colors = tuple(_parse_color(t) for t in tokens[2:])
                if not low <= len(colors) <= high:
                    raise ValueError(f"{head} takes {high} color argument(s)")
                if head == CUP and not colors:
                    colors = (1,)
                slices.append(Slice(head, int(tokens[1]), colors))
            else:
                raise ValueError(f"unknown slice {tokens[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"line {number}: {exc}") from exc
    return GraphDiagram(tuple(slices), framings, r)


def format_diagram(diagram: GraphDiagram) -> str:
    lines = []
    if diagram.r is not None:
        lines.append(f"R {diagram.r}")
    if diagram.framings:
        lines.append("FRAMING " + " ".join(str(f) for f in diagram.framings))
    lines.extend(str(s) for s in diagram.slices)
    return "\n".join(lines) + "\n"


def load_diagram(path: Union[str, Path]) -> GraphDiagram:
    return parse_diagram(Path(path).read_text())


def save_diagram(diagram: GraphDiagram, path: Union[str, Path]):
    Path(path).write_text(format_diagram(diagram))


# structure

class _Components:
    """Union-find over component nodes; one node per CUP, in creation order."""

    def __init__(self):
        self.parent: List[int] = []
        self.color: List[int] = []
        self.cup_slice: List[int] = []
        self.vertex: List[bool] = []

    def new(self, color: int, slice_index: int) -> int:
        self.parent.append(len(self.parent))
        self.color.append(color)
        self.cup_slice.append(slice_index)
        self.vertex.append(False)
        return len(self.parent) - 1

    def find(self, node: int) -> int:
        while self.parent[node] != node:
            self.parent[node] = self.parent[self.parent[node]]
            node = self.parent[node]
        return node

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        root, child = min(ra, rb), max(ra, rb)
        self.parent[child] = root
        self.vertex[root] = self.vertex[root] or self.vertex[child]
        return root

    def components(self) -> List[Component]:
        groups: Dict[int, Component] = {}
        for node in range(len(self.parent)):
            root = self.find(node)
            if root not in groups:
                groups[root] = Component(len(groups), self.color[root])
            comp = groups[root]
            comp.cup_slices.append(self.cup_slice[node])
            comp.has_vertex = comp.has_vertex or self.vertex[node]
        for comp in groups.values():
            if comp.has_vertex:
                comp.color = None
        return list(groups.values())


def _walk(diagram: GraphDiagram, r: Optional[int]) -> Tuple[List[Defect], _Components, List[int]]:
    defects: List[Defect] = []
    comps = _Components()
    strands: List[int] = []
    nodes: List[int] = []
    # maps each CUP slice to its component node
    cup_nodes: List[int] = []
    max_color = None if r is None else r - 2

    def color_ok(c: int, k: int) -> bool:
        if c == OMEGA:
            return True
        if c < 0 or (max_color is not None and c > max_color):
            defects.append(Defect("ColorOutOfRange", k, f"color {c}"))
            return False
        return True

    for k, s in enumerate(diagram.slices):
        n = len(strands)
        if s.kind not in SLICE_KINDS:
            defects.append(Defect("UnknownSlice", k, s.kind))
            continue
        if s.kind == IDENTITY:
            continue
        if s.kind == CUP:
            if not 0 <= s.index <= n:
                defects.append(Defect("IndexOutOfRange", k))
                continue
            color = s.colors[0] if s.colors else 1
            color_ok(color, k)
            node = comps.new(color, k)
            cup_nodes.append(node)
            strands[s.index:s.index] = [color, color]
            nodes[s.index:s.index] = [node, node]
            continue
        width = 2 if s.kind in (CAP, OVER, UNDER, JOIN) else 1
        if not 0 <= s.index <= n - width:
            defects.append(Defect("IndexOutOfRange", k))
            continue
        i = s.index
        if s.kind == CAP:
            if strands[i] != strands[i + 1]:
                defects.append(Defect("ColorMismatch", k, f"{strands[i]} vs {strands[i + 1]}"))
            comps.union(nodes[i], nodes[i + 1])
            del strands[i:i + 2]
            del nodes[i:i + 2]
        elif s.kind in (OVER, UNDER):
            strands[i], strands[i + 1] = strands[i + 1], strands[i]
            nodes[i], nodes[i + 1] = nodes[i + 1], nodes[i]
        elif s.kind == PROJ:
            if strands[i] != s.colors[0]:
                defects.append(Defect("ColorMismatch", k, f"projector {s.colors[0]} on {strands[i]}"))
        elif s.kind == SPLIT:
            a, b, c = s.colors
            if strands[i] != a:
                defects.append(Defect("ColorMismatch", k, f"vertex input {a} on {strands[i]}"))
            if OMEGA in s.colors or strands[i] == OMEGA:
                defects.append(Defect("OmegaComponent", k, "vertex on an Omega-colored strand"))
            elif not admissible_triple(a, b, c, r):
                defects.append(Defect("InadmissibleVertex", k, f"({a},{b},{c})"))
            for c_ in (b, c):
                color_ok(c_, k)
            root = comps.find(nodes[i])
            comps.vertex[root] = True
            strands[i:i + 1] = [b, c]
            nodes[i:i + 1] = [root, root]
        elif s.kind == JOIN:
            a, b, c = s.colors
            if (strands[i], strands[i + 1]) != (a, b):
                defects.append(Defect("ColorMismatch", k, f"join ({a},{b}) on {tuple(strands[i:i + 2])}"))
            if OMEGA in s.colors or OMEGA in strands[i:i + 2]:
                defects.append(Defect("OmegaComponent", k, "vertex on an Omega-colored strand"))
            elif not admissible_triple(a, b, c, r):
                defects.append(Defect("InadmissibleVertex", k, f"({a},{b},{c})"))
            color_ok(c, k)
            root = comps.union(nodes[i], nodes[i + 1])
            comps.vertex[root] = True
            strands[i:i + 2] = [c]
            nodes[i:i + 2] = [root]
    if strands:
        defects.append(Defect("NotClosed", None, f"{len(strands)} open strand(s)"))
    return defects, comps, cup_nodes


def components(diagram: GraphDiagram) -> List[Component]:
    return _walk(diagram, diagram.r)[1].components()


def validate(diagram: GraphDiagram, r: Optional[int] = None) -> List[Defect]:
    """Defects of the slice word; the empty list means the diagram is well typed."""
    level_r = r if r is not None else diagram.r
    defects, comps, _ = _walk(diagram, level_r)
    if any(d.kind in ("IndexOutOfRange", "UnknownSlice") for d in defects):
        return defects
    found = comps.components()
    if diagram.framings and len(diagram.framings) != len(found):
        defects.append(Defect("FramingCount", None, f"{len(diagram.framings)} framings, {len(found)} components"))
    for comp in found:
        if comp.has_vertex and diagram.framing_of(comp.index):
            defects.append(Defect("FramingOnGraph", comp.cup_slices[0], f"component {comp.index}"))
        if comp.is_omega and len(comp.cup_slices) != 1:
            defects.append(Defect("OmegaComponent", comp.cup_slices[0], "Omega component needs exactly one cup"))
    return defects


def structural_defects(defects: Sequence[Defect]) -> List[Defect]:
    """Defects that make a diagram unevaluable; inadmissible vertices only force zero."""
    return [d for d in defects if d.kind != "InadmissibleVertex"]


def has_vertex_without_triad(diagram: GraphDiagram) -> bool:
    """True when some vertex breaks parity or the triangle inequality. Such a vertex
    has no triad of arcs, so the diagram is zero in the skein module. Vertices that
    only exceed the level bound still expand and vanish through the projectors."""
    return any(s.kind in (SPLIT, JOIN) and OMEGA not in s.colors and not admissible_triple(*s.colors)
               for s in diagram.slices)


class DiagramBuilder:
    """Accumulates slices and tracks the framing wanted for each new component."""

    def __init__(self, r: Optional[int] = None):
        self.r = r
        self.slices: List[Slice] = []
        self.strands: List[int] = []
        self._cup_framing: Dict[int, int] = {}

    def cup(self, i: int, color: int, framing: int = 0) -> "DiagramBuilder":
        self._cup_framing[len(self.slices)] = framing
        self.slices.append(Slice(CUP, i, (color,)))
        self.strands[i:i] = [color, color]
        return self

    def cap(self, i: int) -> "DiagramBuilder":
        self.slices.append(Slice(CAP, i))
        del self.strands[i:i + 2]
        return self

    def cross(self, i: int, over: bool = True) -> "DiagramBuilder":
        self.slices.append(Slice(OVER if over else UNDER, i))
        self.strands[i], self.strands[i + 1] = self.strands[i + 1], self.strands[i]
        return self

    def split(self, i: int, b: int, c: int) -> "DiagramBuilder":
        a = self.strands[i]
        self.slices.append(Slice(SPLIT, i, (a, b, c)))
        self.strands[i:i + 1] = [b, c]
        return self

    def join(self, i: int, c: int) -> "DiagramBuilder":
        a, b = self.strands[i], self.strands[i + 1]
        self.slices.append(Slice(JOIN, i, (a, b, c)))
        self.strands[i:i + 2] = [c]
        return self

    def project(self, i: int) -> "DiagramBuilder":
        self.slices.append(Slice(PROJ, i, (self.strands[i],)))
        return self

    def ring(self, start: int, width: int, color: int, framing: int = 0) -> "DiagramBuilder":
        """A small circle around strands start..start+width-1: the bundle passes over
        its left arc and under its right arc, so it links every bundle strand once."""
        self.cup(start + width, color, framing)
        for k in range(start + width - 1, start - 1, -1):
            self.cross(k, over=True)
        for k in range(start + width, start, -1):
            self.cross(k, over=False)
        return self.cap(start)

    def build(self) -> GraphDiagram:
        draft = GraphDiagram(tuple(self.slices), (), self.r)
        framings = []
        for comp in components(draft):
            framings.append(self._cup_framing.get(comp.cup_slices[0], 0))
        return GraphDiagram(tuple(self.slices), tuple(framings), self.r)


# standard networks

def unknot(a: int, framing: int = 0, r: Optional[int] = None) -> GraphDiagram:
    return DiagramBuilder(r).cup(0, a, framing).cap(0).build()


def kinked_unknot(a: int, r: Optional[int] = None) -> GraphDiagram:
    """An unknot drawn with one positive curl (blackboard framing +1)."""
    return DiagramBuilder(r).cup(0, a).cup(1, a).cross(0, over=True).cap(1).cap(0).build()


def hopf_link(a: int, b: int, r: Optional[int] = None) -> GraphDiagram:
    """Closure of a full twist of the (a, b) pair; both crossings sit on the two
    leftmost strands."""
    builder = DiagramBuilder(r).cup(0, a).cup(1, b).cross(0).cross(0)
    return builder.cap(1).cap(0).build()


def theta_network(a: int, b: int, c: int, r: Optional[int] = None) -> GraphDiagram:
    return DiagramBuilder(r).cup(0, a).split(1, b, c).join(1, a).cap(0).build()


def tetrahedral_network(a: int, b: int, c: int, d: int, e: int, f: int,
                        r: Optional[int] = None) -> GraphDiagram:
    """Planar tetrahedron with vertex triples (a,b,e), (c,d,e), (a,d,f), (b,c,f)."""
    builder = DiagramBuilder(r).cup(0, e).split(0, a, b).split(2, c, d)
    return builder.join(1, f).join(0, d).cap(0).build()


def twisted_theta(a: int, b: int, y: int, over: bool = True, r: Optional[int] = None) -> GraphDiagram:
    """y splits into (a, b), the pair crosses once, and (b, a) rejoins into y."""
    builder = DiagramBuilder(r).cup(0, y).split(0, a, b).cross(0, over)
    return builder.join(0, y).cap(0).build()


def split_union(first: GraphDiagram, second: GraphDiagram) -> GraphDiagram:
    """Disjoint union: `second` is drawn entirely below `first`."""
    return GraphDiagram(first.slices + second.slices, first.framings + second.framings,
                        first.r if first.r is not None else second.r)
