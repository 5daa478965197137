"""Trivalent spines of handlebodies and their admissible labelings.

Genus 1 uses a single loop edge. For g >= 2 the spine is a ladder drawn in the
g-holed disc: an outer cycle through 2g-2 vertices cut by g-1 rungs, so hole k
sits in the k-th face from the left. For g = 2 this is the theta graph.

Edge order (which is also the order of labels in a labeling):
    the g+1 "middle" edges read left to right (left arc, rungs 1..g-1, right arc),
    then the top rail segments 1..g-2, then the bottom rail segments 1..g-2.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np

from algebra.exact_scalars import Level
from skein.recoupling import admissible, colors
from utilities.config import max_genus
from utilities.errors import UnsupportedGenus

logger = logging.getLogger(__name__)

Labeling = Tuple[int, ...]


@dataclass(frozen=True)
class Spine:
    genus: int
    edges: Tuple[str, ...]
    vertices: Tuple[Tuple[int, int, int], ...]
    graph: nx.MultiGraph = field(compare=False, hash=False, repr=False)

    @property
    def middle_edges(self) -> Tuple[int, ...]:
        """Edges crossing the horizontal midline, left to right (the left arc and, for
        g = 1, the loop edge appear once even though they cross twice)."""
        if self.genus == 1:
            return (0,)
        return tuple(range(self.genus + 1))

    def top_vertex_edges(self, k: int) -> Tuple[int, int, int]:
        """(incoming rail, rung, outgoing rail) at top vertex k, 1 <= k <= g-1."""
        return self.vertices[k - 1]

    def bottom_vertex_edges(self, k: int) -> Tuple[int, int, int]:
        return self.vertices[self.genus - 2 + k]

    def top_rail(self, k: int) -> int:
        """Edge index of top rail segment k; segment 0 is the left arc and g-1 the right arc."""
        return _top_segment(self.genus, k)

    def bottom_rail(self, k: int) -> int:
        return _bottom_segment(self.genus, k)

    def is_admissible(self, labeling: Labeling, level: Level) -> bool:
        return all(admissible(labeling[a], labeling[b], labeling[c], level) for a, b, c in self.vertices)


def _top_segment(genus: int, k: int) -> int:
    if k == 0:
        return 0
    if k == genus - 1:
        return genus
    return genus + k


def _bottom_segment(genus: int, k: int) -> int:
    if k == 0:
        return 0
    if k == genus - 1:
        return genus
    return 2 * genus - 2 + k


@lru_cache(maxsize=None)
def ladder_spine(genus: int) -> Spine:
    if genus < 1:
        raise UnsupportedGenus(f"genus must be at least 1, got {genus}")
    graph = nx.MultiGraph()
    if genus == 1:
        graph.add_edge("v", "v", key="e0")
        return Spine(1, ("e0",), (), graph)
    edge_count = 3 * genus - 3
    names = tuple(f"e{i}" for i in range(edge_count))
    vertices: List[Tuple[int, int, int]] = []
    for k in range(1, genus):
        vertices.append((_top_segment(genus, k - 1), k, _top_segment(genus, k)))
    for k in range(1, genus):
        vertices.append((_bottom_segment(genus, k - 1), k, _bottom_segment(genus, k)))
    ends: Dict[int, List[str]] = {i: [] for i in range(edge_count)}
    for index, triple in enumerate(vertices):
        node = f"top{index + 1}" if index < genus - 1 else f"bottom{index - genus + 2}"
        for edge in triple:
            ends[edge].append(node)
    for edge, nodes in ends.items():
        graph.add_edge(nodes[0], nodes[1], key=names[edge])
    spine = Spine(genus, names, tuple(vertices), graph)
    _check_spine(spine)
    return spine


def _check_spine(spine: Spine):
    graph, g = spine.graph, spine.genus
    if graph.number_of_edges() != 3 * g - 3 or graph.number_of_nodes() != 2 * g - 2:
        raise ValueError(f"genus-{g} spine has the wrong size")
    if not nx.is_connected(graph) or any(d != 3 for _, d in graph.degree()):
        raise ValueError(f"genus-{g} spine is not a connected trivalent graph")


def spine_for(genus: int) -> Spine:
    limit = max_genus()
    if genus > limit:
        raise UnsupportedGenus(f"genus {genus} exceeds the configured maximum {limit}")
    return ladder_spine(genus)


@lru_cache(maxsize=None)
def _enumerate(genus: int, level: Level) -> Tuple[Labeling, ...]:
    spine = ladder_spine(genus)
    found = tuple(
        labeling for labeling in product(colors(level), repeat=len(spine.edges))
        if spine.is_admissible(labeling, level)
    )
    logger.debug("genus %d at r=%d: %d admissible labelings", genus, level.r, len(found))
    return found


def enumerate_basis(genus: int, level: Level) -> List[Labeling]:
    """Admissible labelings in lexicographic order of the edge labels."""
    spine_for(genus)
    return list(_enumerate(genus, level))


def vacuum(genus: int) -> Labeling:
    return (0,) * len(ladder_spine(genus).edges)


def verlinde_dimension(genus: int, r: int) -> float:
    """sum_a S_0a^(2-2g) with S_0a = sqrt(2/r) sin(pi (a+1) / r)."""
    a = np.arange(1, r)
    s0 = math.sqrt(2.0 / r) * np.sin(np.pi * a / r)
    return float(np.sum(s0 ** (2 - 2 * genus)))
