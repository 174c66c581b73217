"""Meander graphs M(x|y), modified meanders M'(x|y) and their components."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .composition import Composition, SeaweedPair
from .errors import NotAPathComponent

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Meander:
    """Vertices 1..n on a line with arcs above (top) and below (bottom).

    Arcs are stored as (i, j) with i < j. Loops are only present when the
    meander was built with ``modified=True``.
    """
    n: int
    top_arcs: FrozenSet[Arc]
    bottom_arcs: FrozenSet[Arc]
    top_loops: FrozenSet[int] = frozenset()
    bottom_loops: FrozenSet[int] = frozenset()
    modified: bool = False

    @cached_property
    def _top(self) -> Tuple[int, ...]:
        return _partner_table(self.n, self.top_arcs)

    @cached_property
    def _bottom(self) -> Tuple[int, ...]:
        return _partner_table(self.n, self.bottom_arcs)

    def top_partner(self, v: int) -> Optional[int]:
        """Other end of the top arc at v, None if there is none."""
        return self._top[v] or None

    def bottom_partner(self, v: int) -> Optional[int]:
        """Other end of the bottom arc at v, None if there is none."""
        return self._bottom[v] or None

    def degree(self, v: int) -> int:
        """Arc degree of v; loops are not counted."""
        return (self._top[v] != 0) + (self._bottom[v] != 0)

    def joined(self, u: int, v: int) -> bool:
        return self._top[u] == v or self._bottom[u] == v

    def plain(self) -> "Meander":
        """The same meander without loops."""
        return Meander(self.n, self.top_arcs, self.bottom_arcs)


def _partner_table(n: int, arcs: FrozenSet[Arc]) -> Tuple[int, ...]:
    table = [0] * (n + 1)
    for i, j in arcs:
        table[i] = j
        table[j] = i
    return tuple(table)


def _block_arcs(composition: Composition) -> Tuple[List[Arc], List[int]]:
    """Nested arcs of every block plus the middle vertex of each odd block."""
    arcs = []
    middles = []
    for start, size in zip(composition.starts, composition.parts):
        for i in range(1, size // 2 + 1):
            arcs.append((start + i, start + size + 1 - i))
        if size % 2:
            middles.append(start + (size + 1) // 2)
    return arcs, middles


def build_meander(pair: SeaweedPair, modified: bool = False) -> Meander:
    """Build M(x|y), or M'(x|y) with loops when `modified` is set."""
    top_arcs, top_middles = _block_arcs(pair.top)
    bottom_arcs, bottom_middles = _block_arcs(pair.bottom)
    return Meander(
        n=pair.n,
        top_arcs=frozenset(top_arcs),
        bottom_arcs=frozenset(bottom_arcs),
        top_loops=frozenset(top_middles) if modified else frozenset(),
        bottom_loops=frozenset(bottom_middles) if modified else frozenset(),
        modified=modified,
    )


@dataclass(frozen=True)
class ComponentCensus:
    """Paths, closed cycles and isolated points of a meander.

    Paths start at their smaller endpoint; cycles start at their smallest
    vertex and leave it along the top arc.
    """
    paths: Tuple[Tuple[int, ...], ...]
    cycles: Tuple[Tuple[int, ...], ...]
    isolated: Tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.paths) + len(self.cycles) + len(self.isolated)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def vertex_count(self) -> int:
        return (sum(len(p) for p in self.paths) + sum(len(c) for c in self.cycles)
                + len(self.isolated))


def _walk(m: Meander, start: int, use_top: bool, visited: List[bool]) -> List[int]:
    """Follow arcs from `start`, alternating sides, until a dead end or back at start."""
    sequence = []
    current = start
    while True:
        sequence.append(current)
        visited[current] = True
        following = m.top_partner(current) if use_top else m.bottom_partner(current)
        if following is None or following == start:
            return sequence
        current = following
        use_top = not use_top


def component_census(m: Meander) -> ComponentCensus:
    """Decompose the arc graph of `m` into paths, cycles and isolated points.

    Loops are ignored. Every vertex has at most one top and one bottom arc,
    so components are found by alternating walks in linear time.
    """
    visited = [False] * (m.n + 1)
    paths = []
    isolated = []
    for v in range(1, m.n + 1):
        if visited[v]:
            continue
        degree = m.degree(v)
        if degree == 0:
            visited[v] = True
            isolated.append(v)
        elif degree == 1:
            paths.append(tuple(_walk(m, v, m.top_partner(v) is not None, visited)))

    cycles = []
    for v in range(1, m.n + 1):
        if not visited[v]:
            cycles.append(tuple(_walk(m, v, True, visited)))

    census = ComponentCensus(tuple(paths), tuple(cycles), tuple(isolated))
    logger.debug("census n=%d paths=%d cycles=%d isolated=%d",
                 m.n, len(paths), len(cycles), len(isolated))
    return census


def is_single_path(m: Meander) -> bool:
    """True when the meander is one path through all n vertices.

    The one-vertex meander counts as a (trivial) single path.
    """
    census = component_census(m)
    return census.component_count == 1 and not census.cycles


def dead_ends(m: Meander, path: Sequence[int]) -> List[Arc]:
    """Intervals between line-consecutive path vertices that are joined by an arc."""
    members = set(path)
    census = component_census(m)
    components = [set(p) for p in census.paths] + [{v} for v in census.isolated]
    if len(members) != len(path) or members not in components:
        raise NotAPathComponent(path)
    line = sorted(members)
    return [(u, w) for u, w in zip(line, line[1:]) if m.joined(u, w)]


def degree_profile(m: Meander) -> Dict[int, int]:
    """Map every vertex to its arc degree (0, 1 or 2)."""
    return {v: m.degree(v) for v in range(1, m.n + 1)}
