"""Simple graphs, multigraphs and the exact algorithms run on them.

Everything here works on small, explicit objects: vertices are the integers
``0..n-1`` and an edge of a simple graph is the sorted pair ``(u, v)`` with
``u < v``. Edge colourings are plain dicts keyed by such pairs.
"""

from __future__ import annotations

import enum
import math
import sys
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Optional, Sequence

#: Girth of a forest, Berge girth of a hypergraph without Berge cycles, and
#: chromatic number of a hypergraph with a singleton edge.
INFINITY = math.inf

DEFAULT_CYCLE_CAP = 10**6

Edge = tuple[int, int]


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


class MissingEdgeError(KeyError):
    """An edge of the graph has no colour."""


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on ``range(vertex_count)``."""

    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {(u, v)} out of range")
            normalized.add(edge_key(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        edges = [tuple(e) for e in edges]
        keys = [edge_key(u, v) for u, v in edges]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate edge")
        return cls(vertex_count, frozenset(keys))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def __repr__(self):
        return f"Graph(vertex_count={self.vertex_count}, edges={len(self.edges)})"


@dataclass(frozen=True)
class Multigraph:
    """Multigraph whose vertices are ``first_vertex .. first_vertex + vertex_count - 1``.

    Edge ``i`` is ``edges[i]``; loops and parallel edges are allowed. The
    offset exists so that projection graphs can live on labels ``1..r``.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()
    first_vertex: int = 0

    def __post_init__(self):
        lo, hi = self.first_vertex, self.first_vertex + self.vertex_count
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (lo <= u < hi and lo <= v < hi):
                raise ValueError(f"edge {(u, v)} outside vertex range [{lo}, {hi})")
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def components(self, skip_edge: Optional[int] = None) -> int:
        """Number of connected components, optionally ignoring one edge."""
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.vertex_count
        for eid, (u, v) in enumerate(self.edges):
            if eid == skip_edge:
                continue
            a, b = find(u - self.first_vertex), find(v - self.first_vertex)
            if a != b:
                parent[a] = b
                count -= 1
        return count


# --------------------------------------------------------------------------
# girth


def shortest_cycle(g: Graph) -> Optional[list[int]]:
    """A shortest cycle of ``g`` as a vertex list, or None for a forest.

    Breadth-first search from every root; the least ``dist[u] + dist[w] + 1``
    over non-tree edges ``uw`` equals the girth, and for a root on a shortest
    cycle the two tree paths only meet at the root.
    """
    adj = g.adjacency
    best = None
    for root in range(g.vertex_count):
        if best is not None and best[0] == 3:
            break
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        local = None
        while queue:
            u = queue.popleft()
            # a cycle closed later through u has length at least 2*dist[u]
            if local is not None and 2 * dist[u] >= local[0]:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if local is None or length < local[0]:
                        local = (length, u, w)
        if local is not None and (best is None or local[0] < best[0]):
            best = (local[0], root, local[1], local[2], parent)
    if best is None:
        return None
    _, root, u, w, parent = best

    def path_to_root(x):
        out = [x]
        while x != root:
            x = parent[x]
            out.append(x)
        return out

    left = path_to_root(u)[::-1]
    right = path_to_root(w)
    return left + right[:-1]


def girth(g: Graph) -> float | int:
    cycle = shortest_cycle(g)
    return INFINITY if cycle is None else len(cycle)


# --------------------------------------------------------------------------
# bridges


def find_bridges(m: Multigraph) -> set[int]:
    """Edge ids whose removal increases the number of components.

    Iterative Tarjan low-link over edge ids, so a parallel partner counts as
    a back edge and loops are skipped.
    """
    n = m.vertex_count
    off = m.first_vertex
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(m.edges):
        if u == v:
            continue
        adj[u - off].append((v - off, eid))
        adj[v - off].append((u - off, eid))

    disc = [-1] * n
    low = [0] * n
    clock = 0
    bridges = set()
    for start in range(n):
        if disc[start] != -1:
            continue
        disc[start] = low[start] = clock
        clock += 1
        stack = [(start, -1, iter(adj[start]))]
        while stack:
            v, via, it = stack[-1]
            for w, eid in it:
                if eid == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, eid, iter(adj[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.add(via)
    return bridges


# --------------------------------------------------------------------------
# cycles


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple[tuple[int, ...], ...]
    truncated: bool

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the least vertex, orient toward the smaller neighbour."""
    n = len(cycle)
    i = min(range(n), key=cycle.__getitem__)
    rotated = list(cycle[i:]) + list(cycle[:i])
    if n > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def iter_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle once, in canonical form.

    Each cycle is discovered from its least vertex ``s`` by a depth-first
    search confined to vertices above ``s``; of its two orientations only the
    one whose second vertex is smaller than its last is kept.
    """
    adj = g.adjacency
    for s in range(g.vertex_count):
        higher = [w for w in adj[s] if w > s]
        if len(higher) < 2:
            continue
        path = [s]
        on_path = {s}
        stack = [iter(higher)]
        while stack:
            for w in stack[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                    continue
                if w < s or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                stack.append(iter(adj[w]))
                break
            else:
                stack.pop()
                on_path.discard(path.pop())


def enumerate_cycles(g: Graph, max_count: Optional[int] = DEFAULT_CYCLE_CAP) -> CycleEnumeration:
    found = []
    for cycle in iter_cycles(g):
        if max_count is not None and len(found) >= max_count:
            return CycleEnumeration(tuple(found), truncated=True)
        found.append(cycle)
    return CycleEnumeration(tuple(found), truncated=False)


def cycle_edges(cycle: Sequence[int]) -> list[Edge]:
    n = len(cycle)
    return [edge_key(cycle[i], cycle[(i + 1) % n]) for i in range(n)]


# --------------------------------------------------------------------------
# vertex colouring


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_proper_vertex_colouring(g: Graph, colours: Sequence[int]) -> bool:
    return len(colours) == g.vertex_count and all(colours[u] != colours[v] for u, v in g.edges)


def dsatur_colouring(g: Graph, vertices: Optional[Sequence[int]] = None) -> dict[int, int]:
    """Greedy DSATUR colouring of the given vertices (all by default)."""
    vertices = range(g.vertex_count) if vertices is None else vertices
    colour: dict[int, int] = {}
    seen_colours = {v: set() for v in vertices}
    todo = set(vertices)
    while todo:
        v = min(todo, key=lambda x: (-len(seen_colours[x]), -g.degree(x), x))
        c = 0
        while c in seen_colours[v]:
            c += 1
        colour[v] = c
        todo.discard(v)
        for w in g.adjacency[v]:
            if w in todo:
                seen_colours[w].add(c)
    return colour


def greedy_clique(g: Graph, vertices: Sequence[int]) -> list[int]:
    """A maximal clique grown greedily from each vertex; the largest is kept."""
    best: list[int] = []
    vs = set(vertices)
    for s in sorted(vs, key=lambda x: (-g.degree(x), x)):
        clique = [s]
        cand = set(g.adjacency[s]) & vs
        while cand:
            w = max(cand, key=lambda x: (len(cand & set(g.adjacency[x])), -x))
            clique.append(w)
            cand &= set(g.adjacency[w])
        if len(clique) > len(best):
            best = clique
    return best


def _colour_component(g: Graph, vertices: Sequence[int], k: int) -> Optional[dict[int, int]]:
    """Exact k-colouring search on one component, DSATUR branching order.

    A colour index above the number already in use is never tried, which
    removes colour-permutation symmetry.
    """
    adj = g.adjacency
    colour = {v: -1 for v in vertices}
    # neighbour_count[v][c]: coloured neighbours of v with colour c
    neighbour_count = {v: [0] * k for v in vertices}
    saturation = {v: 0 for v in vertices}
    uncoloured = set(vertices)

    def assign(v, c, sign):
        for w in adj[v]:
            counts = neighbour_count[w]
            if sign > 0:
                if counts[c] == 0:
                    saturation[w] += 1
                counts[c] += 1
            else:
                counts[c] -= 1
                if counts[c] == 0:
                    saturation[w] -= 1

    def search(used):
        if not uncoloured:
            return True
        v = min(uncoloured, key=lambda x: (-saturation[x], -len(adj[x]), x))
        counts = neighbour_count[v]
        uncoloured.discard(v)
        for c in range(min(used + 1, k)):
            if counts[c]:
                continue
            colour[v] = c
            assign(v, c, +1)
            if search(max(used, c + 1)):
                return True
            assign(v, c, -1)
        colour[v] = -1
        uncoloured.add(v)
        return False

    if sys.getrecursionlimit() < len(vertices) + 100:
        sys.setrecursionlimit(len(vertices) + 100)
    return dict(colour) if search(0) else None


def find_vertex_colouring(g: Graph, k: int) -> Optional[list[int]]:
    """A proper colouring with at most ``k`` colours, or None if none exists."""
    if g.vertex_count == 0:
        return []
    if k <= 0:
        return None
    colours = [0] * g.vertex_count
    for comp in _components(g):
        found = _colour_component(g, comp, k)
        if found is None:
            return None
        for v, c in found.items():
            colours[v] = c
    return colours


def optimal_colouring(g: Graph) -> tuple[int, list[int]]:
    """Chromatic number together with a witness colouring.

    Per component: clique lower bound, DSATUR upper bound, then exact
    decision searches from the lower bound upward.
    """
    if g.vertex_count == 0:
        raise ValueError("chromatic number of the empty graph is undefined here")
    colours = [0] * g.vertex_count
    chi = 1
    for comp in _components(g):
        greedy = dsatur_colouring(g, comp)
        upper = max(greedy.values()) + 1
        lower = len(greedy_clique(g, comp))
        best = greedy
        for k in range(lower, upper):
            found = _colour_component(g, comp, k)
            if found is not None:
                best = found
                break
        for v, c in best.items():
            colours[v] = c
        chi = max(chi, max(best.values()) + 1)
    return chi, colours


def chromatic_number(g: Graph) -> int:
    return optimal_colouring(g)[0]


# --------------------------------------------------------------------------
# edge colourings


def _normalise_colouring(g: Graph, colouring: Mapping[Edge, int]) -> dict[Edge, int]:
    normal = {edge_key(u, v): c for (u, v), c in colouring.items()}
    for e in g.sorted_edges:
        if e not in normal:
            raise MissingEdgeError(e)
    return normal


def is_proper_edge_colouring(
    g: Graph, colouring: Mapping[Edge, int]
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Return ``(True, None)`` or ``(False, (vertex, colour))`` for the first clash."""
    colour = _normalise_colouring(g, colouring)
    for v in range(g.vertex_count):
        seen = set()
        for w in g.adjacency[v]:
            c = colour[edge_key(v, w)]
            if c in seen:
                return False, (v, c)
            seen.add(c)
    return True, None


@dataclass(frozen=True)
class LonelyColourReport:
    status: Verdict
    cycle: Optional[tuple[int, ...]] = None
    colour: Optional[int] = None
    vertex: Optional[int] = None
    cycles_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status is Verdict.PASS


def colour_multiplicity_violation(
    g: Graph, colouring: Mapping[Edge, int]
) -> Optional[tuple[int, int]]:
    """First ``(vertex, colour)`` seen on three or more edges at that vertex."""
    colour = _normalise_colouring(g, colouring)
    for v in range(g.vertex_count):
        counts: dict[int, int] = {}
        for w in g.adjacency[v]:
            c = colour[edge_key(v, w)]
            counts[c] = counts.get(c, 0) + 1
            if counts[c] > 2:
                return v, c
    return None


def lonely_colour(cycle: Sequence[int], colour: Mapping[Edge, int]) -> Optional[int]:
    """Least colour appearing exactly once on the cycle, if any."""
    counts: dict[int, int] = {}
    for e in cycle_edges(cycle):
        c = colour[e]
        counts[c] = counts.get(c, 0) + 1
    lonely = [c for c, n in counts.items() if n == 1]
    return min(lonely) if lonely else None


def check_no_lonely_colour(
    g: Graph, colouring: Mapping[Edge, int], max_cycles: Optional[int] = DEFAULT_CYCLE_CAP
) -> LonelyColourReport:
    colour = _normalise_colouring(g, colouring)
    bad = colour_multiplicity_violation(g, colour)
    if bad is not None:
        return LonelyColourReport(Verdict.FAIL, vertex=bad[0], colour=bad[1])
    checked = 0
    for cycle in iter_cycles(g):
        if max_cycles is not None and checked >= max_cycles:
            return LonelyColourReport(Verdict.INCONCLUSIVE, cycles_checked=checked)
        checked += 1
        c = lonely_colour(cycle, colour)
        if c is not None:
            return LonelyColourReport(Verdict.FAIL, cycle=cycle, colour=c, cycles_checked=checked)
    return LonelyColourReport(Verdict.PASS, cycles_checked=checked)
