"""Finite uniform hypergraphs: closed walks, Berge girth, vertex colouring."""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .graphcore import INFINITY, Graph, shortest_cycle


class InvalidWalkError(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    """``r``-uniform hypergraph on ``range(vertex_count)``.

    Hyperedge ``j`` is stored as the sorted tuple ``hyperedges[j]``; its id is
    its position.
    """

    vertex_count: int
    uniformity: int
    hyperedges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        if self.uniformity < 1:
            raise ValueError("uniformity must be positive")
        edges = []
        seen = set()
        for raw in self.hyperedges:
            edge = tuple(sorted(int(v) for v in raw))
            if len(edge) != self.uniformity or len(set(edge)) != len(edge):
                raise ValueError(f"hyperedge {raw} is not a {self.uniformity}-set")
            if edge[0] < 0 or edge[-1] >= self.vertex_count:
                raise ValueError(f"hyperedge {raw} out of range")
            if edge in seen:
                raise ValueError(f"duplicate hyperedge {raw}")
            seen.add(edge)
            edges.append(edge)
        object.__setattr__(self, "hyperedges", tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def members(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(e) for e in self.hyperedges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Hyperedge ids containing each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for j, e in enumerate(self.hyperedges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    def incidence_graph(self) -> Graph:
        """Bipartite graph: vertex ``v`` stays ``v``, hyperedge ``j`` becomes ``n + j``."""
        n = self.vertex_count
        edges = [(v, n + j) for j, e in enumerate(self.hyperedges) for v in e]
        return Graph(n + self.edge_count, frozenset(edges))

    def __repr__(self):
        return (
            f"Hypergraph(vertex_count={self.vertex_count}, uniformity={self.uniformity}, "
            f"edges={self.edge_count})"
        )


def graph_as_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.vertex_count, 2, tuple(g.sorted_edges))


# --------------------------------------------------------------------------
# closed walks


@dataclass(frozen=True)
class ClosedWalk:
    """``v0 F0 v1 F1 ... F(l-1) v0``.

    Step ``i`` goes from ``vertices[i]`` to ``vertices[i+1 mod l]`` inside
    hyperedge ``hyperedges[i]``. Vertices are pairwise distinct and cyclically
    consecutive hyperedges differ; hyperedges may repeat otherwise.
    """

    vertices: tuple[int, ...]
    hyperedges: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        fs = tuple(int(f) for f in self.hyperedges)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "hyperedges", fs)
        n = len(vs)
        if n < 2 or len(fs) != n:
            raise InvalidWalkError("a closed walk needs l >= 2 vertices and l hyperedges")
        if len(set(vs)) != n:
            raise InvalidWalkError(f"repeated vertex in {vs}")
        for i in range(n):
            if fs[i] == fs[(i + 1) % n]:
                raise InvalidWalkError(f"consecutive hyperedges {fs[i]} at step {i}")

    def __len__(self):
        return len(self.vertices)

    def steps(self) -> Iterator[tuple[int, int, int]]:
        """``(v_i, F_i, v_{i+1})`` for each step."""
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.hyperedges[i], self.vertices[(i + 1) % n]

    def validate(self, h: Hypergraph) -> None:
        for v, f, w in self.steps():
            if not 0 <= f < h.edge_count:
                raise InvalidWalkError(f"unknown hyperedge {f}")
            if v not in h.members[f] or w not in h.members[f]:
                raise InvalidWalkError(f"step {v}->{w} leaves hyperedge {f}")

    def reversed(self) -> "ClosedWalk":
        vs, fs = self.vertices, self.hyperedges
        return ClosedWalk((vs[0],) + vs[:0:-1], fs[::-1])

    def rotated(self, i: int) -> "ClosedWalk":
        vs, fs = self.vertices, self.hyperedges
        return ClosedWalk(vs[i:] + vs[:i], fs[i:] + fs[:i])

    def key(self) -> tuple:
        return (len(self.vertices), self.vertices, self.hyperedges)

    def canonical(self) -> "ClosedWalk":
        """Least rotation or reflection, compared on (vertices, hyperedges)."""
        variants = []
        for w in (self, self.reversed()):
            for i in range(len(w)):
                r = w.rotated(i)
                variants.append((r.vertices, r.hyperedges, r))
        return min(variants, key=lambda t: (t[0], t[1]))[2]

    def format(self, vertex_names=None, edge_names=None) -> str:
        vn = vertex_names or (lambda v: str(v))
        en = edge_names or (lambda f: f"F{f}")
        parts = []
        for v, f, _ in self.steps():
            parts += [vn(v), en(f)]
        parts.append(vn(self.vertices[0]))
        return "".join(parts) if vertex_names else " ".join(parts)


def iter_closed_walks(h: Hypergraph, max_len: int) -> Iterator[ClosedWalk]:
    """Every closed walk of length at most ``max_len`` once, in canonical form.

    A walk is grown from its least vertex through larger vertices only; each
    closing is kept when it equals its own canonical form, which picks one of
    the two orientations.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    inc = h.incidence
    members = h.hyperedges
    for s in range(h.vertex_count):
        if not inc[s]:
            continue
        vs = [s]
        fs: list[int] = []
        on_path = {s}

        def options(v, prev):
            for f in inc[v]:
                if f == prev:
                    continue
                for w in members[f]:
                    if w != v and (w == s or w > s):
                        yield f, w

        stack = [options(s, None)]
        while stack:
            advanced = False
            for f, w in stack[-1]:
                if w == s:
                    if len(vs) >= 2 and f != fs[0]:
                        forward = (tuple(vs), tuple(fs) + (f,))
                        backward = ((s,) + tuple(vs[:0:-1]), (f,) + tuple(fs[::-1]))
                        # s is the unique least vertex, so only orientation matters
                        if forward <= backward:
                            yield ClosedWalk(*forward)
                    continue
                if w in on_path or len(vs) >= max_len:
                    continue
                vs.append(w)
                fs.append(f)
                on_path.add(w)
                stack.append(options(w, f))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if fs:
                    fs.pop()
                    on_path.discard(vs.pop())


def enumerate_closed_walks(h: Hypergraph, max_len: Optional[int] = None) -> list[ClosedWalk]:
    """All closed walks up to ``max_len`` (default: all of them), sorted by length then ids."""
    if max_len is None:
        max_len = h.vertex_count + 1
    return sorted(iter_closed_walks(h, max_len), key=ClosedWalk.key)


# --------------------------------------------------------------------------
# Berge cycles


@dataclass(frozen=True)
class BergeCycle:
    """Distinct hyperedges ``F1..Fl`` and distinct links ``x_i`` in ``F_i & F_{i+1}`` (cyclically)."""

    hyperedges: tuple[int, ...]
    links: tuple[int, ...]

    def __len__(self):
        return len(self.hyperedges)

    def is_valid(self, h: Hypergraph) -> bool:
        fs, xs = self.hyperedges, self.links
        n = len(fs)
        if n < 2 or len(xs) != n or len(set(fs)) != n or len(set(xs)) != n:
            return False
        return all(xs[i] in h.members[fs[i]] and xs[i] in h.members[fs[(i + 1) % n]] for i in range(n))

    def vertices(self, h: Hypergraph) -> set[int]:
        return set().union(*(h.members[f] for f in self.hyperedges))


def _berge_from_incidence_cycle(h: Hypergraph, cycle: Sequence[int]) -> BergeCycle:
    n = h.vertex_count
    # start on a hyperedge node so the pattern is F1 x1 F2 x2 ...
    i = next(i for i, x in enumerate(cycle) if x >= n)
    cycle = list(cycle[i:]) + list(cycle[:i])
    return BergeCycle(tuple(x - n for x in cycle[0::2]), tuple(cycle[1::2]))


def _incidence_cycles_of_length(g: Graph, length: int, first_hyper: int) -> Iterator[list[int]]:
    """Simple cycles of exactly ``length`` in an incidence graph, rooted at their least hyperedge node."""
    adj = g.adjacency
    for s in range(first_hyper, g.vertex_count):
        path = [s]
        on_path = {s}
        stack = [iter(adj[s])]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w == s and len(path) == length:
                    yield list(path)
                    continue
                if w in on_path or len(path) >= length or first_hyper <= w < s:
                    continue
                path.append(w)
                on_path.add(w)
                stack.append(iter(adj[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())


def shortest_berge_cycle(h: Hypergraph, min_length: int = 2) -> Optional[BergeCycle]:
    """A shortest Berge cycle of length at least ``min_length``, or None.

    Berge cycles of length ``l`` are exactly the ``2l``-cycles of the
    incidence graph; with ``min_length = 2`` a breadth-first shortest cycle
    suffices.
    """
    if h.edge_count < 2:
        return None
    g = h.incidence_graph()
    if min_length <= 2:
        cycle = shortest_cycle(g)
        return None if cycle is None else _berge_from_incidence_cycle(h, cycle)
    n = h.vertex_count
    for length in range(min_length, min(h.edge_count, n) + 1):
        for cycle in _incidence_cycles_of_length(g, 2 * length, n):
            return _berge_from_incidence_cycle(h, cycle)
    return None


def berge_girth(h: Hypergraph, include_digons: bool = True) -> float | int:
    """Length of the shortest Berge cycle; ``include_digons=False`` ignores length 2."""
    cycle = shortest_berge_cycle(h, 2 if include_digons else 3)
    return INFINITY if cycle is None else len(cycle)


# --------------------------------------------------------------------------
# colouring


def is_proper_hypergraph_colouring(h: Hypergraph, colours: Sequence[int]) -> bool:
    return all(len({colours[v] for v in e}) > 1 for e in h.hyperedges)


def _hyper_components(h: Hypergraph) -> list[list[int]]:
    """Vertex sets of connected components, ignoring vertices in no hyperedge."""
    inc = h.incidence
    seen = [False] * h.vertex_count
    comps = []
    for s in range(h.vertex_count):
        if seen[s] or not inc[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for f in inc[u]:
                for w in h.hyperedges[f]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
        comps.append(sorted(comp))
    return comps


def _colour_hyper_component(h: Hypergraph, vertices: Sequence[int], k: int) -> Optional[dict[int, int]]:
    """Exact search for a k-colouring with no monochromatic hyperedge.

    Colour ``c`` is forbidden at ``v`` when some hyperedge through ``v`` has
    every other vertex coloured ``c``; the next vertex is the one with most
    forbidden colours (DSATUR for hypergraphs). New colours are opened one at
    a time to break colour symmetry.
    """
    inc = h.incidence
    members = h.hyperedges
    colour = {v: -1 for v in vertices}
    size = [len(e) for e in members]
    assigned = [0] * len(members)
    colour_count = [[0] * k for _ in members]
    uncoloured = set(vertices)

    def forbidden(v):
        out = set()
        for f in inc[v]:
            if assigned[f] == size[f] - 1:
                for c in range(k):
                    if colour_count[f][c] == size[f] - 1:
                        out.add(c)
                        break
        return out

    def search(used):
        if not uncoloured:
            return True
        best = None
        for x in uncoloured:
            fb = forbidden(x)
            rank = (-len(fb), -len(inc[x]), x)
            if best is None or rank < best[0]:
                best = (rank, x, fb)
        _, v, fb = best
        if len(fb) >= k:
            return False
        uncoloured.discard(v)
        for c in range(min(used + 1, k)):
            if c in fb:
                continue
            colour[v] = c
            for f in inc[v]:
                assigned[f] += 1
                colour_count[f][c] += 1
            if search(max(used, c + 1)):
                return True
            for f in inc[v]:
                assigned[f] -= 1
                colour_count[f][c] -= 1
        colour[v] = -1
        uncoloured.add(v)
        return False

    if sys.getrecursionlimit() < len(vertices) + 100:
        sys.setrecursionlimit(len(vertices) + 100)
    return dict(colour) if search(0) else None


def find_hypergraph_colouring(h: Hypergraph, k: int) -> Optional[list[int]]:
    """A vertex colouring with at most ``k`` colours and no monochromatic hyperedge."""
    if any(len(e) == 1 for e in h.hyperedges):
        return None
    if h.vertex_count == 0:
        return []
    if k < 1:
        return None
    colours = [0] * h.vertex_count
    for comp in _hyper_components(h):
        found = _colour_hyper_component(h, comp, k)
        if found is None:
            return None
        for v, c in found.items():
            colours[v] = c
    return colours


def optimal_hypergraph_colouring(h: Hypergraph) -> tuple[float | int, Optional[list[int]]]:
    """Hypergraph chromatic number with a witness (``(INFINITY, None)`` for singleton edges)."""
    if any(len(e) == 1 for e in h.hyperedges):
        return INFINITY, None
    if h.vertex_count == 0:
        return 0, []
    colours = [0] * h.vertex_count
    chi = 1
    for comp in _hyper_components(h):
        k = 2
        while True:
            found = _colour_hyper_component(h, comp, k)
            if found is not None:
                break
            k += 1
        for v, c in found.items():
            colours[v] = c
        chi = max(chi, k)
    return chi, colours


def hypergraph_chromatic_number(h: Hypergraph) -> float | int:
    return optimal_hypergraph_colouring(h)[0]


def induced_subhypergraph(h: Hypergraph, keep: Iterable[int]) -> tuple[Hypergraph, list[int], list[int]]:
    """Restrict to ``keep``; hyperedges survive iff they lie inside it.

    Returns the new hypergraph, the old id of each new vertex, and the old id
    of each surviving hyperedge. Vertices are renumbered in increasing order.
    """
    old_vertices = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(old_vertices)}
    old_edges = [j for j, e in enumerate(h.hyperedges) if all(v in new_id for v in e)]
    edges = tuple(tuple(new_id[v] for v in h.hyperedges[j]) for j in old_edges)
    return Hypergraph(len(old_vertices), h.uniformity, edges), old_vertices, old_edges
