"""Labelling families, projection multigraphs and tranquility certificates.

A labelling family gives every hyperedge ``F`` a bijection ``F -> {1..r}``.
A closed walk projects to a multigraph on the labels with one edge per step,
and the family is tranquil when no projection has a bridge.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graphcore import Multigraph, find_bridges
from .hypercore import ClosedWalk, Hypergraph, enumerate_closed_walks, iter_closed_walks


class UnlabelledEdgeError(KeyError):
    """A walk uses a hyperedge the labelling family does not cover."""


class LabellingNotFound(Exception):
    def __init__(self, reason: str, explored: int = 0):
        super().__init__(f"no tranquil labelling found ({reason}, {explored} assignments explored)")
        self.reason = reason
        self.explored = explored


@dataclass(frozen=True)
class LabellingFamily:
    """``labels[j][v]`` is the label of vertex ``v`` inside hyperedge ``j``."""

    labels: Mapping[int, Mapping[int, int]]

    def __post_init__(self):
        frozen = {int(j): {int(v): int(i) for v, i in lab.items()} for j, lab in self.labels.items()}
        for j, lab in frozen.items():
            if sorted(lab.values()) != list(range(1, len(lab) + 1)):
                raise ValueError(f"labelling of hyperedge {j} is not a bijection onto 1..{len(lab)}")
        object.__setattr__(self, "labels", frozen)

    @classmethod
    def from_orders(cls, h: Hypergraph, orders: Iterable[Iterable[int]]) -> "LabellingFamily":
        """Hyperedge ``j`` labels ``orders[j][0]`` with 1, ``orders[j][1]`` with 2, ..."""
        return cls({j: {v: i + 1 for i, v in enumerate(order)} for j, order in enumerate(orders)})

    @classmethod
    def sorted_order(cls, h: Hypergraph) -> "LabellingFamily":
        return cls.from_orders(h, h.hyperedges)

    def label(self, edge: int, vertex: int) -> int:
        try:
            return self.labels[edge][vertex]
        except KeyError:
            raise UnlabelledEdgeError((edge, vertex)) from None

    def vertex_with_label(self, edge: int, label: int) -> int:
        for v, i in self.labels[edge].items():
            if i == label:
                return v
        raise KeyError((edge, label))

    def order(self, edge: int) -> tuple[int, ...]:
        """Vertices of ``edge`` listed by label."""
        lab = self.labels[edge]
        return tuple(sorted(lab, key=lab.__getitem__))

    def validate(self, h: Hypergraph) -> None:
        for j, e in enumerate(h.hyperedges):
            if j not in self.labels:
                raise UnlabelledEdgeError(j)
            if set(self.labels[j]) != set(e):
                raise ValueError(f"labelling of hyperedge {j} has domain {sorted(self.labels[j])}, not {e}")

    def restricted(self, old_edges: list[int], old_vertices: list[int]) -> "LabellingFamily":
        """Family for an induced subhypergraph; see ``hypercore.induced_subhypergraph``."""
        new_id = {v: i for i, v in enumerate(old_vertices)}
        return LabellingFamily(
            {j: {new_id[v]: i for v, i in self.labels[old].items()} for j, old in enumerate(old_edges)}
        )

    def relabelled(self, edge_perm: Mapping[int, int], vertex_perm: Mapping[int, int]) -> "LabellingFamily":
        return LabellingFamily(
            {edge_perm[j]: {vertex_perm[v]: i for v, i in lab.items()} for j, lab in self.labels.items()}
        )


def project(walk: ClosedWalk, lam: LabellingFamily, r: int) -> Multigraph:
    """Projection graph: labels ``1..r``, edge ``i`` joins the labels of step ``i``'s endpoints."""
    edges = []
    for v, f, w in walk.steps():
        if f not in lam.labels:
            raise UnlabelledEdgeError(f)
        edges.append((lam.label(f, v), lam.label(f, w)))
    return Multigraph(r, tuple(edges), first_vertex=1)


# --------------------------------------------------------------------------
# certification


TRANQUIL = "TRANQUIL"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class TranquilityCertificate:
    verdict: str
    walk_count: Optional[int]
    max_walk_length: int
    walk: Optional[ClosedWalk] = None
    bridge: Optional[int] = None
    bridge_labels: Optional[tuple[int, int]] = None
    method: str = "enumerate"

    @property
    def tranquil(self) -> bool:
        return self.verdict == TRANQUIL

    def replay(self, lam: LabellingFamily, r: int) -> bool:
        """Recompute the projection of the stored walk and confirm the stored bridge."""
        if self.walk is None:
            return self.verdict == TRANQUIL
        m = project(self.walk, lam, r)
        return self.bridge in find_bridges(m) and m.edges[self.bridge] == self.bridge_labels


def walk_bridges(walk: ClosedWalk, lam: LabellingFamily, r: int) -> set[int]:
    return find_bridges(project(walk, lam, r))


def _certify_by_enumeration(h: Hypergraph, lam: LabellingFamily) -> TranquilityCertificate:
    max_len = h.vertex_count + 1
    r = h.uniformity
    count = 0
    worst = None
    for walk in iter_closed_walks(h, max_len):
        count += 1
        bridges = walk_bridges(walk, lam, r)
        if bridges and (worst is None or walk.key() < worst[0].key()):
            worst = (walk, min(bridges))
    if worst is None:
        return TranquilityCertificate(TRANQUIL, count, max_len)
    walk, bridge = worst
    labels = project(walk, lam, r).edges[bridge]
    return TranquilityCertificate(COUNTEREXAMPLE, count, max_len, walk, bridge, labels)


def step_graph_admits_bridge(h: Hypergraph, lam: LabellingFamily) -> bool:
    """Relaxed tranquility test over closed step sequences that may revisit vertices.

    A projection has a bridge iff some cut of the label set is crossed by
    exactly one step. Nodes here are steps ``(F, u, w)``; ``(F, u, w)`` may be
    followed by ``(F', w, x)`` whenever ``F' != F``. Every closed walk is a
    closed path in this graph, so a False answer proves tranquility. True only
    means the relaxation found a closed step sequence with a single crossing,
    which need not be a genuine walk.
    """
    r = h.uniformity
    if r < 2 or h.edge_count < 2:
        return False
    steps = []
    for f, e in enumerate(h.hyperedges):
        lab = lam.labels[f]
        for u in e:
            for w in e:
                if u != w:
                    steps.append((f, u, w, lab[u], lab[w]))
    n = len(steps)
    step_f = np.array([s[0] for s in steps])
    lab_from = np.array([s[3] for s in steps])
    lab_to = np.array([s[4] for s in steps])
    starting_at = defaultdict(list)
    for i, (f, u, w, _, _) in enumerate(steps):
        starting_at[u].append(i)
    src, dst = [], []
    for i, (f, u, w, _, _) in enumerate(steps):
        for j in starting_at[w]:
            if step_f[j] != f:
                src.append(i)
                dst.append(j)
    src = np.array(src, dtype=np.int64)
    dst = np.array(dst, dtype=np.int64)

    labels = np.arange(1, r + 1)
    for size in range(1, r // 2 + 1):
        for side in itertools.combinations(range(1, r + 1), size):
            if 2 * size == r and 1 not in side:
                continue
            in_side = np.isin(labels, side)
            crossing = in_side[lab_from - 1] != in_side[lab_to - 1]
            if not crossing.any():
                continue
            if _single_crossing_cycle(n, src, dst, crossing):
                return True
    return False


def _single_crossing_cycle(n, src, dst, crossing) -> bool:
    """Is some crossing node on a closed path whose other nodes do not cross?"""
    calm = ~crossing
    inner = calm[src] & calm[dst]
    adj = csr_matrix((np.ones(inner.sum()), (src[inner], dst[inner])), shape=(n, n))
    ncomp, comp = connected_components(adj, directed=True, connection="strong")
    # condensation DAG restricted to calm nodes, reachability as int bitsets
    cond = defaultdict(set)
    for a, b in zip(comp[src[inner]], comp[dst[inner]]):
        if a != b:
            cond[a].add(b)
    calm_comps = set(comp[calm])
    order = _topological(calm_comps, cond)
    reach = {}
    for c in reversed(order):
        bits = 1 << int(c)
        for d in cond[c]:
            bits |= reach[d]
        reach[c] = bits
    out_calm = defaultdict(set)
    in_calm = defaultdict(int)
    for a, b in zip(src, dst):
        if crossing[a] and calm[b]:
            out_calm[a].add(comp[b])
        elif calm[a] and crossing[b]:
            in_calm[b] |= 1 << int(comp[a])
    for s, targets in out_calm.items():
        need = in_calm.get(s, 0)
        if need and any(reach[c] & need for c in targets):
            return True
    return False


def _topological(nodes, succ) -> list:
    indeg = {c: 0 for c in nodes}
    for c in nodes:
        for d in succ[c]:
            indeg[d] += 1
    order = [c for c in nodes if indeg[c] == 0]
    i = 0
    while i < len(order):
        for d in succ[order[i]]:
            indeg[d] -= 1
            if indeg[d] == 0:
                order.append(d)
        i += 1
    return order


def certify_tranquil(h: Hypergraph, lam: LabellingFamily, method: str = "enumerate") -> TranquilityCertificate:
    """Decide whether ``lam`` witnesses that ``h`` is tranquil.

    ``method="enumerate"`` projects every closed walk (length up to
    ``vertex_count + 1``, which covers all of them) and reports the first
    failure in canonical walk order. ``method="auto"`` first runs the step
    graph relaxation, whose negative answer is a proof for all walks at once,
    and only enumerates when the relaxation is inconclusive.
    """
    lam.validate(h)
    if method == "enumerate":
        return _certify_by_enumeration(h, lam)
    if method == "auto":
        if not step_graph_admits_bridge(h, lam):
            return TranquilityCertificate(TRANQUIL, None, h.vertex_count + 1, method="step-graph")
        return _certify_by_enumeration(h, lam)
    raise ValueError(f"unknown method {method!r}")


# --------------------------------------------------------------------------
# search


def search_tranquil_labelling(h: Hypergraph, budget: int = 10**6) -> LabellingFamily:
    """Backtracking over per-hyperedge bijections, hyperedges in id order.

    Walks are grouped by the largest hyperedge id they use and checked as
    soon as that hyperedge is labelled. ``budget`` bounds the number of
    single-hyperedge assignments tried. Raises ``LabellingNotFound`` with
    reason ``"exhausted"`` or ``"budget"``.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    r = h.uniformity
    walks_by_last = defaultdict(list)
    for walk in enumerate_closed_walks(h):
        walks_by_last[max(walk.hyperedges)].append(walk)
    perms = list(itertools.permutations(range(1, r + 1)))
    chosen: dict[int, dict[int, int]] = {}
    explored = 0

    class _OutOfBudget(Exception):
        pass

    def ok(j):
        lam = LabellingFamily(chosen)
        return all(not walk_bridges(w, lam, r) for w in walks_by_last[j])

    def search(j):
        nonlocal explored
        if j == h.edge_count:
            return True
        for perm in perms:
            explored += 1
            if explored > budget:
                raise _OutOfBudget
            chosen[j] = dict(zip(h.hyperedges[j], perm))
            if ok(j) and search(j + 1):
                return True
        del chosen[j]
        return False

    try:
        found = search(0)
    except _OutOfBudget:
        raise LabellingNotFound("budget", explored - 1) from None
    if not found:
        raise LabellingNotFound("exhausted", explored)
    return LabellingFamily(chosen)
