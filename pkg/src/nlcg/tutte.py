"""Recursive hyper-Tutte construction of no-lonely-colour graphs.

Level 1 is a single vertex. Level ``k`` takes a tranquil ``r``-uniform
hypergraph ``H`` with ``r = |G_{k-1}|``: an independent set ``T`` stands for
``V(H)``, each hyperedge ``F`` gets its own copy of ``G_{k-1}``, and ``F``
is joined to its copy by the perfect matching that sends the copy vertex
labelled ``i`` to the vertex of ``F`` with label ``i``. Copies keep the
child colouring; each matching gets a fresh colour.

Vertex layout: ``T`` first in hypergraph vertex order, then the copies in
hyperedge order, each copy listing the child's vertices in order. Colours:
the child's colours first, then one per hyperedge in id order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence, Union

from .graphcore import (
    DEFAULT_CYCLE_CAP,
    Edge,
    Graph,
    Verdict,
    check_no_lonely_colour,
    chromatic_number,
    colour_multiplicity_violation,
    cycle_edges,
    edge_key,
    girth,
    is_proper_edge_colouring,
    iter_cycles,
)
from .hypercore import (
    ClosedWalk,
    Hypergraph,
    InvalidWalkError,
    berge_girth,
    hypergraph_chromatic_number,
)
from .tranquil import LabellingFamily, certify_tranquil, project, walk_bridges
from .gallai import GallaiSliceSpec, PruningFailed, build_slice, prune_for_girth


class UniformityMismatch(ValueError):
    pass


class NotTranquilError(ValueError):
    pass


class MalformedCycleError(ValueError):
    pass


class SupplierFailure(Exception):
    def __init__(self, level: int, requirement: str):
        super().__init__(f"level {level}: {requirement}")
        self.level = level
        self.requirement = requirement


@dataclass(frozen=True, eq=False)
class ConstructedGraph:
    graph: Graph
    colouring: Mapping[Edge, int]
    level: int
    girth_target: int
    T: tuple[int, ...] = ()
    nu: Mapping[int, int] = field(default_factory=dict)
    copies: tuple[tuple[int, ...], ...] = ()
    mu: Mapping[int, int] = field(default_factory=dict)
    child: Optional["ConstructedGraph"] = None
    hypergraph: Optional[Hypergraph] = None
    labelling: Optional[LabellingFamily] = None

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def colour_count(self) -> int:
        return len(set(self.colouring.values()))

    def chain(self) -> list["ConstructedGraph"]:
        """This graph and its ancestors, level 1 first."""
        out = []
        node = self
        while node is not None:
            out.append(node)
            node = node.child
        return out[::-1]

    def copy_of(self, v: int) -> Optional[int]:
        """Index of the copy containing ``v`` (None for T)."""
        if v < len(self.T) or not self.copies:
            return None
        return (v - len(self.T)) // len(self.copies[0])

    def local_id(self, v: int) -> int:
        return (v - len(self.T)) % len(self.copies[0])

    def matching_colour(self, edge_id: int) -> int:
        return _colour_span(self.child.colouring) + edge_id


def _colour_span(colouring: Mapping[Edge, int]) -> int:
    return max(colouring.values()) + 1 if colouring else 0


def base_graph(g: int) -> ConstructedGraph:
    if g < 1:
        raise ValueError("girth target must be at least 1")
    return ConstructedGraph(Graph(1), {}, level=1, girth_target=g)


def leaf_graph(graph: Graph, colouring: Mapping[Edge, int], g: int = 1, level: int = 1) -> ConstructedGraph:
    """Wrap an arbitrary coloured graph so it can serve as the child of ``assemble``."""
    return ConstructedGraph(graph, {edge_key(*e): c for e, c in colouring.items()}, level=level, girth_target=g)


def assemble(child: ConstructedGraph, h: Hypergraph, lam: LabellingFamily) -> ConstructedGraph:
    """One construction step without the uniformity or tranquility checks."""
    r = child.vertex_count
    n_t = h.vertex_count
    base = _colour_span(child.colouring)
    edges = {}
    copies = []
    for j, hyperedge in enumerate(h.hyperedges):
        offset = n_t + j * r
        copies.append(tuple(range(offset, offset + r)))
        for (u, v), c in child.colouring.items():
            edges[(offset + u, offset + v)] = c
        for t in hyperedge:
            edges[edge_key(t, offset + lam.label(j, t) - 1)] = base + j
    graph = Graph(n_t + h.edge_count * r, frozenset(edges))
    return ConstructedGraph(
        graph=graph,
        colouring=edges,
        level=child.level + 1,
        girth_target=child.girth_target,
        T=tuple(range(n_t)),
        nu={t: t for t in range(n_t)},
        copies=tuple(copies),
        mu={j: j for j in range(h.edge_count)},
        child=child,
        hypergraph=h,
        labelling=lam,
    )


def extend(child: ConstructedGraph, h: Hypergraph, lam: LabellingFamily) -> ConstructedGraph:
    if h.uniformity != child.vertex_count:
        raise UniformityMismatch(f"hypergraph is {h.uniformity}-uniform, child has {child.vertex_count} vertices")
    cert = certify_tranquil(h, lam, method="auto")
    if not cert.tranquil:
        raise NotTranquilError(f"labelling is not tranquil: walk {cert.walk} has bridge {cert.bridge_labels}")
    return assemble(child, h, lam)


# --------------------------------------------------------------------------
# hypergraph suppliers

Supplier = Callable[[int, int, int], tuple[Hypergraph, LabellingFamily]]


def singleton_hypergraph() -> tuple[Hypergraph, LabellingFamily]:
    """One vertex, one hyperedge ``{0}``: the degenerate 1-uniform input of level 2."""
    return Hypergraph(1, 1, ((0,),)), LabellingFamily({0: {0: 1}})


def cycle_hypergraph(length: int) -> tuple[Hypergraph, LabellingFamily]:
    """The cycle ``C_length`` as a 2-uniform hypergraph, each edge labelled low-to-high."""
    h = Hypergraph(length, 2, tuple((i, (i + 1) % length) for i in range(length)))
    return h, LabellingFamily.sorted_order(h)


def required_hypergraph_girth(g: int) -> int:
    return math.ceil(g / 3)


def fixed_supplier(stages: Mapping[int, tuple[Hypergraph, LabellingFamily]]) -> Supplier:
    def supply(level, r, g):
        if level not in stages:
            raise SupplierFailure(level, "no hypergraph configured for this level")
        return stages[level]

    return supply


@dataclass
class StandardSupplier:
    """Singleton at ``r = 1``, an odd cycle at ``r = 2``, pruned Gallai slices above.

    Slices of dimension ``r`` are tried with growing side ``n`` (and radius
    bound ``n - 1``) while they have at most ``vertex_cap`` vertices.
    """

    vertex_cap: int = 4096
    seeds: Sequence[int] = tuple(range(10))

    def __call__(self, level: int, r: int, g: int) -> tuple[Hypergraph, LabellingFamily]:
        need = required_hypergraph_girth(g)
        if r == 1:
            return singleton_hypergraph()
        if r == 2:
            m = max(3, need)
            return cycle_hypergraph(m if m % 2 else m + 1)
        n = 2
        best = 0
        while n**r <= self.vertex_cap:
            h, lam = build_slice(GallaiSliceSpec(r, n, n - 1))
            chi = hypergraph_chromatic_number(h)
            best = max(best, chi)
            if chi >= level:
                for seed in self.seeds:
                    try:
                        return prune_for_girth(h, lam, need, level, seed)
                    except PruningFailed:
                        continue
            n += 1
        raise SupplierFailure(
            level,
            f"no {r}-uniform Gallai slice with at most {self.vertex_cap} vertices has "
            f"chromatic number >= {level} (best {best}) and girth >= {need} after pruning",
        )


def check_supplied(h: Hypergraph, lam: LabellingFamily, level: int, r: int, g: int) -> None:
    if h.uniformity != r:
        raise SupplierFailure(level, f"hypergraph must be {r}-uniform, got {h.uniformity}")
    need = required_hypergraph_girth(g)
    if berge_girth(h) < need:
        raise SupplierFailure(level, f"hypergraph girth {berge_girth(h)} < {need}")
    chi = hypergraph_chromatic_number(h)
    if chi < level:
        raise SupplierFailure(level, f"hypergraph chromatic number {chi} < {level}")
    if not certify_tranquil(h, lam, method="auto").tranquil:
        raise SupplierFailure(level, "labelling family is not tranquil")


def build(g: int, k: int, supplier: Optional[Supplier] = None) -> ConstructedGraph:
    """Iterate ``extend`` from the single vertex up to level ``k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    supplier = supplier or StandardSupplier()
    cg = base_graph(g)
    for level in range(2, k + 1):
        r = cg.vertex_count
        h, lam = supplier(level, r, g)
        check_supplied(h, lam, level, r, g)
        cg = assemble(cg, h, lam)
    return cg


# --------------------------------------------------------------------------
# induced walks


@dataclass(frozen=True)
class Segment:
    copy: int
    start: int
    end: int


@dataclass(frozen=True)
class InducedWalk:
    walk: ClosedWalk
    segments: tuple[Segment, ...]


@dataclass(frozen=True)
class WithinCopy:
    copy: int


def _check_cycle(graph: Graph, cycle: Sequence[int]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise MalformedCycleError(f"{tuple(cycle)} is not a simple cycle")
    for u, v in cycle_edges(cycle):
        if not (0 <= u < graph.vertex_count and 0 <= v < graph.vertex_count) or not graph.has_edge(u, v):
            raise MalformedCycleError(f"{(u, v)} is not an edge")


def induced_walk(cg: ConstructedGraph, cycle: Sequence[int]) -> Union[InducedWalk, WithinCopy]:
    """The closed walk in ``H`` traced by ``cycle``, or where the cycle stays inside one copy.

    The cycle is cut at its ``T`` vertices; between two consecutive ``T``
    vertices it runs through one copy, whose hyperedge becomes the walk step.
    Raises ``InvalidWalkError`` if the traced sequence is not a closed walk.
    """
    _check_cycle(cg.graph, cycle)
    n_t = len(cg.T)
    starts = [i for i, v in enumerate(cycle) if v < n_t]
    if not starts:
        copies = {cg.copy_of(v) for v in cycle}
        assert len(copies) == 1, "copies are only joined through T"
        return WithinCopy(copies.pop())
    i0 = starts[0]
    cyc = list(cycle[i0:]) + list(cycle[:i0])
    edge_of_copy = {c: f for f, c in cg.mu.items()}
    vertices, hyperedges, segments = [], [], []
    i = 0
    n = len(cyc)
    while i < n:
        t = cyc[i]
        j = i + 1
        while j < n and cyc[j] >= n_t:
            j += 1
        path = cyc[i + 1 : j]
        assert path, "T is independent"
        copy = cg.copy_of(path[0])
        assert all(cg.copy_of(v) == copy for v in path)
        f = edge_of_copy[copy]
        nxt = cyc[j % n]
        assert cg.labelling.label(f, cg.nu[t]) == cg.local_id(path[0]) + 1
        assert cg.labelling.label(f, cg.nu[nxt]) == cg.local_id(path[-1]) + 1
        vertices.append(cg.nu[t])
        hyperedges.append(f)
        segments.append(Segment(copy, path[0], path[-1]))
        i = j
    return InducedWalk(ClosedWalk(tuple(vertices), tuple(hyperedges)), tuple(segments))


def _walk_certificate(cg: ConstructedGraph, cycle: Sequence[int]) -> Optional[dict]:
    """None if the cycle's induced walk (at whatever level it lives) projects bridgeless."""
    node, cyc = cg, list(cycle)
    while node is not None and node.hypergraph is not None:
        try:
            iw = induced_walk(node, cyc)
        except InvalidWalkError as exc:
            return {"cycle": list(cycle), "level": node.level, "error": str(exc)}
        if isinstance(iw, WithinCopy):
            cyc = [node.local_id(v) for v in cyc]
            node = node.child
            continue
        bridges = walk_bridges(iw.walk, node.labelling, node.hypergraph.uniformity)
        if bridges:
            m = project(iw.walk, node.labelling, node.hypergraph.uniformity)
            b = min(bridges)
            return {
                "cycle": list(cycle),
                "level": node.level,
                "walk": {"vertices": list(iw.walk.vertices), "hyperedges": list(iw.walk.hyperedges)},
                "bridge": b,
                "bridge_labels": list(m.edges[b]),
            }
        return None
    return None


# --------------------------------------------------------------------------
# verification


@dataclass
class CheckResult:
    status: Verdict
    value: object = None
    witness: Optional[dict] = None
    detail: str = ""

    def as_dict(self) -> dict:
        out = {"status": self.status.value, "detail": self.detail}
        if self.value is not None:
            out["value"] = "inf" if self.value == math.inf else self.value
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    checks: dict[str, CheckResult]

    @property
    def status(self) -> Verdict:
        statuses = {c.status for c in self.checks.values()}
        if Verdict.FAIL in statuses:
            return Verdict.FAIL
        if Verdict.INCONCLUSIVE in statuses:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS

    @property
    def passed(self) -> bool:
        return self.status is Verdict.PASS

    def __getitem__(self, name):
        return self.checks[name]

    def as_dict(self) -> dict:
        return {"status": self.status.value, "checks": {k: v.as_dict() for k, v in self.checks.items()}}


CHECKS = (
    "proper_colouring",
    "no_lonely_colour",
    "girth",
    "chromatic_number",
    "induced_walks",
    "colour_multiplicity",
)


def _check_proper(cg, max_cycles):
    ok, bad = is_proper_edge_colouring(cg.graph, cg.colouring)
    if ok:
        return CheckResult(Verdict.PASS, detail="proper edge-colouring")
    return CheckResult(Verdict.FAIL, witness={"vertex": bad[0], "colour": bad[1]}, detail="two edges of one colour meet")


def _check_lonely(cg, max_cycles):
    rep = check_no_lonely_colour(cg.graph, cg.colouring, max_cycles)
    if rep.status is Verdict.PASS:
        return CheckResult(Verdict.PASS, rep.cycles_checked, detail=f"{rep.cycles_checked} cycles checked")
    if rep.status is Verdict.INCONCLUSIVE:
        return CheckResult(Verdict.INCONCLUSIVE, rep.cycles_checked, detail=f"cycle cap {max_cycles} reached")
    if rep.cycle is None:
        return CheckResult(
            Verdict.FAIL,
            witness={"vertex": rep.vertex, "colour": rep.colour},
            detail="vertex sees a colour more than twice",
        )
    return CheckResult(
        Verdict.FAIL, witness={"cycle": list(rep.cycle), "colour": rep.colour}, detail="lonely colour on a cycle"
    )


def _check_girth(cg, max_cycles):
    value = girth(cg.graph)
    status = Verdict.PASS if value >= cg.girth_target else Verdict.FAIL
    return CheckResult(status, value, detail=f"girth {value} vs target {cg.girth_target}")


def _check_chromatic(cg, max_cycles):
    value = chromatic_number(cg.graph)
    status = Verdict.PASS if value >= cg.level else Verdict.FAIL
    return CheckResult(status, value, detail=f"chromatic number {value} vs target {cg.level}")


def _check_walks(cg, max_cycles):
    checked = 0
    for cycle in iter_cycles(cg.graph):
        if max_cycles is not None and checked >= max_cycles:
            return CheckResult(Verdict.INCONCLUSIVE, checked, detail=f"cycle cap {max_cycles} reached")
        checked += 1
        bad = _walk_certificate(cg, cycle)
        if bad is not None:
            return CheckResult(Verdict.FAIL, checked, witness=bad, detail="induced walk projection has a bridge")
    return CheckResult(Verdict.PASS, checked, detail=f"{checked} cycles, all projections bridgeless")


def _check_multiplicity(cg, max_cycles):
    bad = colour_multiplicity_violation(cg.graph, cg.colouring)
    if bad is None:
        return CheckResult(Verdict.PASS, detail="every vertex sees each colour at most twice")
    return CheckResult(Verdict.FAIL, witness={"vertex": bad[0], "colour": bad[1]}, detail="colour seen three times")


_RUNNERS = {
    "proper_colouring": _check_proper,
    "no_lonely_colour": _check_lonely,
    "girth": _check_girth,
    "chromatic_number": _check_chromatic,
    "induced_walks": _check_walks,
    "colour_multiplicity": _check_multiplicity,
}


def verify_constructed(
    cg: ConstructedGraph,
    checks: Optional[Sequence[str]] = None,
    max_cycles: Optional[int] = DEFAULT_CYCLE_CAP,
    workers: int = 1,
) -> VerificationReport:
    """Run the selected checks (all by default); report order follows ``CHECKS``."""
    names = [c for c in CHECKS if checks is None or c in checks]
    unknown = set(checks or ()) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {n: pool.submit(_RUNNERS[n], cg, max_cycles) for n in names}
            results = {n: futures[n].result() for n in names}
    else:
        results = {n: _RUNNERS[n](cg, max_cycles) for n in names}
    return VerificationReport(results)
