"""Finite slices of the Gallai hypergraph and girth-boosting pruning.

The slice with dimension ``d``, side ``n`` and radius bound ``R`` lives on
the box ``[0, n)^d``; its hyperedges are the sets
``{x + r e_1, ..., x + r e_d}`` with ``1 <= r <= R`` that fit in the box,
and the canonical labelling gives ``x + r e_i`` the label ``i``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .hypercore import (
    ClosedWalk,
    Hypergraph,
    hypergraph_chromatic_number,
    induced_subhypergraph,
    shortest_berge_cycle,
)
from .tranquil import LabellingFamily, certify_tranquil


class InvalidStepError(ValueError):
    pass


class PruningFailed(Exception):
    """Pruning to the girth target dropped the chromatic number below the target."""


@dataclass(frozen=True)
class GallaiSliceSpec:
    dimension: int
    side: int
    max_radius: int

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError("dimension must be at least 2")
        if self.side < 1 or self.max_radius < 1:
            raise ValueError("side and max_radius must be positive")

    @property
    def vertex_count(self) -> int:
        return self.side**self.dimension

    def vertex_id(self, point: Sequence[int]) -> int:
        out = 0
        for c in point:
            out = out * self.side + c
        return out

    def point(self, vertex: int) -> tuple[int, ...]:
        coords = []
        for _ in range(self.dimension):
            vertex, c = divmod(vertex, self.side)
            coords.append(c)
        return tuple(reversed(coords))


def build_slice(spec: GallaiSliceSpec) -> tuple[Hypergraph, LabellingFamily]:
    """Hyperedges in lexicographic ``(x, r)`` order with the canonical labelling."""
    d, n = spec.dimension, spec.side
    edges = []
    labels = {}
    for x in itertools.product(range(n), repeat=d):
        top = max(x)
        for r in range(1, spec.max_radius + 1):
            if top + r >= n:
                break
            pts = []
            for i in range(d):
                p = list(x)
                p[i] += r
                pts.append(spec.vertex_id(p))
            labels[len(edges)] = {v: i + 1 for i, v in enumerate(pts)}
            edges.append(tuple(pts))
    return Hypergraph(spec.vertex_count, d, tuple(edges)), LabellingFamily(labels)


def step_displacement(u: int, v: int, spec: GallaiSliceSpec) -> tuple[int, int, int]:
    """``(r, a, b)`` with ``v - u = r (e_b - e_a)``, axes numbered from 1."""
    diff = np.subtract(spec.point(v), spec.point(u))
    nz = np.flatnonzero(diff)
    if len(nz) != 2 or diff[nz[0]] != -diff[nz[1]]:
        raise InvalidStepError(f"{spec.point(u)} -> {spec.point(v)} is not r(e_b - e_a)")
    a, b = (nz[0], nz[1]) if diff[nz[0]] < 0 else (nz[1], nz[0])
    return int(diff[b]), int(a) + 1, int(b) + 1


def displacement_sum(steps: Sequence[tuple[int, int]], spec: GallaiSliceSpec) -> np.ndarray:
    """Sum of ``r_i (e_{b_i} - e_{a_i})`` over the given ``(u, v)`` steps."""
    total = np.zeros(spec.dimension, dtype=np.int64)
    for u, v in steps:
        r, a, b = step_displacement(u, v, spec)
        total[b - 1] += r
        total[a - 1] -= r
    return total


def check_displacement_closure(walk: Union[ClosedWalk, Sequence[tuple[int, int]]], spec: GallaiSliceSpec) -> bool:
    """Do the signed step displacements of the walk cancel?

    Accepts a closed walk or an explicit list of ``(u, v)`` steps (which
    need not close up).
    """
    if isinstance(walk, ClosedWalk):
        steps = [(v, w) for v, _, w in walk.steps()]
    else:
        steps = list(walk)
    return not displacement_sum(steps, spec).any()


def prune_for_girth(
    h: Hypergraph,
    lam: LabellingFamily,
    target_girth: int,
    target_chi: int,
    seed: int = 0,
) -> tuple[Hypergraph, LabellingFamily]:
    """Delete vertices of shortest Berge cycles until the girth target is met.

    Each round removes one vertex, drawn with ``random.Random(seed)`` from
    the hyperedges of a shortest Berge cycle. The result is checked exactly
    for chromatic number and re-certified tranquil; ``PruningFailed`` is
    raised when the chromatic number falls short.
    """
    rng = random.Random(seed)
    keep = set(range(h.vertex_count))
    current, cur_lam = h, lam
    old_ids = list(range(h.vertex_count))
    while True:
        cycle = shortest_berge_cycle(current)
        if cycle is None or len(cycle) >= target_girth:
            break
        candidates = sorted(cycle.vertices(current))
        victim = old_ids[rng.choice(candidates)]
        keep.discard(victim)
        current, old_ids, old_edges = induced_subhypergraph(h, keep)
        cur_lam = lam.restricted(old_edges, old_ids)
    if current is not h:
        # pruning may leave isolated vertices; they are dropped
        used = sorted({v for e in current.hyperedges for v in e})
        if len(used) < current.vertex_count:
            trimmed, ids, edges = induced_subhypergraph(current, used)
            cur_lam = cur_lam.restricted(edges, ids)
            current = trimmed
    chi = hypergraph_chromatic_number(current)
    if chi < target_chi:
        raise PruningFailed(f"chromatic number {chi} < {target_chi} after pruning (seed {seed})")
    cert = certify_tranquil(current, cur_lam, method="auto")
    if not cert.tranquil:  # pragma: no cover - restriction keeps tranquility
        raise AssertionError("restricted labelling lost tranquility")
    return current, cur_lam
