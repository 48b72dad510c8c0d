"""Canonical JSON interchange files plus DOT and GraphML export.

Every file is a JSON object with ``"format": "nlcg"``, an integer
``"version"`` and a ``"kind"`` (``hypergraph``, ``constructed``,
``certificate`` or ``report``). Ids are integers, lists are emitted in
sorted order and keys are sorted, so ``dumps(parse(text)) == text`` for any
file this module wrote.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Optional

from .gallai import GallaiSliceSpec
from .graphcore import Graph
from .hypercore import ClosedWalk, Hypergraph
from .tranquil import LabellingFamily, TranquilityCertificate
from .tutte import ConstructedGraph

FORMAT = "nlcg"
VERSION = 1


class SchemaError(ValueError):
    pass


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a temporary file in the same directory, then rename over ``path``."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".nlcg-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _envelope(kind: str, body: dict) -> dict:
    return {"format": FORMAT, "version": VERSION, "kind": kind, **body}


def _expect(obj: dict, kind: str) -> None:
    if not isinstance(obj, dict) or obj.get("format") != FORMAT:
        raise SchemaError("not an nlcg file")
    if obj.get("version") != VERSION:
        raise SchemaError(f"unsupported version {obj.get('version')!r}")
    if obj.get("kind") != kind:
        raise SchemaError(f"expected kind {kind!r}, got {obj.get('kind')!r}")


def loads(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SchemaError("top level must be an object")
    return obj


# --------------------------------------------------------------------------
# hypergraphs and certificates


def walk_to_dict(walk: Optional[ClosedWalk]):
    if walk is None:
        return None
    return {"vertices": list(walk.vertices), "hyperedges": list(walk.hyperedges)}


def walk_from_dict(obj) -> Optional[ClosedWalk]:
    if obj is None:
        return None
    return ClosedWalk(tuple(obj["vertices"]), tuple(obj["hyperedges"]))


def certificate_to_dict(cert: TranquilityCertificate) -> dict:
    return {
        "verdict": cert.verdict,
        "walk_count": cert.walk_count,
        "max_walk_length": cert.max_walk_length,
        "method": cert.method,
        "walk": walk_to_dict(cert.walk),
        "bridge": cert.bridge,
        "bridge_labels": list(cert.bridge_labels) if cert.bridge_labels else None,
    }


def certificate_from_dict(obj: dict) -> TranquilityCertificate:
    labels = obj.get("bridge_labels")
    return TranquilityCertificate(
        verdict=obj["verdict"],
        walk_count=obj["walk_count"],
        max_walk_length=obj["max_walk_length"],
        walk=walk_from_dict(obj.get("walk")),
        bridge=obj.get("bridge"),
        bridge_labels=tuple(labels) if labels else None,
        method=obj.get("method", "enumerate"),
    )


def hypergraph_body(
    h: Hypergraph,
    lam: Optional[LabellingFamily] = None,
    spec: Optional[GallaiSliceSpec] = None,
    cert: Optional[TranquilityCertificate] = None,
) -> dict:
    return {
        "vertex_count": h.vertex_count,
        "uniformity": h.uniformity,
        "hyperedges": [list(e) for e in h.hyperedges],
        # per hyperedge: [vertex, label] pairs sorted by vertex
        "labelling": None if lam is None else [sorted(map(list, lam.labels[j].items())) for j in range(h.edge_count)],
        "slice": None
        if spec is None
        else {"dimension": spec.dimension, "side": spec.side, "max_radius": spec.max_radius},
        "certificate": None if cert is None else certificate_to_dict(cert),
    }


def hypergraph_from_body(obj: dict):
    try:
        h = Hypergraph(obj["vertex_count"], obj["uniformity"], tuple(tuple(e) for e in obj["hyperedges"]))
        lam = None
        if obj.get("labelling") is not None:
            lam = LabellingFamily({j: dict(pairs) for j, pairs in enumerate(obj["labelling"])})
            lam.validate(h)
        spec = None
        if obj.get("slice") is not None:
            s = obj["slice"]
            spec = GallaiSliceSpec(s["dimension"], s["side"], s["max_radius"])
        cert = None if obj.get("certificate") is None else certificate_from_dict(obj["certificate"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad hypergraph: {exc}") from exc
    return h, lam, spec, cert


def dump_hypergraph(h, lam=None, spec=None, cert=None) -> str:
    return dumps(_envelope("hypergraph", hypergraph_body(h, lam, spec, cert)))


def parse_hypergraph(text: str):
    obj = loads(text)
    _expect(obj, "hypergraph")
    return hypergraph_from_body(obj)


# --------------------------------------------------------------------------
# constructed graphs


def _level_body(cg: ConstructedGraph) -> dict:
    return {
        "level": cg.level,
        "vertex_count": cg.vertex_count,
        "edges": [[u, v, cg.colouring[(u, v)]] for u, v in cg.graph.sorted_edges],
        "T": list(cg.T),
        "nu": [[t, cg.nu[t]] for t in sorted(cg.nu)],
        "copies": [list(c) for c in cg.copies],
        "mu": [[f, cg.mu[f]] for f in sorted(cg.mu)],
        "hypergraph": None if cg.hypergraph is None else hypergraph_body(cg.hypergraph, cg.labelling),
    }


def constructed_to_dict(cg: ConstructedGraph) -> dict:
    return _envelope(
        "constructed",
        {"girth_target": cg.girth_target, "level": cg.level, "levels": [_level_body(x) for x in cg.chain()]},
    )


def dump_constructed(cg: ConstructedGraph) -> str:
    return dumps(constructed_to_dict(cg))


def constructed_from_dict(obj: dict) -> ConstructedGraph:
    _expect(obj, "constructed")
    try:
        g = obj["girth_target"]
        node = None
        for body in obj["levels"]:
            edges = body["edges"]
            graph = Graph(body["vertex_count"], frozenset((u, v) for u, v, _ in edges))
            if len(graph.edges) != len(edges):
                raise SchemaError("duplicate edge")
            colouring = {(min(u, v), max(u, v)): c for u, v, c in edges}
            h = lam = None
            if body.get("hypergraph") is not None:
                h, lam, _, _ = hypergraph_from_body(body["hypergraph"])
            node = ConstructedGraph(
                graph=graph,
                colouring=colouring,
                level=body["level"],
                girth_target=g,
                T=tuple(body["T"]),
                nu={t: v for t, v in body["nu"]},
                copies=tuple(tuple(c) for c in body["copies"]),
                mu={f: c for f, c in body["mu"]},
                child=node,
                hypergraph=h,
                labelling=lam,
            )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"bad constructed graph: {exc}") from exc
    if node is None:
        raise SchemaError("no levels")
    if node.level != obj["level"]:
        raise SchemaError("top level mismatch")
    return node


def parse_constructed(text: str) -> ConstructedGraph:
    return constructed_from_dict(loads(text))


# --------------------------------------------------------------------------
# export


def to_dot(cg: ConstructedGraph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(cg.vertex_count)]
    lines += [f"  {u} -- {v} [colour={cg.colouring[(u, v)]}];" for u, v in cg.graph.sorted_edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(cg: ConstructedGraph) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="colour" for="edge" attr.name="colour" attr.type="int"/>',
        '  <graph id="G" edgedefault="undirected">',
    ]
    lines += [f'    <node id="n{v}"/>' for v in range(cg.vertex_count)]
    for u, v in cg.graph.sorted_edges:
        lines.append(
            f'    <edge source="n{u}" target="n{v}"><data key="colour">{cg.colouring[(u, v)]}</data></edge>'
        )
    lines += ["  </graph>", "</graphml>"]
    return "\n".join(lines) + "\n"


EXPORTERS = {"dot": to_dot, "graphml": to_graphml, "json": dump_constructed}
