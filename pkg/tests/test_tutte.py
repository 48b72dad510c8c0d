import networkx as nx
import pytest

from nlcg.graphcore import (
    Graph,
    Verdict,
    check_no_lonely_colour,
    chromatic_number,
    cycle_edges,
    enumerate_cycles,
    girth,
    lonely_colour,
)
from nlcg.hypercore import ClosedWalk, Hypergraph
from nlcg.tranquil import LabellingFamily
from nlcg.tutte import (
    CHECKS,
    InducedWalk,
    MalformedCycleError,
    NotTranquilError,
    StandardSupplier,
    SupplierFailure,
    UniformityMismatch,
    WithinCopy,
    assemble,
    base_graph,
    build,
    cycle_hypergraph,
    extend,
    fixed_supplier,
    induced_walk,
    leaf_graph,
    singleton_hypergraph,
    verify_constructed,
)

import oracles
from conftest import triples_bad_labelling, triples_hypergraph, triples_labelling


def to_nx(cg):
    g = nx.Graph()
    g.add_nodes_from(range(cg.vertex_count))
    g.add_edges_from(cg.graph.sorted_edges)
    return g


@pytest.fixture(scope="module")
def g33():
    return build(3, 3)


# ---------------------------------------------------------------- small levels


def test_base_graph():
    cg = base_graph(5)
    assert cg.vertex_count == 1 and cg.colouring == {} and cg.level == 1
    with pytest.raises(ValueError):
        base_graph(0)
    with pytest.raises(ValueError):
        build(3, 0)


def test_level_two_is_an_edge():
    cg = build(3, 2)
    assert cg.vertex_count == 2 and cg.graph.sorted_edges == ((0, 1),)
    assert girth(cg.graph) == float("inf") and chromatic_number(cg.graph) == 2


def test_level_three_is_nine_cycle(g33):
    assert (g33.vertex_count, len(g33.graph.edges)) == (9, 9)
    assert nx.is_isomorphic(to_nx(g33), nx.cycle_graph(9))
    colours = sorted(g33.colouring.values())
    # one inherited colour on the three copies of K_2, one fresh colour per triangle edge
    assert colours == [0, 0, 0, 1, 1, 2, 2, 3, 3]
    assert g33.colour_count == 4
    assert [c.level for c in g33.chain()] == [1, 2, 3]


def test_level_three_against_oracles(g33):
    n, edges = g33.vertex_count, g33.graph.sorted_edges
    assert oracles.brute_girth(n, edges) == girth(g33.graph) == 9
    assert oracles.brute_chromatic(n, edges) == chromatic_number(g33.graph) == 3


def test_copy_bookkeeping(g33):
    assert g33.T == (0, 1, 2) and len(g33.copies) == 3
    for j, copy in enumerate(g33.copies):
        assert all(g33.copy_of(v) == j for v in copy)
        assert [g33.local_id(v) for v in copy] == [0, 1]
    assert g33.copy_of(0) is None
    assert g33.matching_colour(2) == 3


# ---------------------------------------------------------------- extend


def test_extend_checks_uniformity():
    h, lam = cycle_hypergraph(3)
    with pytest.raises(UniformityMismatch):
        extend(base_graph(3), h, lam)


def test_extend_rejects_non_tranquil_family():
    path = leaf_graph(Graph.from_edges(3, [(0, 1), (1, 2)]), {(0, 1): 0, (1, 2): 1})
    with pytest.raises(NotTranquilError):
        extend(path, triples_hypergraph(), triples_bad_labelling())
    cg = extend(path, triples_hypergraph(), triples_labelling())
    assert cg.vertex_count == 7 + 3 * 3


def test_vertex_count_arithmetic():
    child = build(3, 2)
    for m in (3, 5, 7):
        h, lam = cycle_hypergraph(m)
        cg = extend(child, h, lam)
        assert cg.vertex_count == m + m * 2
        assert len(cg.graph.edges) == m * 1 + m * 2
        assert cg.colour_count == child.colour_count + m


# ---------------------------------------------------------------- suppliers


def test_standard_supplier_choices():
    sup = StandardSupplier()
    h, _ = sup(2, 1, 9)
    assert h == singleton_hypergraph()[0]
    h, _ = sup(3, 2, 3)
    assert h.vertex_count == 3
    h, _ = sup(3, 2, 13)  # needs Berge girth ceil(13 / 3) = 5
    assert h.vertex_count == 5


def test_supplier_failure_is_reported():
    with pytest.raises(SupplierFailure) as info:
        build(3, 4, StandardSupplier(vertex_cap=600, seeds=(0,)))
    assert info.value.level == 4
    with pytest.raises(SupplierFailure):
        build(3, 3, fixed_supplier({2: singleton_hypergraph()}))


def test_supplied_hypergraph_must_meet_girth():
    # the triangle has Berge girth 3 < ceil(12 / 3)
    with pytest.raises(SupplierFailure):
        build(12, 3, fixed_supplier({2: singleton_hypergraph(), 3: cycle_hypergraph(3)}))


def test_build_with_fixed_supplier():
    cg = build(15, 3, fixed_supplier({2: singleton_hypergraph(), 3: cycle_hypergraph(5)}))
    assert nx.is_isomorphic(to_nx(cg), nx.cycle_graph(15))


# ---------------------------------------------------------------- induced walks


def test_induced_walk_of_nine_cycle(g33):
    cycle = enumerate_cycles(g33.graph).cycles[0]
    iw = induced_walk(g33, cycle)
    assert isinstance(iw, InducedWalk)
    assert sorted(iw.walk.vertices) == [0, 1, 2] and sorted(iw.walk.hyperedges) == [0, 1, 2]
    assert len(iw.segments) == 3


def test_within_copy_cycle():
    tri = leaf_graph(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), {(0, 1): 0, (1, 2): 1, (0, 2): 2})
    h = Hypergraph(3, 3, ((0, 1, 2),))
    cg = assemble(tri, h, LabellingFamily.sorted_order(h))
    assert induced_walk(cg, (3, 4, 5)) == WithinCopy(0)


def test_malformed_cycles(g33):
    with pytest.raises(MalformedCycleError):
        induced_walk(g33, (0, 1, 2))
    with pytest.raises(MalformedCycleError):
        induced_walk(g33, (0, 3))


def six_step_fixture():
    """C_4 child; 4-uniform H on T = a..f plus 6..13; F3 is entered twice."""
    a, b, c, d, e, f = range(6)
    c4 = leaf_graph(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1})
    orders = [
        (a, b, 6, 7),  # F1
        (b, c, 8, 9),  # F2
        (c, d, f, a),  # F3: c, d on local 0, 1 and f, a on local 2, 3
        (d, e, 10, 11),  # F4
        (e, f, 12, 13),  # F5
    ]
    h = Hypergraph(14, 4, tuple(tuple(sorted(o)) for o in orders))
    lam = LabellingFamily({j: {v: i + 1 for i, v in enumerate(o)} for j, o in enumerate(orders)})
    return assemble(c4, h, lam)


def test_six_step_walk_is_traced():
    cg = six_step_fixture()
    a, b, c, d, e, f = range(6)
    copy = [list(cg.copies[j]) for j in range(5)]
    cycle = [a] + copy[0][:2] + [b] + copy[1][:2] + [c] + copy[2][:2] + [d]
    cycle += copy[3][:2] + [e] + copy[4][:2] + [f] + copy[2][2:]
    iw = induced_walk(cg, cycle)
    # aF1bF2cF3dF4eF5fF3a
    assert iw.walk == ClosedWalk((a, b, c, d, e, f), (0, 1, 2, 3, 4, 2))
    assert [s.copy for s in iw.segments] == [0, 1, 2, 3, 4, 2]


def test_matching_colours_appear_evenly_on_cycles():
    cg = six_step_fixture()
    matching = {cg.matching_colour(j) for j in range(cg.hypergraph.edge_count)}
    cycles = enumerate_cycles(cg.graph, max_count=20000)
    assert len(cycles) > 0
    for cyc in cycles:
        colours = [cg.colouring[e] for e in cycle_edges(cyc)]
        for c in matching:
            assert colours.count(c) % 2 == 0


def test_cycle_must_use_matching_edges():
    cg = six_step_fixture()
    a, b = 0, 1
    copy = cg.copies[0]
    # a is matched to the vertex labelled 1 in F1's copy, not the one labelled 2
    with pytest.raises(MalformedCycleError):
        induced_walk(cg, [a, copy[1], copy[0], b])


# ---------------------------------------------------------------- verification


def test_verify_level_three(g33):
    report = verify_constructed(g33)
    assert report.passed and report.status is Verdict.PASS
    assert list(report.checks) == list(CHECKS)
    assert report["girth"].value == 9 and report["chromatic_number"].value == 3
    assert report["no_lonely_colour"].value == 1
    body = report.as_dict()
    assert body["status"] == "PASS"


def test_verify_threads_match_serial(g33):
    assert verify_constructed(g33, workers=3).as_dict() == verify_constructed(g33).as_dict()


def test_verify_subset_and_unknown(g33):
    report = verify_constructed(g33, checks=["girth"])
    assert list(report.checks) == ["girth"]
    with pytest.raises(ValueError):
        verify_constructed(g33, checks=["nope"])


def test_verify_cap_is_inconclusive(g33):
    report = verify_constructed(g33, checks=["no_lonely_colour", "induced_walks"], max_cycles=0)
    assert report.status is Verdict.INCONCLUSIVE


def test_corrupted_colouring_fails_with_replayable_witness(g33):
    edge = next(e for e, c in sorted(g33.colouring.items()) if c == 1)
    bad = dict(g33.colouring)
    bad[edge] = g33.colour_count
    rep = check_no_lonely_colour(g33.graph, bad)
    assert rep.status is Verdict.FAIL
    assert lonely_colour(rep.cycle, bad) is not None
    assert rep.colour in (1, g33.colour_count)


def test_non_tranquil_construction_fails_walk_check():
    path = leaf_graph(Graph.from_edges(3, [(0, 1), (1, 2)]), {(0, 1): 0, (1, 2): 1})
    cg = assemble(path, triples_hypergraph(), triples_bad_labelling())
    report = verify_constructed(cg, checks=["induced_walks", "no_lonely_colour"])
    walks = report["induced_walks"]
    assert walks.status is Verdict.FAIL
    assert sorted(walks.witness["bridge_labels"]) == [1, 3]
    assert report["no_lonely_colour"].status is Verdict.FAIL
