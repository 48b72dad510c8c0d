import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlcg.graphcore import (
    INFINITY,
    Graph,
    Multigraph,
    Verdict,
    canonical_cycle,
    check_no_lonely_colour,
    chromatic_number,
    colour_multiplicity_violation,
    cycle_edges,
    enumerate_cycles,
    find_bridges,
    find_vertex_colouring,
    girth,
    is_proper_edge_colouring,
    is_proper_vertex_colouring,
    lonely_colour,
    optimal_colouring,
    shortest_cycle,
)

import oracles


def random_graph(rng, max_n=10, max_m=8, min_n=0):
    n = rng.randint(min_n, max_n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(0, min(max_m, len(pairs)))
    return Graph.from_edges(n, rng.sample(pairs, m))


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


PETERSEN = Graph.from_edges(
    10,
    [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=10)) if pairs else []
    return Graph.from_edges(n, chosen)


# ---------------------------------------------------------------- graph type


def test_graph_normalises_and_rejects():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.sorted_edges == ((0, 2), (1, 2))
    assert g.degree(2) == 2 and g.has_edge(0, 2) and not g.has_edge(0, 1)
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


# ---------------------------------------------------------------- bridges


def test_bridges_parallel_edges_are_not_bridges():
    m = Multigraph(3, ((0, 1), (0, 1), (1, 2)))
    assert find_bridges(m) == {2}


def test_bridges_path_and_cycle():
    assert find_bridges(Multigraph(4, ((0, 1), (1, 2), (2, 3)))) == {0, 1, 2}
    assert find_bridges(Multigraph(3, ((0, 1), (1, 2), (2, 0)))) == set()


def test_bridges_first_vertex_offset():
    m = Multigraph(3, ((1, 2), (1, 2), (1, 3)), first_vertex=1)
    assert find_bridges(m) == {2}
    assert m.components() == 1 and m.components(skip_edge=2) == 2


def test_bridges_match_delete_and_count_oracle():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 6)
        edges = tuple((rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 8)))
        edges = tuple((u, v) for u, v in edges if u != v)
        assert find_bridges(Multigraph(n, edges)) == oracles.naive_bridges(n, edges), edges


# ---------------------------------------------------------------- girth and cycles


def test_girth_known_values():
    assert girth(Graph(4)) == INFINITY == math.inf
    assert girth(complete(4)) == 3
    assert girth(cycle_graph(9)) == 9
    assert girth(PETERSEN) == 5


def test_shortest_cycle_is_a_cycle_of_girth_length():
    cyc = shortest_cycle(PETERSEN)
    assert len(cyc) == 5
    assert all(PETERSEN.has_edge(u, v) for u, v in cycle_edges(cyc))
    assert shortest_cycle(Graph.from_edges(3, [(0, 1), (1, 2)])) is None


def test_girth_matches_edge_subset_oracle():
    rng = random.Random(5)
    for _ in range(1000):
        g = random_graph(rng)
        assert girth(g) == oracles.brute_girth(g.vertex_count, g.sorted_edges), g


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_complete_graph_cycle_count(n):
    # sum over j of C(n, j) (j - 1)! / 2
    assert len(enumerate_cycles(complete(n))) == oracles.complete_graph_cycle_count(n)


def test_cycles_match_edge_subset_oracle():
    rng = random.Random(8)
    for _ in range(200):
        g = random_graph(rng, max_n=8, max_m=11)
        mine = {frozenset(cycle_edges(c)) for c in enumerate_cycles(g)}
        assert mine == set(oracles.cycle_edge_sets(g.vertex_count, g.sorted_edges))


def test_petersen_cycle_count():
    # edge-subset oracle over all 2^15 subsets
    assert len(enumerate_cycles(PETERSEN)) == len(oracles.cycle_edge_sets(10, PETERSEN.sorted_edges)) == 57


def test_cycle_enumeration_cap():
    res = enumerate_cycles(complete(6), max_count=10)
    assert res.truncated and len(res) == 10
    full = enumerate_cycles(complete(6))
    assert not full.truncated


def test_canonical_cycle():
    assert canonical_cycle((3, 1, 2)) == canonical_cycle((2, 1, 3)) == canonical_cycle((1, 2, 3))


# ---------------------------------------------------------------- vertex colouring


def test_chromatic_known_values():
    with pytest.raises(ValueError):
        chromatic_number(Graph(0))
    assert chromatic_number(Graph(3)) == 1
    assert chromatic_number(complete(4)) == 4
    assert chromatic_number(cycle_graph(9)) == 3
    assert chromatic_number(cycle_graph(8)) == 2


def test_petersen_is_three_chromatic():
    assert not oracles.has_colouring(10, PETERSEN.sorted_edges, 2)
    k, colours = optimal_colouring(PETERSEN)
    assert k == 3 and is_proper_vertex_colouring(PETERSEN, colours)


def test_chromatic_matches_exhaustive_oracle():
    rng = random.Random(3)
    for _ in range(1000):
        g = random_graph(rng, min_n=1)
        assert chromatic_number(g) == oracles.brute_chromatic(g.vertex_count, g.sorted_edges), g


def test_find_vertex_colouring_none_below_chi():
    assert find_vertex_colouring(complete(5), 4) is None
    colours = find_vertex_colouring(complete(5), 5)
    assert is_proper_vertex_colouring(complete(5), colours)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_optimal_colouring_witness_is_proper(g):
    k, colours = optimal_colouring(g)
    assert is_proper_vertex_colouring(g, colours)
    assert len(set(colours)) == k


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_girth_is_monotone_under_edge_deletion(g):
    for e in g.sorted_edges[:3]:
        smaller = Graph(g.vertex_count, g.edges - {e})
        assert girth(smaller) >= girth(g)
        assert chromatic_number(smaller) <= chromatic_number(g)


# ---------------------------------------------------------------- edge colourings


def test_proper_edge_colouring_witness():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert is_proper_edge_colouring(g, {(0, 1): 0, (1, 2): 1}) == (True, None)
    ok, bad = is_proper_edge_colouring(g, {(0, 1): 0, (2, 1): 0})
    assert not ok and bad == (1, 0)


def test_lonely_colour_on_cycle():
    cyc = (0, 1, 2, 3)
    assert lonely_colour(cyc, {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1}) is None
    assert lonely_colour(cyc, {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 2}) == 1


def test_check_no_lonely_colour_outcomes():
    c4 = cycle_graph(4)
    good = {(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1}
    rep = check_no_lonely_colour(c4, good)
    assert rep.status is Verdict.PASS and rep.cycles_checked == 1
    bad = {**good, (0, 3): 2}
    rep = check_no_lonely_colour(c4, bad)
    assert rep.status is Verdict.FAIL and rep.colour in (1, 2)
    assert lonely_colour(rep.cycle, bad) is not None
    rep = check_no_lonely_colour(complete(5), {e: i for i, e in enumerate(complete(5).sorted_edges)}, max_cycles=3)
    assert rep.status is not Verdict.PASS


def test_multiplicity_violation():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert colour_multiplicity_violation(star, {(0, 1): 0, (0, 2): 0, (0, 3): 1}) is None
    assert colour_multiplicity_violation(star, {(0, 1): 0, (0, 2): 0, (0, 3): 0}) == (0, 0)
