import networkx as nx
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from connected_turan.canon import (
    canonical_form,
    canonical_labelling,
    certificate,
    is_isomorphic,
    refine,
    root_partition,
    same_orbit,
)
from connected_turan.graph import Graph, complete_graph, cycle_graph, edge_count, empty_graph, path_graph
from connected_turan.constructions import almost_regular, complete_bipartite, f3, g_family
from oracles import random_graph
from test_graph_core import graphs


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _shuffle(g: Graph, rng) -> Graph:
    return g.relabel([int(x) for x in rng.permutation(g.n)])


def test_certificate_invariant_under_relabelling(rng):
    for _ in range(2000):
        n = int(rng.integers(1, 10))
        g = random_graph(rng, n, float(rng.random()))
        assert certificate(_shuffle(g, rng)) == certificate(g)


def test_symmetric_hosts(rng):
    # highly regular graphs stress the individualisation search
    for g in (cycle_graph(9), complete_bipartite(4, 4), almost_regular(12, 3), f3(9, 6), g_family(12, 7, 2)):
        for _ in range(20):
            assert certificate(_shuffle(g, rng)) == certificate(g)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_agrees_with_networkx(a, b):
    if a.n != b.n:
        assert not is_isomorphic(a, b)
        return
    assert is_isomorphic(a, b) == nx.is_isomorphic(_nx(a), _nx(b))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_canonical_form_is_isomorphic_copy(g):
    h = canonical_form(g)
    assert nx.is_isomorphic(_nx(g), _nx(h))
    assert h.adj == canonical_labelling(g).certificate


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=8), st.data())
def test_same_orbit_is_sound(g, data):
    lab = canonical_labelling(g)
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    if same_orbit(lab, u, v, g):
        # hanging a pendant vertex on u or on v must give isomorphic graphs
        def pendant(x):
            return Graph.from_edges(g.n + 1, g.edges + [(x, g.n)])

        assert nx.is_isomorphic(_nx(pendant(u)), _nx(pendant(v)))


def test_generators_are_automorphisms(rng):
    for _ in range(200):
        g = random_graph(rng, int(rng.integers(2, 10)), 0.5)
        for gamma in canonical_labelling(g).generators:
            assert g.relabel(list(gamma)) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_refinement_is_equitable(g):
    cells = root_partition(g)
    assert sorted(v for c in cells for v in c) == list(range(g.n))
    masks = [sum(1 << v for v in c) for c in cells]
    for c in cells:
        for m in masks:
            assert len({(g.adj[v] & m).bit_count() for v in c}) == 1


def test_refine_orders_cells_by_degree():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert refine(star.adj, [[0, 1, 2, 3]]) == [[1, 2, 3], [0]]


def test_trivial_cases():
    assert canonical_labelling(empty_graph(0)).certificate == ()
    assert certificate(complete_graph(5)) == complete_graph(5).adj
    assert is_isomorphic(path_graph(4), path_graph(4).relabel([3, 1, 0, 2]))
    assert not is_isomorphic(path_graph(4), Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert edge_count(canonical_form(cycle_graph(6))) == 6
