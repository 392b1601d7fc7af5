from __future__ import annotations

import itertools
import random

import pytest

from krboot.graphs import (
    Graph,
    UniformHypergraph,
    cliques_in_subset,
    cone,
    has_clique,
    pair,
    two_skeleton,
)


def random_graph(rng: random.Random, n: int) -> Graph:
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                g.add_edge(u, v)
    return g


def test_pair_normalizes():
    assert pair(3, 1) == (1, 3)
    assert pair(0, 2) == (0, 2)
    with pytest.raises(ValueError):
        pair(4, 4)


def test_graph_basics():
    g = Graph(4)
    assert g.edge_count() == 0
    g.add_edge(2, 0)
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert g.degree(0) == 1 and g.degree(2) == 1 and g.degree(1) == 0
    g.add_edge(0, 2)  # re-adding is a no-op
    assert g.edge_count() == 1
    g.remove_edge(0, 2)
    assert g.edge_count() == 0
    with pytest.raises(ValueError):
        g.remove_edge(0, 2)
    with pytest.raises(ValueError):
        g.add_edge(1, 1)
    with pytest.raises(ValueError):
        g.add_edge(0, 4)


def test_graph_edges_sorted_and_copy_independent():
    g = Graph.from_edges(5, [(3, 4), (0, 2), (1, 2), (0, 1)])
    assert list(g.edges()) == [(0, 1), (0, 2), (1, 2), (3, 4)]
    h = g.copy()
    h.add_edge(2, 3)
    assert g != h and not g.has_edge(2, 3)
    assert g == Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])


def test_complete_graph():
    k5 = Graph.complete(5)
    assert k5.edge_count() == 10
    assert all(k5.degree(u) == 4 for u in range(5))
    assert Graph.complete(0).edge_count() == 0
    assert Graph.complete(1).edge_count() == 0


def test_adjacency_stays_symmetric_and_loopless():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 12))
        for u in range(g.n):
            assert not (g.adj[u] >> u) & 1
            for v in range(g.n):
                assert ((g.adj[u] >> v) & 1) == ((g.adj[v] >> u) & 1)


def test_subgraph_check():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert g.is_subgraph_of(Graph.complete(4))
    assert not Graph.complete(4).is_subgraph_of(g)
    assert not g.is_subgraph_of(Graph.complete(5))


def test_common_neighbors():
    g = Graph.from_edges(5, [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4)])
    assert g.common_neighbors(0, 1) == (1 << 2) | (1 << 3)


# ---------------------------------------------------------------- hypergraph


def test_hypergraph_stores_sorted_edges_in_order():
    h = UniformHypergraph(6, 3, [(5, 0, 2), (1, 3, 2)])
    assert h.edges == [(0, 2, 5), (1, 2, 3)]
    assert h.edge_count() == 2
    assert h.edge_masks() == [0b100101, 0b001110]


def test_hypergraph_rejects_bad_edges():
    with pytest.raises(ValueError):
        UniformHypergraph(5, 3, [(0, 1)])
    with pytest.raises(ValueError):
        UniformHypergraph(5, 3, [(0, 1, 1)])
    with pytest.raises(ValueError):
        UniformHypergraph(5, 3, [(0, 1, 5)])
    with pytest.raises(ValueError):
        UniformHypergraph(5, 1, [])
    with pytest.raises(ValueError):
        UniformHypergraph(5, 3, [(0, 1, 2)], labels={7: ("X", 0)})


def test_two_skeleton_single_edge_is_clique():
    h = UniformHypergraph(5, 5, [(0, 1, 2, 3, 4)])
    g = two_skeleton(h)
    assert g.edge_count() == 10
    assert g == Graph.complete(5)


def test_two_skeleton_overlap_counts_shared_pair_once():
    h = UniformHypergraph(8, 5, [(0, 1, 2, 3, 4), (3, 4, 5, 6, 7)])
    assert two_skeleton(h).edge_count() == 19


def test_cone_examples():
    assert cone(Graph.complete(3)) == Graph.complete(4)
    single = cone(Graph(0))
    assert single.n == 1 and single.edge_count() == 0
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert sorted(cone(path).edges()) == [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_cone_adds_exactly_n_edges():
    rng = random.Random(5)
    for _ in range(10):
        g = random_graph(rng, rng.randint(0, 9))
        c = cone(g)
        assert c.n == g.n + 1
        assert c.edge_count() == g.edge_count() + g.n
        assert c.degree(g.n) == g.n


# ---------------------------------------------------------------- cliques


def test_cliques_k4():
    k4 = Graph.complete(4)
    assert cliques_in_subset(k4, 0b1111, 3) == [
        (0, 1, 2),
        (0, 1, 3),
        (0, 2, 3),
        (1, 2, 3),
    ]
    assert cliques_in_subset(k4, 0b1111, 0) == [()]


def test_cliques_respect_candidate_mask():
    k4 = Graph.complete(4)
    assert cliques_in_subset(k4, 0b0111, 3) == [(0, 1, 2)]
    assert cliques_in_subset(k4, 0b0101, 2) == [(0, 2)]


def test_cliques_on_path():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert cliques_in_subset(path, 0b111, 2) == [(0, 1), (1, 2)]
    assert cliques_in_subset(path, 0b111, 3) == []


def brute_cliques(g: Graph, candidates: int, k: int) -> list[tuple[int, ...]]:
    verts = [v for v in range(g.n) if (candidates >> v) & 1]
    return [
        sub
        for sub in itertools.combinations(verts, k)
        if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2))
    ]


def test_cliques_match_brute_force_on_random_graphs():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(1, 9)
        g = random_graph(rng, n)
        mask = rng.getrandbits(n)
        for k in range(0, 5):
            expect = brute_cliques(g, mask, k)
            assert cliques_in_subset(g, mask, k) == expect
            assert has_clique(g, mask, k) == bool(expect or k == 0)
