from __future__ import annotations

import random

import pytest

from krboot.constructions import build_chain, minimal_percolating
from krboot.engine import PercolationTrace, replay, run, run_oracle, step_kr
from krboot.graphs import Graph, cone


def random_instance(rng: random.Random):
    n = rng.randint(2, 8)
    r = rng.choice([3, 4, 5])
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                g.add_edge(u, v)
    return g, r, Graph.complete(n)


def test_step_on_path_adds_both_triangle_closers():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert step_kr(g, 3, Graph.complete(4)) == [(0, 2), (1, 3)]


def test_step_fills_clique_hole_at_once():
    g = Graph.complete(6)
    for u in range(4):
        for v in range(u + 1, 4):
            g.remove_edge(u, v)
    batch = step_kr(g, 4, Graph.complete(6))
    assert batch == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_step_on_sparse_graph_is_empty():
    g = Graph.from_edges(5, [(0, 1)])
    assert step_kr(g, 3, Graph.complete(5)) == []


def test_step_respects_host():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    host = g.copy()
    host.add_edge(0, 2)  # (1, 3) completes a triangle but is not a host edge
    assert step_kr(g, 3, host) == [(0, 2)]


def test_engine_input_validation():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        step_kr(g, 2, Graph.complete(3))
    with pytest.raises(ValueError):
        step_kr(g, 3, Graph.complete(4))
    with pytest.raises(ValueError):
        run(Graph.complete(3), 3, g)  # start not inside host
    with pytest.raises(ValueError):
        run(g, 3, Graph.complete(3), max_steps=-1)


def test_run_path_trace():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    t = run(g, 3, Graph.complete(4))
    assert t.steps == [[(0, 2), (1, 3)], [(0, 3)]]
    assert t.running_time == 2
    assert t.percolated and not t.truncated
    assert t.final_edge_count == 6


def test_run_stable_start_takes_zero_steps():
    host = Graph.complete(5)
    t = run(host, 3, host)
    assert t.running_time == 0 and t.percolated and t.steps == []
    empty = run(Graph(5), 4, host)
    assert empty.running_time == 0 and not empty.percolated


def test_run_truncation_flag():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    t = run(g, 3, Graph.complete(4), max_steps=1)
    assert t.truncated and t.running_time == 1
    assert t.steps == [[(0, 2), (1, 3)]]
    t0 = run(g, 3, Graph.complete(4), max_steps=0)
    assert t0.truncated and t0.steps == []
    # a stabilized run is never marked truncated, even at the exact budget
    t2 = run(g, 3, Graph.complete(4), max_steps=2)
    assert not t2.truncated and t2.percolated


def test_minimal_percolating_fills_in_one_step():
    for n, r in [(6, 4), (7, 4), (7, 5), (8, 5)]:
        t = run(minimal_percolating(n, r), r, Graph.complete(n))
        assert t.running_time == 1 and t.percolated


def test_oracle_on_near_complete_graph():
    g = Graph.complete(4)
    g.remove_edge(1, 2)
    t = run_oracle(g, 4, Graph.complete(4))
    assert t.steps == [[(1, 2)]] and t.percolated


def test_oracle_matches_run_on_cycle():
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    host = Graph.complete(5)
    assert run(c5, 3, host).to_json() == run_oracle(c5, 3, host).to_json()


def test_oracle_respects_max_steps():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    t = run_oracle(g, 3, Graph.complete(4), max_steps=1)
    assert t.truncated and t.steps == [[(0, 2), (1, 3)]]


def test_run_equals_oracle_on_random_instances():
    rng = random.Random(2024)
    for _ in range(150):
        g, r, host = random_instance(rng)
        assert run(g, r, host).to_json() == run_oracle(g, r, host).to_json()


def test_incremental_equals_full_scan():
    rng = random.Random(77)
    for _ in range(150):
        g, r, host = random_instance(rng)
        fast = run(g, r, host, incremental=True)
        slow = run(g, r, host, incremental=False)
        assert fast == slow
    c = build_chain(5)
    host = Graph.complete(c.hypergraph.n)
    assert run(c.start, 5, host) == run(c.start, 5, host, incremental=False)


def test_batches_are_new_disjoint_edges():
    rng = random.Random(31337)
    for _ in range(60):
        g, r, host = random_instance(rng)
        t = run(g, r, host)
        seen = set(g.edges())
        for batch in t.steps:
            assert batch == sorted(batch)
            for e in batch:
                assert e not in seen
                seen.add(e)
        assert len(seen) == t.final_edge_count


def test_replay_reconstructs_final_graph():
    rng = random.Random(4)
    for _ in range(40):
        g, r, host = random_instance(rng)
        t = run(g, r, host)
        final = replay(g, t)
        assert final.edge_count() == t.final_edge_count
        assert (final == host) == t.percolated


def test_cone_lifts_process_batch_for_batch():
    rng = random.Random(12)
    for _ in range(40):
        g, r, host = random_instance(rng)
        base = run(g, r, host)
        lifted = run(cone(g), r + 1, Graph.complete(g.n + 1))
        assert lifted.steps == base.steps


def test_trace_json_round_trip():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    t = run(g, 3, Graph.complete(4))
    again = PercolationTrace.from_json(t.to_json())
    assert again == t
    assert again.to_json() == t.to_json()
