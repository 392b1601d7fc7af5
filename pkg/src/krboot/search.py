"""Longest-running start graphs inside a complete host, by exhaustion or sampling.

The exhaustive scan walks every subset of K_n's edges in binary-counter order
(lexicographic edge list), so ties resolve to the first witness encountered.
Each reported maximum is re-run through the trace engine as an independent
confirmation before being returned.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import engine
from .graphs import Graph


@dataclass
class MaxTimeResult:
    n: int
    r: int
    max_time: int
    witness_start: Graph
    graphs_examined: int
    exhaustive: bool


def _edge_list(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _has_clique_rows(adj: list[int], mask: int, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return mask != 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        rest = m & adj[v]
        if rest.bit_count() >= k - 1 and _has_clique_rows(adj, rest, k - 1):
            return True
    return False


def _running_time_complete_host(adj: list[int], n: int, r: int) -> int:
    """Steps to stabilization for the K_r process inside host K_n.

    Mutates ``adj``.  Lean counterpart of ``engine.run`` used in the inner
    search loop; witnesses are re-validated with the real engine afterwards.
    """
    k = r - 2
    full = (1 << n) - 1
    t = 0
    while True:
        batch = []
        for u in range(n - 1):
            cand = (full & ~adj[u]) >> (u + 1)
            base = u + 1
            while cand:
                low = cand & -cand
                v = base + low.bit_length() - 1
                cand ^= low
                common = adj[u] & adj[v]
                if common and _has_clique_rows(adj, common, k):
                    batch.append((u, v))
        if not batch:
            return t
        for u, v in batch:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        t += 1


def _adj_from_mask(mask: int, edges: list[tuple[int, int]], n: int) -> list[int]:
    adj = [0] * n
    m = mask
    while m:
        low = m & -m
        u, v = edges[low.bit_length() - 1]
        m ^= low
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _confirm(result: MaxTimeResult) -> MaxTimeResult:
    trace = engine.run(result.witness_start, result.r, Graph.complete(result.n))
    if trace.truncated or trace.running_time != result.max_time:
        raise AssertionError(
            f"engine replay got {trace.running_time}, search said {result.max_time}"
        )
    return result


def max_running_time(n: int, r: int) -> MaxTimeResult:
    """Exact maximum running time over all 2^C(n,2) start graphs; n <= 7."""
    if not 1 <= n <= 7:
        raise ValueError("exhaustive search is limited to 1 <= n <= 7")
    if r < 3:
        raise ValueError("need r >= 3")
    edges = _edge_list(n)
    best_time = -1
    best_mask = 0
    for mask in range(1 << len(edges)):
        t = _running_time_complete_host(_adj_from_mask(mask, edges, n), n, r)
        if t > best_time:
            best_time = t
            best_mask = mask
    witness = Graph(n)
    witness.adj = _adj_from_mask(best_mask, edges, n)
    return _confirm(
        MaxTimeResult(n, r, best_time, witness, 1 << len(edges), exhaustive=True)
    )


def max_running_time_sampled(n: int, r: int, samples: int, seed: int) -> MaxTimeResult:
    """Seeded lower-bound probe: best of ``samples`` uniform random starts."""
    if n < 1:
        raise ValueError("need n >= 1")
    if r < 3:
        raise ValueError("need r >= 3")
    if samples < 1:
        raise ValueError("need at least one sample")
    edges = _edge_list(n)
    rng = random.Random(seed)
    best_time = -1
    best_mask = 0
    for _ in range(samples):
        mask = rng.getrandbits(len(edges)) if edges else 0
        t = _running_time_complete_host(_adj_from_mask(mask, edges, n), n, r)
        if t > best_time:
            best_time = t
            best_mask = mask
    witness = Graph(n)
    witness.adj = _adj_from_mask(best_mask, edges, n)
    return _confirm(MaxTimeResult(n, r, best_time, witness, samples, exhaustive=False))
