"""K_r graph bootstrap process: repeatedly add every host edge whose insertion
creates a new K_r, one simultaneous batch per step, until nothing changes.

An absent edge (u, v) is eligible exactly when the common neighbourhood of u
and v in the current graph contains an (r-2)-clique: that clique plus u, v and
the new edge is a fresh K_r.  ``run`` is the production engine; ``run_oracle``
re-decides every step by counting complete K_r subgraphs from scratch and
shares no step logic with it.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .graphs import Graph, has_clique


@dataclass
class PercolationTrace:
    """Full record of one bootstrap run.

    ``steps[t]`` is the batch of edges added at step t+1, each batch sorted by
    (u, v).  ``running_time`` equals the number of non-empty batches; when
    ``truncated`` is True the run hit ``max_steps`` first and the true running
    time is at least that value.  ``percolated`` means the final graph equals
    the host.
    """

    steps: list[list[tuple[int, int]]] = field(default_factory=list)
    running_time: int = 0
    percolated: bool = False
    truncated: bool = False
    final_edge_count: int = 0

    def to_json(self) -> str:
        obj = {
            "running_time": self.running_time,
            "percolated": self.percolated,
            "truncated": self.truncated,
            "final_edge_count": self.final_edge_count,
            "steps": [[[u, v] for u, v in batch] for batch in self.steps],
        }
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text: str) -> "PercolationTrace":
        obj = json.loads(text)
        steps = [[(int(u), int(v)) for u, v in batch] for batch in obj["steps"]]
        return cls(
            steps=steps,
            running_time=int(obj["running_time"]),
            percolated=bool(obj["percolated"]),
            truncated=bool(obj["truncated"]),
            final_edge_count=int(obj["final_edge_count"]),
        )


def _check_inputs(current: Graph, r: int, host: Graph) -> None:
    if r < 3:
        raise ValueError(f"process order r must be at least 3, got {r}")
    if current.n != host.n:
        raise ValueError("current and host must share the vertex set")
    if not current.is_subgraph_of(host):
        raise ValueError("current graph has an edge outside the host")


def step_kr(current: Graph, r: int, host: Graph) -> list[tuple[int, int]]:
    """One synchronous step: all host edges whose insertion creates a new K_r."""
    _check_inputs(current, r, host)
    return _step_full(current, r, host)


def _step_full(current: Graph, r: int, host: Graph) -> list[tuple[int, int]]:
    k = r - 2
    n = current.n
    adj = current.adj
    batch: list[tuple[int, int]] = []
    for u in range(n):
        cand = (host.adj[u] & ~adj[u]) >> (u + 1)
        base = u + 1
        while cand:
            low = cand & -cand
            v = base + low.bit_length() - 1
            cand ^= low
            common = adj[u] & adj[v]
            if common and has_clique(current, common, k):
                batch.append((u, v))
    return batch


def _step_candidates(
    current: Graph, r: int, pairs: list[tuple[int, int]]
) -> list[tuple[int, int]]:
    k = r - 2
    adj = current.adj
    batch = []
    for u, v in pairs:
        common = adj[u] & adj[v]
        if common and has_clique(current, common, k):
            batch.append((u, v))
    return batch


def _next_candidates(
    current: Graph, host: Graph, batch: list[tuple[int, int]]
) -> list[tuple[int, int]] | None:
    """Pairs that could become eligible after ``batch`` was just applied.

    Every edge newly eligible at the next step completes a K_r through at
    least one batch edge (u, v), so its endpoints lie in the common
    neighbourhood of u and v, or one of them is u or v itself.  Returns None
    when enumerating those pairs would cost more than a plain full scan.
    """
    adj = current.adj
    # quadratic in common-neighbourhood size; bail out to a full scan if that
    # exceeds the number of host edges still missing
    full_cost = host.edge_count() - current.edge_count()
    est = 0
    for u, v in batch:
        c = (adj[u] & adj[v]).bit_count()
        est += c * (c - 1) // 2 + adj[u].bit_count() + adj[v].bit_count()
        if est > 2 * full_cost:
            return None
    seen: set[tuple[int, int]] = set()
    for u, v in batch:
        common = adj[u] & adj[v]
        members = []
        m = common
        while m:
            low = m & -m
            members.append(low.bit_length() - 1)
            m ^= low
        for i, a in enumerate(members):
            arow = adj[a]
            for b in members[i + 1 :]:
                if not (arow >> b) & 1 and (host.adj[a] >> b) & 1:
                    seen.add((a, b))
        for x, y in ((u, v), (v, u)):
            m = adj[y]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if w != x and not (adj[x] >> w) & 1 and (host.adj[x] >> w) & 1:
                    seen.add((x, w) if x < w else (w, x))
    return sorted(seen)


def run(
    start: Graph,
    r: int,
    host: Graph,
    max_steps: int | None = None,
    incremental: bool = True,
) -> PercolationTrace:
    """Run the K_r bootstrap process from ``start`` inside ``host``.

    ``max_steps`` defaults to C(n, 2) + 1, which no process can exhaust, so by
    default the trace is never truncated.  With ``incremental`` the engine
    rechecks only pairs near the last batch; output is identical to the full
    per-step scan either way.
    """
    _check_inputs(start, r, host)
    if max_steps is None:
        max_steps = start.n * (start.n - 1) // 2 + 1
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")

    current = start.copy()
    steps: list[list[tuple[int, int]]] = []
    pending: list[tuple[int, int]] | None = None  # None means full scan
    truncated = False
    while True:
        if pending is None:
            batch = _step_full(current, r, host)
        else:
            batch = _step_candidates(current, r, pending)
        if not batch:
            break  # stabilized; never truncated, even at the exact budget
        if len(steps) >= max_steps:
            truncated = True
            break
        for u, v in batch:
            current.add_edge(u, v)
        steps.append(batch)
        pending = _next_candidates(current, host, batch) if incremental else None

    return PercolationTrace(
        steps=steps,
        running_time=len(steps),
        percolated=current == host,
        truncated=truncated,
        final_edge_count=current.edge_count(),
    )


def replay(start: Graph, trace: PercolationTrace) -> Graph:
    """Apply a trace's batches to a copy of ``start`` and return the result."""
    g = start.copy()
    for batch in trace.steps:
        for u, v in batch:
            g.add_edge(u, v)
    return g


def run_oracle(
    start: Graph, r: int, host: Graph, max_steps: int | None = None
) -> PercolationTrace:
    """Reference engine: decide each edge by counting K_r copies from scratch.

    Exponential in n; intended for cross-checking ``run`` on small instances
    (n <= 12 or so).  Produces traces that compare equal to ``run``'s.
    """
    _check_inputs(start, r, host)
    n = start.n
    if max_steps is None:
        max_steps = n * (n - 1) // 2 + 1
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")

    edge_set = {(u, v) for u, v in start.edges()}
    host_edges = sorted(host.edges())

    def count_kr(edges: set[tuple[int, int]]) -> int:
        total = 0
        for sub in itertools.combinations(range(n), r):
            if all(p in edges for p in itertools.combinations(sub, 2)):
                total += 1
        return total

    steps: list[list[tuple[int, int]]] = []
    truncated = False
    while True:
        base = count_kr(edge_set)
        batch = []
        for e in host_edges:
            if e in edge_set:
                continue
            if count_kr(edge_set | {e}) > base:
                batch.append(e)
        if not batch:
            break  # stabilized; never truncated, even at the exact budget
        if len(steps) >= max_steps:
            truncated = True
            break
        edge_set.update(batch)
        steps.append(batch)

    return PercolationTrace(
        steps=steps,
        running_time=len(steps),
        percolated=len(edge_set) == len(host_edges),
        truncated=truncated,
        final_edge_count=len(edge_set),
    )
