"""Plain-text readers and writers for graphs, hypergraphs, pair lists,
progression-free sets, and JSON traces.  All formats round-trip losslessly;
malformed input raises ValueError with a line reference.
"""
from __future__ import annotations

import os

from .apsets import ApSet
from .engine import PercolationTrace
from .graphs import Graph, UniformHypergraph


def _fail(path: str | os.PathLike, lineno: int, msg: str) -> ValueError:
    return ValueError(f"{path}:{lineno}: {msg}")


def _int_fields(line: str, count: int, path, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise _fail(path, lineno, f"expected {count} fields, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise _fail(path, lineno, f"non-integer field in {line!r}") from None


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.edge_count()}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_graph(path) -> Graph:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise _fail(path, 1, "empty graph file")
    n, m = _int_fields(lines[0], 2, path, 1)
    if len(lines) != m + 1:
        raise _fail(path, len(lines), f"expected {m} edge lines, got {len(lines) - 1}")
    g = Graph(n)
    prev = (-1, -1)
    for k, line in enumerate(lines[1:], start=2):
        u, v = _int_fields(line, 2, path, k)
        if not u < v:
            raise _fail(path, k, f"edge must be written u < v, got {u} {v}")
        if (u, v) <= prev:
            raise _fail(path, k, "edges must be strictly ascending")
        prev = (u, v)
        g.add_edge(u, v)
    return g


def write_hypergraph(h: UniformHypergraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{h.n} {h.r} {len(h.edges)}\n")
        for e in h.edges:
            fh.write(" ".join(str(v) for v in e) + "\n")
        if h.labels:
            for v in sorted(h.labels):
                cls, idx = h.labels[v]
                fh.write(f"# label {v} {cls} {idx}\n")


def read_hypergraph(path) -> UniformHypergraph:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise _fail(path, 1, "empty hypergraph file")
    n, r, m = _int_fields(lines[0], 3, path, 1)
    if len(lines) < m + 1:
        raise _fail(path, len(lines), f"expected {m} edge lines")
    edges = []
    for k, line in enumerate(lines[1 : m + 1], start=2):
        ids = _int_fields(line, r, path, k)
        if ids != sorted(ids):
            raise _fail(path, k, "edge vertices must be ascending")
        edges.append(ids)
    labels: dict[int, tuple[str, int]] = {}
    for k, line in enumerate(lines[m + 1 :], start=m + 2):
        parts = line.split()
        if len(parts) != 5 or parts[0] != "#" or parts[1] != "label":
            raise _fail(path, k, f"expected '# label <id> <class> <index>', got {line!r}")
        labels[int(parts[2])] = (parts[3], int(parts[4]))
    return UniformHypergraph(n, r, edges, labels)


def write_fpairs(pairs: list[tuple[int, int]], path) -> None:
    with open(path, "w") as fh:
        for u, v in pairs:
            fh.write(f"{u} {v}\n")


def read_fpairs(path) -> list[tuple[int, int]]:
    with open(path) as fh:
        lines = fh.read().splitlines()
    out = []
    for k, line in enumerate(lines, start=1):
        u, v = _int_fields(line, 2, path, k)
        out.append((u, v))
    return out


def write_apset(s: ApSet, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{s.n} {len(s.elements)}\n")
        for e in s.elements:
            fh.write(f"{e}\n")


def read_apset(path) -> ApSet:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise _fail(path, 1, "empty set file")
    n, k = _int_fields(lines[0], 2, path, 1)
    if len(lines) != k + 1:
        raise _fail(path, len(lines), f"expected {k} element lines")
    elems = [_int_fields(line, 1, path, i)[0] for i, line in enumerate(lines[1:], 2)]
    return ApSet(n, tuple(elems))


def write_trace(t: PercolationTrace, path) -> None:
    with open(path, "w") as fh:
        fh.write(t.to_json() + "\n")


def read_trace(path) -> PercolationTrace:
    with open(path) as fh:
        return PercolationTrace.from_json(fh.read())
