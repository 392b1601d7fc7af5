"""Dense graphs with bitmask adjacency rows, plus uniform hypergraphs.

Vertex ids are dense 0-based integers.  Each adjacency row is a Python int
used as a bit vector, so neighbourhood intersections are single ``&`` ops.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def pair(u: int, v: int) -> tuple[int, int]:
    """Normalize an unordered vertex pair to (min, max)."""
    if u == v:
        raise ValueError(f"pair endpoints must be distinct, got ({u}, {v})")
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set-bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph; no loops, no multi-edges.

    ``adj[u]`` is a bitmask of the neighbours of ``u``.  The matrix is kept
    symmetric by construction and loops are rejected.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj: list[int] = [0] * n

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        g = cls(n)
        full = (1 << n) - 1
        for u in range(n):
            g.adj[u] = full ^ (1 << u)
        return g

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ValueError(f"vertex {u} out of range [0, {self.n})")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"loop at vertex {u} rejected")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self.adj[u].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            while row:
                low = row & -row
                yield (u, u + low.bit_length())
                row ^= low

    def common_neighbors(self, u: int, v: int) -> int:
        """Bitmask of vertices adjacent to both ``u`` and ``v``."""
        return self.adj[u] & self.adj[v]

    def is_subgraph_of(self, other: "Graph") -> bool:
        if self.n != other.n:
            return False
        return all(self.adj[u] & ~other.adj[u] == 0 for u in range(self.n))

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g.adj = self.adj.copy()
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    __hash__ = None  # mutable; keep unhashable like list

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


class UniformHypergraph:
    """r-uniform hypergraph with a significant edge ordering.

    Edges are stored as sorted tuples of distinct vertex ids, in the order
    given at construction.  ``labels`` optionally maps a vertex id to a
    (block class, index) tag such as ("X", 3).
    """

    __slots__ = ("n", "r", "edges", "labels")

    def __init__(
        self,
        n: int,
        r: int,
        edges: Iterable[Sequence[int]],
        labels: dict[int, tuple[str, int]] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if r < 2:
            raise ValueError("uniformity must be at least 2")
        self.n = n
        self.r = r
        self.edges: list[tuple[int, ...]] = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"edge {e!r} is not a set of {r} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"edge {e!r} has vertex out of range [0, {n})")
            self.edges.append(t)
        self.labels: dict[int, tuple[str, int]] = dict(labels) if labels else {}
        for v in self.labels:
            if not 0 <= v < n:
                raise ValueError(f"label on unknown vertex {v}")

    def edge_count(self) -> int:
        return len(self.edges)

    def edge_masks(self) -> list[int]:
        """Each edge as a vertex bitmask, in edge order."""
        out = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << v
            out.append(m)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniformHypergraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.r == other.r
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __repr__(self) -> str:
        return f"UniformHypergraph(n={self.n}, r={self.r}, m={len(self.edges)})"


def two_skeleton(h: UniformHypergraph) -> Graph:
    """Graph on the same vertex set whose edges are all pairs inside hyperedges."""
    g = Graph(h.n)
    for e in h.edges:
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                g.add_edge(e[i], e[j])
    return g


def cone(g: Graph) -> Graph:
    """Add one new vertex (id ``g.n``) adjacent to every existing vertex."""
    out = Graph(g.n + 1)
    apex_bit = 1 << g.n
    for u in range(g.n):
        out.adj[u] = g.adj[u] | apex_bit
    out.adj[g.n] = (1 << g.n) - 1
    return out


def cliques_in_subset(g: Graph, candidates: int, k: int) -> list[tuple[int, ...]]:
    """All k-cliques of ``g`` inside the vertex bitmask ``candidates``.

    Returned as ascending tuples in lexicographic order.  k = 0 yields the
    single empty clique.
    """
    if k < 0:
        raise ValueError("clique size must be non-negative")
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(mask: int, need: int) -> None:
        if need == 0:
            out.append(tuple(prefix))
            return
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            mask ^= low
            # only bits above v remain in mask, so order stays lexicographic
            rest = mask & g.adj[v]
            if rest.bit_count() >= need - 1:
                prefix.append(v)
                extend(rest, need - 1)
                prefix.pop()

    extend(candidates, k)
    return out


def has_clique(g: Graph, candidates: int, k: int) -> bool:
    """Early-exit test: does ``candidates`` contain a k-clique of ``g``?"""
    if k <= 0:
        return True
    if k == 1:
        return candidates != 0
    mask = candidates
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        mask ^= low
        rest = mask & g.adj[v]
        if rest.bit_count() >= k - 1 and has_clique(g, rest, k - 1):
            return True
    return False
