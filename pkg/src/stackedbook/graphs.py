"""Stacked-book graphs S_m x P_n and generic unweighted graphs with BFS distances.

A stacked-book graph consists of n copies ("pages") of the star S_m whose
corresponding vertices are joined along a path.  Branch 1 of every page is
the star center.  All types here are immutable after construction and safe
for concurrent read access.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


@dataclass(frozen=True, order=True)
class Vertex:
    """A stacked-book vertex: (branch, page), both 1-based. Branch 1 is the center."""

    branch: int
    page: int

    def __str__(self) -> str:
        return f"({self.branch},{self.page})"


@dataclass(frozen=True)
class Block:
    """A pair of star pages half the path apart: pages i and i + n/2."""

    index: int
    low_page: int
    high_page: int


@dataclass(frozen=True)
class StackedBook:
    """The parameter pair (m, n) of S_m x P_n with its derived constants.

    m >= 3 is the star order (center plus m-1 leaves); n >= 2 must be even.
    Odd n is rejected outright, not approximated.
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise ValueError("m and n must be integers")
        if self.m < 3:
            raise ValueError(f"m must be >= 3, got {self.m}")
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.n % 2 != 0:
            raise ValueError(f"n must be even, got {self.n}")

    @property
    def vertex_count(self) -> int:
        return self.m * self.n

    @property
    def diameter(self) -> int:
        return self.n + 1

    @property
    def block_count(self) -> int:
        return self.n // 2

    def vertices(self) -> list[Vertex]:
        """All vertices in index order (page-major, branch-minor)."""
        return [Vertex(k, j) for j in range(1, self.n + 1) for k in range(1, self.m + 1)]

    def vertex_index(self, v: Vertex) -> int:
        """Bijection Vertex -> 0-based index: (page-1)*m + (branch-1)."""
        self.check_vertex(v)
        return (v.page - 1) * self.m + (v.branch - 1)

    def vertex_at(self, index: int) -> Vertex:
        """Inverse of vertex_index."""
        if not 0 <= index < self.vertex_count:
            raise ValueError(f"vertex index {index} out of range for {self}")
        page, branch = divmod(index, self.m)
        return Vertex(branch + 1, page + 1)

    def check_vertex(self, v: Vertex) -> None:
        if not (1 <= v.branch <= self.m and 1 <= v.page <= self.n):
            raise ValueError(f"vertex {v} out of range for G_({self.m},{self.n})")

    def distance(self, u: Vertex, v: Vertex) -> int:
        """Shortest-path distance, closed form.

        |u.page - v.page| plus a branch correction: 0 when the branches
        coincide (the path along that branch), 1 when exactly one endpoint
        is a center (one star edge), 2 otherwise (through two centers).
        """
        self.check_vertex(u)
        self.check_vertex(v)
        hops = abs(u.page - v.page)
        if u.branch == v.branch:
            return hops
        if u.branch == 1 or v.branch == 1:
            return hops + 1
        return hops + 2

    def blocks(self) -> list[Block]:
        """Block decomposition: pages i and i + n/2 for i = 1..n/2, in order."""
        half = self.n // 2
        return [Block(i, i, i + half) for i in range(1, half + 1)]


class GeneralGraph:
    """An undirected simple graph over vertex indices 0..vertex_count-1.

    The edge relation is stored symmetric and deduplicated; self-loops are
    rejected.  Distance queries require a connected graph.
    """

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if not isinstance(vertex_count, int) or vertex_count < 1:
            raise ValueError(f"vertex_count must be a positive integer, got {vertex_count}")
        adjacency: list[set[int]] = [set() for _ in range(vertex_count)]
        for a, b in edges:
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise ValueError(f"edge ({a},{b}) out of range for {vertex_count} vertices")
            if a == b:
                raise ValueError(f"self-loop at vertex {a} not allowed")
            adjacency[a].add(b)
            adjacency[b].add(a)
        self.vertex_count = vertex_count
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adjacency
        )

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of (a, b) with a < b."""
        return [(a, b) for a in range(self.vertex_count) for b in self.adjacency[a] if a < b]

    def bfs_distances(self, source: int) -> list[int]:
        """Exact hop distances from source to every vertex.

        Raises ValueError naming an unreachable vertex when the graph is
        disconnected.
        """
        if not 0 <= source < self.vertex_count:
            raise ValueError(f"source {source} out of range")
        dist = [-1] * self.vertex_count
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        for v, d in enumerate(dist):
            if d < 0:
                raise ValueError(f"graph is disconnected: vertex {v} unreachable from {source}")
        return dist

    def is_connected(self) -> bool:
        try:
            self.bfs_distances(0)
        except ValueError:
            return False
        return True

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs shortest paths by BFS from every source. Requires connectivity."""
        return tuple(tuple(self.bfs_distances(s)) for s in range(self.vertex_count))

    def diameter(self) -> int:
        return max(max(row) for row in self.distance_matrix)

    def __repr__(self) -> str:
        return f"GeneralGraph(vertices={self.vertex_count}, edges={self.edge_count})"


def build_product_graph(book: StackedBook) -> GeneralGraph:
    """Expand a StackedBook into an explicit GeneralGraph.

    Vertex indices follow book.vertex_index: (page-1)*m + (branch-1).
    Edges: (k,j)-(k,j+1) along every branch, and (1,j)-(k,j) within every
    page for k != 1.
    """
    m, n = book.m, book.n
    edges: list[tuple[int, int]] = []
    for j in range(1, n + 1):
        for k in range(2, m + 1):
            edges.append((book.vertex_index(Vertex(1, j)), book.vertex_index(Vertex(k, j))))
    for j in range(1, n):
        for k in range(1, m + 1):
            edges.append((book.vertex_index(Vertex(k, j)), book.vertex_index(Vertex(k, j + 1))))
    return GeneralGraph(book.vertex_count, edges)


def path_graph(n: int) -> GeneralGraph:
    """The path P_n on vertices 0..n-1."""
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got {n}")
    return GeneralGraph(n, [(i, i + 1) for i in range(n - 1)])
