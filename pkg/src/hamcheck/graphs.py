"""Bitset-backed simple graphs and bipartite graphs.

Adjacency is stored as one Python int per vertex (bit j of ``adj[i]`` set
iff ij is an edge), which keeps complement/join/enumeration loops cheap
and makes every value immutable and hashable.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

import numpy as np

MAX_VERTICES = 512


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph(NamedTuple):
    n: int
    adj: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def degree_sequence(self) -> tuple[int, ...]:
        """Vertex degrees sorted nondecreasing."""
        return tuple(sorted(self.degrees()))

    def min_degree(self) -> int:
        return min(self.degrees())

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u in range(self.n):
            for v in bits(self.adj[u]):
                a[u, v] = 1.0
        return a

    def signless_laplacian(self) -> np.ndarray:
        a = self.adjacency_matrix()
        return a + np.diag(a.sum(axis=1))


class BipartiteGraph(NamedTuple):
    p: int
    q: int
    rows: tuple[int, ...]  # p rows of q-bit cross-adjacency

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def degrees_x(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def degrees_y(self) -> list[int]:
        cols = [0] * self.q
        for row in self.rows:
            for y in bits(row):
                cols[y] += 1
        return cols

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees_x() + self.degrees_y()))

    def min_degree(self) -> int:
        return min(self.degrees_x() + self.degrees_y())

    def to_graph(self) -> "Graph":
        """View as a Graph on p+q vertices, side X first."""
        n = self.p + self.q
        adj = [0] * n
        for x, row in enumerate(self.rows):
            adj[x] = row << self.p
            for y in bits(row):
                adj[self.p + y] |= 1 << x
        return Graph(n, tuple(adj))


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are errors."""
    _check_n(n)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    _check_n(n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _check_n(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    _check_n(n)
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} with the hub at the highest index."""
    _check_n(n)
    return from_edges(n, [(v, n - 1) for v in range(n - 1)])


def complete_bipartite(p: int, q: int) -> BipartiteGraph:
    _check_n(p + q)
    full = (1 << q) - 1
    return BipartiteGraph(p, q, (full,) * p)


def bipartite_from_edges(p: int, q: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    _check_n(p + q)
    rows = [0] * p
    for x, y in edges:
        if not (0 <= x < p and 0 <= y < q):
            raise ValueError(f"cross edge ({x},{y}) out of range for ({p},{q})")
        rows[x] |= 1 << y
    return BipartiteGraph(p, q, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((row ^ full) & ~(1 << v) for v, row in enumerate(g.adj)))


def quasi_complement(b: BipartiteGraph) -> BipartiteGraph:
    """Flip exactly the cross edges, keeping the bipartition."""
    full = (1 << b.q) - 1
    return BipartiteGraph(b.p, b.q, tuple(row ^ full for row in b.rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_n(g.n + h.n)
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    _check_n(g.n + h.n)
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj]
    adj += [(row << g.n) | g_mask for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Relabel vertices: old vertex v becomes perm[v]."""
    adj = [0] * g.n
    for u in range(g.n):
        row = 0
        for v in bits(g.adj[u]):
            row |= 1 << perm[v]
        adj[perm[u]] = row
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    adj = [0] * len(vertices)
    for v, i in index.items():
        for w in bits(g.adj[v]):
            if w in index:
                adj[i] |= 1 << index[w]
    return Graph(len(vertices), tuple(adj))


def component_mask(g: Graph, start: int, allowed: int | None = None) -> int:
    if allowed is None:
        allowed = (1 << g.n) - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= g.adj[v]
        frontier = grown & allowed & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g, start, remaining)
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return component_mask(g, 0) == (1 << g.n) - 1


def two_coloring(g: Graph) -> int | None:
    """A proper 2-coloring as a mask of one color class, or None.

    Per component, the vertex of lowest index goes into the returned side.
    """
    color = [-1] * g.n
    left = 0
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    for v in range(g.n):
        if color[v] == 0:
            left |= 1 << v
    return left


def bipartite_from_graph(g: Graph, left_mask: int) -> BipartiteGraph:
    """Split a graph along an explicit bipartition; intra-side edges are errors."""
    left = list(bits(left_mask))
    right = [v for v in range(g.n) if not left_mask >> v & 1]
    right_index = {v: j for j, v in enumerate(right)}
    rows = [0] * len(left)
    for i, v in enumerate(left):
        for w in bits(g.adj[v]):
            if left_mask >> w & 1:
                raise ValueError(f"edge ({v},{w}) lies inside side X")
            rows[i] |= 1 << right_index[w]
    return BipartiteGraph(len(left), len(right), tuple(rows))


def is_complete_bipartite_plus_isolated(g: Graph) -> bool:
    """True iff g is K_{p,q} together with any number of isolated vertices."""
    support = [v for v in range(g.n) if g.adj[v]]
    if not support:
        return False
    core = induced_subgraph(g, support)
    left_mask = two_coloring(core)
    if left_mask is None:
        return False
    right_mask = ((1 << core.n) - 1) ^ left_mask
    for v in bits(left_mask):
        if core.adj[v] != right_mask:
            return False
    return True
