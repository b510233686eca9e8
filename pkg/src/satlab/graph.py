"""Compact undirected simple graphs on at most 64 vertices.

Each vertex's neighborhood is stored as an integer bitmask, so membership is a
bit test and common neighborhoods are a single ``&``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input or size overflow."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph with vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise GraphError(f"vertex {v} has a neighbor index >= {n}")
            if mask >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(mask):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # internal constructor: skips validation for hot loops
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges()})"

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def nonedges(self) -> list[tuple[int, int]]:
        """Vertex pairs ``(u, v)`` with ``u < v`` that are not adjacent, in lexicographic order."""
        out = []
        full = (1 << self.n) - 1
        for u in range(self.n):
            rest = full & ~self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(rest))
        return out

    def is_complete(self) -> bool:
        return self.num_edges() == self.n * (self.n - 1) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, [full & ~m & ~(1 << v) for v, m in enumerate(self.adj)])

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"cannot add edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, adj)

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, adj)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = [0] * self.n
        for i, v in enumerate(order):
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << pos[u]
            adj[i] = m
        return Graph._trusted(self.n, adj)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``; vertex ``i`` of the result is ``vertices[i]``."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            m = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    m |= 1 << pos[u]
            adj.append(m)
        return Graph._trusted(len(vertices), adj)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def add_vertex(self, neighbors: int) -> "Graph":
        """Append a vertex whose neighborhood is the bitmask ``neighbors``."""
        n = self.n
        if n + 1 > MAX_VERTICES:
            raise GraphError("graph would exceed 64 vertices")
        if neighbors >> n:
            raise GraphError("neighbor mask out of range")
        adj = [m | ((neighbors >> v & 1) << n) for v, m in enumerate(self.adj)]
        adj.append(neighbors)
        return Graph._trusted(n + 1, adj)


# ---------------------------------------------------------------- graph6 I/O


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126)] + [chr(63 + (n >> s & 63)) for s in (12, 6, 0)]
    chunk = 0
    filled = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            chunk = chunk << 1 | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + chunk))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr(63 + (chunk << (6 - filled))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"character {ch!r} outside the graph6 range")
    data = [ord(ch) - 63 for ch in s]
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        raise GraphError("malformed graph6 header")
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 encodes {n} vertices; limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    return Graph._trusted(n, adj)


def read_graph6_lines(text: str) -> list[Graph]:
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


def from_adjacency_text(text: str) -> Graph:
    """Parse ``n`` lines of ``n`` characters from ``{0,1}`` (symmetric, zero diagonal)."""
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    n = len(rows)
    adj = [0] * n
    for i, row in enumerate(rows):
        row = row.replace(" ", "")
        if len(row) != n or set(row) - {"0", "1"}:
            raise GraphError(f"row {i} is not {n} characters of 0/1")
        for j, ch in enumerate(row):
            if ch == "1":
                adj[i] |= 1 << j
    return Graph(n, adj)


def to_adjacency_text(g: Graph) -> str:
    return "\n".join("".join("1" if g.has_edge(i, j) else "0" for j in range(g.n)) for i in range(g.n))


# ---------------------------------------------------------- transformations


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_VERTICES:
        raise GraphError("union would exceed 64 vertices")
    shift = g1.n
    return Graph._trusted(g1.n + g2.n, list(g1.adj) + [m << shift for m in g2.adj])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them.

    ``g1`` occupies vertices ``0..n1-1`` and ``g2`` occupies ``n1..n1+n2-1``.
    """
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_VERTICES:
        raise GraphError("join would exceed 64 vertices")
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    adj = [m | right for m in g1.adj] + [(m << n1) | left for m in g2.adj]
    return Graph._trusted(n1 + n2, adj)


def clone_vertex(g: Graph, v: int) -> Graph:
    """Append a new vertex with the same neighborhood as ``v`` (not adjacent to ``v``)."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return g.add_vertex(g.adj[v])


def identify_vertices(parts: Sequence[tuple[Graph, int]]) -> Graph:
    """Glue graphs at their distinguished vertices.

    The merged vertex is vertex 0 of the result; the remaining vertices of each
    part follow in input order, keeping their relative order.
    """
    if not parts:
        raise GraphError("identify_vertices needs at least one graph")
    total = sum(g.n - 1 for g, _ in parts) + 1
    if total > MAX_VERTICES:
        raise GraphError(f"glued graph would have {total} vertices")
    edges = []
    offset = 1
    for g, d in parts:
        if not 0 <= d < g.n:
            raise GraphError(f"distinguished vertex {d} out of range")
        new = {}
        for u in range(g.n):
            if u == d:
                new[u] = 0
            else:
                new[u] = offset
                offset += 1
        edges.extend((new[a], new[b]) for a, b in g.edges())
    return Graph.from_edges(total, edges)


# ------------------------------------------------------------------ metrics


@dataclass(frozen=True)
class VertexMetrics:
    diameter: float
    girth: float
    min_degree: int
    max_degree: int
    is_regular: bool


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [INF] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> float:
    if g.n <= 1:
        return 0
    best = 0
    for s in range(g.n):
        far = max(bfs_distances(g, s))
        if far == INF:
            return INF
        best = max(best, far)
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle, via one BFS per vertex."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in bits(g.adj[x]):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def metrics(g: Graph) -> VertexMetrics:
    degs = g.degrees() or [0]
    return VertexMetrics(
        diameter=diameter(g),
        girth=girth(g),
        min_degree=min(degs),
        max_degree=max(degs),
        is_regular=min(degs) == max(degs),
    )


def independence_number(g: Graph) -> int:
    """Exact independence number by branch and bound (intended for small graphs)."""
    best = 0

    def grow(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + candidates.bit_count() <= best:
            return
        v = (candidates & -candidates).bit_length() - 1
        grow(size + 1, candidates & ~g.adj[v] & ~(1 << v))
        grow(size, candidates & ~(1 << v))

    grow(0, (1 << g.n) - 1)
    return best
