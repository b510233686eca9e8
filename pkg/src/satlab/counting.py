"""Counting copies, embeddings and automorphisms of small patterns.

A *copy* of ``H`` is a subgraph (not necessarily induced) isomorphic to ``H``;
``copies = embeddings / |Aut(H)|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import Graph, GraphError, bfs_distances, bits
from .patterns import Pattern


@dataclass(frozen=True)
class CountReport:
    pattern: Pattern
    embeddings: int
    automorphisms: int
    copies: int


# ------------------------------------------------------------------ cliques


def count_cliques(g: Graph, r: int) -> int:
    if r < 0:
        raise ValueError("clique size must be nonnegative")
    if r == 0:
        return 1
    if r == 1:
        return g.n
    adj = g.adj
    # forward neighborhoods: each clique is found once from its smallest vertex
    fwd = [m >> (v + 1) << (v + 1) for v, m in enumerate(adj)]

    def extend(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            if cand.bit_count() < need:
                break
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += extend(cand & fwd[v], need - 1)
        return total

    return sum(extend(fwd[v], r - 1) for v in range(g.n))


def find_clique(g: Graph, r: int, within: int | None = None) -> list[int] | None:
    """First clique of size ``r`` inside the vertex mask ``within`` (lexicographic)."""
    if within is None:
        within = (1 << g.n) - 1
    if r == 0:
        return []
    adj = g.adj

    def grow(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == r:
            return chosen
        while cand:
            if cand.bit_count() < r - len(chosen):
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = grow(chosen + [v], cand & adj[v])
            if found is not None:
                return found
        return None

    return grow([], within)


def count_independent_sets(g: Graph, r: int) -> int:
    """Number of ``r``-subsets of vertices with no internal edge (an induced count)."""
    return count_cliques(g.complement(), r)


def count_independent_triples(g: Graph) -> int:
    return count_independent_sets(g, 3)


# ------------------------------------------------------------------- cycles


def count_cycles(g: Graph, length: int) -> int:
    """Number of cycles of the given length.

    Each cycle is walked once: it starts at its smallest vertex ``s`` and its
    second vertex is smaller than its last, fixing both rotation and direction.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    n = g.n
    adj = g.adj
    total = 0
    for s in range(n):
        higher = ((1 << n) - 1) >> (s + 1) << (s + 1)
        closers = adj[s] & higher
        if closers.bit_count() < 2:
            continue
        for first in bits(closers):
            # last vertex must be a neighbor of s larger than first
            targets = closers >> (first + 1) << (first + 1)
            if not targets:
                continue
            allowed = higher & ~(1 << first)
            total += _count_paths(adj, first, length - 2, allowed, targets)
    return total


def _count_paths(adj, x: int, steps: int, allowed: int, targets: int) -> int:
    """Paths of exactly ``steps`` edges from ``x`` through ``allowed`` ending in ``targets``."""
    if steps == 1:
        return (adj[x] & allowed & targets).bit_count()
    total = 0
    for y in bits(adj[x] & allowed):
        total += _count_paths(adj, y, steps - 1, allowed & ~(1 << y), targets)
    return total


def find_cycle_through(g: Graph, v: int, length: int) -> list[int] | None:
    """Some cycle of the given length containing ``v``, as a vertex list starting at ``v``."""
    adj = g.adj
    for w in bits(adj[v]):
        p = find_path(g, v, w, length - 1, forbid_edge=True)
        if p is not None:
            return p
    return None


def find_path(g: Graph, u: int, v: int, edges: int, forbid_edge: bool = False) -> list[int] | None:
    """First (lexicographic DFS) simple ``u``-``v`` path with exactly ``edges`` edges.

    With ``forbid_edge`` the direct edge ``uv`` may not be the path (only matters
    when ``edges == 1``).
    """
    adj = g.adj
    if u == v or edges < 1:
        return None
    if edges == 1:
        return None if forbid_edge or not adj[u] >> v & 1 else [u, v]
    # distance to v in the whole graph bounds what is reachable with the edges left
    dist = bfs_distances(g, v)
    if dist[u] > edges:
        return None
    path = [u]

    def dfs(x: int, left: int, used: int) -> bool:
        if left == 1:
            return bool(adj[x] >> v & 1)
        for y in bits(adj[x] & ~used):
            if dist[y] > left - 1:
                continue
            path.append(y)
            if dfs(y, left - 1, used | 1 << y):
                return True
            path.pop()
        return False

    if dfs(u, edges, 1 << u | 1 << v):
        path.append(v)
        return path
    return None


# -------------------------------------------------------------- embeddings


def _search_order(h: Graph, placed: int = 0) -> list[int]:
    """Vertex order for embedding search: each next vertex has the most mapped neighbors."""
    order: list[int] = []
    remaining = set(range(h.n)) - set(bits(placed))
    while remaining:
        v = max(sorted(remaining), key=lambda x: ((h.adj[x] & placed).bit_count(), h.degree(x)))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def _embeddings(g: Graph, h: Graph, fixed: dict[int, int] | None = None, first_only: bool = False):
    """Count (or find one of) the injective edge-preserving maps ``V(h) -> V(g)``.

    ``fixed`` pins some pattern vertices to host vertices. Returns the count, or
    with ``first_only`` the first mapping found as a list (or None).
    """
    fixed = fixed or {}
    if h.n > g.n:
        return None if first_only else 0
    order = _search_order(h, sum(1 << v for v in fixed))
    full = (1 << g.n) - 1
    image = [-1] * h.n
    used = 0
    for hv, gv in fixed.items():
        if used >> gv & 1:
            return None if first_only else 0
        image[hv] = gv
        used |= 1 << gv
    for a, b in h.edges():
        if image[a] >= 0 and image[b] >= 0 and not g.adj[image[a]] >> image[b] & 1:
            return None if first_only else 0
    hadj = h.adj
    gadj = g.adj
    gdeg = [m.bit_count() for m in gadj]
    hdeg = [m.bit_count() for m in hadj]
    count = 0

    def rec(i: int) -> bool:
        nonlocal count, used
        if i == len(order):
            count += 1
            return first_only
        hv = order[i]
        cand = full & ~used
        for hu in bits(hadj[hv]):
            if image[hu] >= 0:
                cand &= gadj[image[hu]]
        for gv in bits(cand):
            if gdeg[gv] < hdeg[hv]:
                continue
            image[hv] = gv
            used |= 1 << gv
            if rec(i + 1):
                return True
            used &= ~(1 << gv)
            image[hv] = -1
        return False

    found = rec(0)
    if first_only:
        return list(image) if found else None
    return count


def count_embeddings(g: Graph, h: Graph) -> int:
    if h.n < 1:
        raise GraphError("pattern graph must be nonempty")
    return _embeddings(g, h)


def find_embedding(g: Graph, h: Graph, fixed: dict[int, int] | None = None) -> list[int] | None:
    return _embeddings(g, h, fixed, first_only=True)


def automorphism_count(h: Graph) -> int:
    if h.n < 1:
        raise GraphError("pattern graph must be nonempty")
    return _embeddings(h, h)


# ------------------------------------------------------------------- copies


def _pattern_automorphisms(p: Pattern) -> int:
    from math import factorial

    if p.kind == "clique":
        return factorial(p.a)
    if p.kind == "cycle":
        return 2 * p.a
    if p.kind == "bipartite":
        x = factorial(p.a) * factorial(p.b)
        return 2 * x if p.a == p.b else x
    return automorphism_count(p.graph)


def count_copies(g: Graph, p: Pattern) -> CountReport:
    aut = _pattern_automorphisms(p)
    if p.kind == "clique":
        copies = count_cliques(g, p.a)
    elif p.kind == "cycle":
        copies = count_cycles(g, p.a)
    elif p.kind == "explicit" and p.graph.num_edges() == 0:
        copies = comb(g.n, p.graph.n)
    else:
        emb = count_embeddings(g, p.graph)
        if emb % aut:
            raise ArithmeticError("embedding count not divisible by automorphism count")
        return CountReport(p, emb, aut, emb // aut)
    return CountReport(p, copies * aut, aut, copies)


def copies(g: Graph, p: Pattern) -> int:
    return count_copies(g, p).copies


def rooted_pair_count(h: Graph, h1: int, h2: int, s: int) -> int:
    """Copies of ``h`` in ``K_s`` whose vertices ``h1, h2`` sit on a fixed ordered pair.

    Equals the number of embeddings pinning ``h1 -> 0`` and ``h2 -> 1`` divided by
    the number of automorphisms of ``h`` fixing both ``h1`` and ``h2``.
    """
    if h1 == h2 or not (0 <= h1 < h.n and 0 <= h2 < h.n):
        raise ValueError("h1 and h2 must be distinct vertices of h")
    if h.has_edge(h1, h2):
        raise ValueError("h1 h2 must be a nonedge of h")
    if h.n > s:
        raise ValueError(f"pattern has {h.n} vertices but K_{s} only {s}")
    pinned = _embeddings(Graph.complete(s), h, {h1: 0, h2: 1})
    stabilizer = _embeddings(h, h, {h1: h1, h2: h2})
    return pinned // stabilizer


# ------------------------------------------------------- containment tests


def contains(g: Graph, p: Pattern) -> bool:
    if p.kind == "clique":
        return find_clique(g, p.a) is not None
    if p.kind == "cycle":
        return any(find_cycle_through(g, v, p.a) is not None for v in range(g.n))
    return find_embedding(g, p.graph) is not None


def contains_through(g: Graph, v: int, p: Pattern) -> bool:
    """True iff some copy of ``p`` in ``g`` uses vertex ``v``."""
    if p.kind == "clique":
        if p.a == 1:
            return True
        return find_clique(g, p.a - 1, g.adj[v]) is not None
    if p.kind == "cycle":
        return find_cycle_through(g, v, p.a) is not None
    h = p.graph
    return any(find_embedding(g, h, {x: v}) is not None for x in range(h.n))
