"""Explicit graph families, each with a fixed vertex labeling.

Labelings (vertex indices of the returned graphs):

``ehm_join(n, s)``
    clique ``0..s-3``, independent set ``s-2..n-1``.
``book_join(n, s)``
    ``K_{s-1} - e`` on ``0..s-2`` with the missing edge ``(s-3, s-2)``;
    independent set ``s-1..n-1``.
``ws(s, m1, m3, m4)``
    central clique ``0..s-4``; then ``I1`` (m1 vertices), ``a2``, ``I3`` (m3),
    ``I4`` (m4), ``a5``. The rim is the blown-up 5-cycle ``I1 a2 I3 I4 a5``.
``g4k(k)`` / ``g4k2(k)``
    ``v=0, u1=1, u2=2``, then ``X``, ``Y``, ``A``, ``B`` in that order.
``complete_bipartite(a, b)``
    part ``0..a-1`` and part ``a..a+b-1``.
``friendship_like(m, r)``
    shared vertex ``0``; copy ``i`` of ``K_r`` uses ``1+i(r-1) .. (i+1)(r-1)``.
``apex_clique_fan(n, k)``
    apex ``0``; then ``q`` blocks of ``k-2`` clique vertices and one block of
    ``r`` where ``n = 1 + q(k-2) + r``, ``0 <= r <= k-3``.
``two_apex_clique(n, k)``
    clique ``0..2k-3`` with ``x=0``, ``z=1``; ``y_i`` are ``2k-2..n-1``.
``star_matching(n)``
    center ``0``; matching edges ``(1,2), (3,4), ...``.
``kaszonyi_tuza(n, f)``
    clique ``0..c-1`` with ``c = |V(f)| - alpha(f) - 1``; the rest is ``J``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .graph import Graph, GraphError, MAX_VERTICES, independence_number, join

from .patterns import Pattern, explicit


class ParameterError(ValueError):
    """Family parameters outside their valid range."""


def _check_size(n: int) -> None:
    if n > MAX_VERTICES:
        raise GraphError(f"construction needs {n} vertices; limit is {MAX_VERTICES}")


def ehm_join(n: int, s: int) -> Graph:
    """``K_{s-2} + Kbar_{n-s+2}``, the unique edge-minimum K_s-saturated graph."""
    if s < 3 or n < s - 2:
        raise ParameterError("ehm_join needs s >= 3 and n >= s - 2")
    _check_size(n)
    return join(Graph.complete(s - 2), Graph.empty(n - s + 2))


def book_join(n: int, s: int) -> Graph:
    if s < 3 or n < s:
        raise ParameterError("book_join needs s >= 3 and n >= s")
    _check_size(n)
    core = Graph.complete(s - 1).remove_edge(s - 3, s - 2)
    return join(core, Graph.empty(n - s + 1))


def ws(s: int, m1: int, m3: int, m4: int) -> Graph:
    """``W_s(m1, 1, m3, m4, 1)``: the wheel on a 5-cycle with three rim vertices
    blown up into independent sets and the hub replaced by ``K_{s-3}``."""
    if s < 3 or min(m1, m3, m4) < 1:
        raise ParameterError("ws needs s >= 3 and m1, m3, m4 >= 1")
    c = s - 3
    n = c + m1 + m3 + m4 + 2
    _check_size(n)
    rim = []
    start = c
    for size in (m1, 1, m3, m4, 1):
        rim.append(list(range(start, start + size)))
        start += size
    edges = [(i, j) for i in range(c) for j in range(i + 1, n)]
    for i in range(5):
        for x in rim[i]:
            for y in rim[(i + 1) % 5]:
                edges.append((x, y))
    return Graph.from_edges(n, edges)


def _g_family(k: int, size_a: int, size_b: int) -> Graph:
    v, u1, u2 = 0, 1, 2
    X = list(range(3, 3 + k))
    Y = list(range(3 + k, 3 + 2 * k))
    A = list(range(3 + 2 * k, 3 + 2 * k + size_a))
    B = list(range(3 + 2 * k + size_a, 3 + 2 * k + size_a + size_b))
    n = 3 + 2 * k + size_a + size_b
    _check_size(n)
    edges = [(v, u1), (v, u2)]
    edges += [(u1, x) for x in X]
    edges += [(u2, a) for a in A]
    edges += [(x, y) for x in X for y in Y]
    edges += [(x, a) for x in X for a in A]
    edges += [(a, b) for a in A for b in B]
    return Graph.from_edges(n, edges)


def g4k(k: int) -> Graph:
    """G(4k): triangle-free, C_{4k}-saturated, on 4k + 2 vertices."""
    if k < 2:
        raise ParameterError("G(4k) needs k >= 2")
    return _g_family(k, k, k - 1)


def g4k2(k: int) -> Graph:
    """G(4k+2): triangle-free, C_{4k+2}-saturated, on 4k + 4 vertices."""
    if k < 1:
        raise ParameterError("G(4k+2) needs k >= 1")
    return _g_family(k, k + 1, k)


def g_y_vertices(k: int) -> list[int]:
    """Indices of the ``Y`` vertices in ``g4k(k)`` and ``g4k2(k)``."""
    return list(range(3 + k, 3 + 2 * k))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ParameterError("part sizes must be positive")
    _check_size(a + b)
    return Graph.complete_bipartite(a, b)


def friendship_like(m: int, r: int) -> Graph:
    """``m`` copies of ``K_r`` sharing one vertex."""
    if m < 1 or r < 2:
        raise ParameterError("friendship_like needs m >= 1 and r >= 2")
    n = m * (r - 1) + 1
    _check_size(n)
    edges = []
    for i in range(m):
        block = [0] + list(range(1 + i * (r - 1), 1 + (i + 1) * (r - 1)))
        edges += [(x, y) for j, x in enumerate(block) for y in block[j + 1:]]
    return Graph.from_edges(n, edges)


def apex_clique_fan(n: int, k: int) -> Graph:
    """Apex joined to ``q`` copies of ``K_{k-2}`` and one ``K_r``; longest cycle < k."""
    if k < 3 or n < 1:
        raise ParameterError("apex_clique_fan needs k >= 3 and n >= 1")
    _check_size(n)
    q, r = divmod(n - 1, k - 2)
    blocks = []
    start = 1
    for size in [k - 2] * q + ([r] if r else []):
        blocks.append(list(range(start, start + size)))
        start += size
    edges = []
    for block in blocks:
        full = [0] + block
        edges += [(x, y) for j, x in enumerate(full) for y in full[j + 1:]]
    return Graph.from_edges(n, edges)


def two_apex_clique(n: int, k: int) -> Graph:
    """Clique on ``2k-2`` vertices plus ``n-2k+2`` vertices each joined to ``x`` and ``z``."""
    if k < 2 or n < 2 * k - 2:
        raise ParameterError("two_apex_clique needs k >= 2 and n >= 2k - 2")
    _check_size(n)
    c = 2 * k - 2
    edges = [(i, j) for i in range(c) for j in range(i + 1, c)]
    for y in range(c, n):
        edges += [(0, y), (1, y)]
    return Graph.from_edges(n, edges)


def star_matching(n: int) -> Graph:
    """A dominating vertex with a matching of size ``floor((n-1)/2)`` on its neighbors."""
    if n < 1:
        raise ParameterError("star_matching needs n >= 1")
    _check_size(n)
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1, 2)]
    return Graph.from_edges(n, edges)


def kaszonyi_tuza(n: int, f: Graph) -> Graph:
    """Clique on ``|V(f)| - alpha(f) - 1`` vertices joined to an independent set,
    then edges inside the independent set added greedily in lexicographic order
    whenever they keep the graph ``f``-free."""
    from .saturation import creates_through

    if f.num_edges() == 0:
        raise ParameterError("f must have at least one edge")
    if n < f.n:
        raise ParameterError(f"n must be at least |V(f)| = {f.n}")
    _check_size(n)
    c = f.n - independence_number(f) - 1
    g = join(Graph.complete(c), Graph.empty(n - c))
    target = explicit(f)
    for u in range(c, n):
        for v in range(u + 1, n):
            if creates_through(g, u, v, target) is None:
                g = g.add_edge(u, v)
    return g


# ------------------------------------------------------------- named graphs


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def coxeter() -> Graph:
    """Three 7-cycles with steps 1, 2, 3 and seven vertices each joined to one
    vertex of every cycle. Vertices ``a_i = i``, ``b_i = 7+i``, ``c_i = 14+i``,
    ``d_i = 21+i``."""
    edges = []
    for i in range(7):
        edges.append((i, (i + 1) % 7))
        edges.append((7 + i, 7 + (i + 2) % 7))
        edges.append((14 + i, 14 + (i + 3) % 7))
        edges += [(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]
    return Graph.from_edges(28, edges)


def hoffman_singleton() -> Graph:
    """Robertson's pentagon/pentagram construction. Pentagon ``h`` vertex ``j`` is
    ``5h + j``; pentagram ``i`` vertex ``j`` is ``25 + 5i + j``."""
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, edges)


# Points of the 11-vertex C6-builder drawing, as (x, y) coordinates; index = label.
C6_BUILDER_POINTS = [
    (0, 60), (60, 0), (60, 60), (60, 120), (120, 0), (120, 60),
    (120, 120), (150, 0), (180, 30), (180, 60), (180, 120),
]
C6_BUILDER_EDGES = [
    (0, 2), (0, 3), (1, 2), (1, 4), (2, 6), (2, 3), (2, 5), (4, 5),
    (4, 7), (5, 6), (5, 9), (6, 10), (7, 8), (8, 9), (9, 10),
]
# the vertex drawn at (120, 60)
C6_BUILDER_DISTINGUISHED = 5


def c6_builder11() -> Graph:
    return Graph.from_edges(11, C6_BUILDER_EDGES)


NAMED_GRAPHS = {
    "petersen": petersen,
    "c5": lambda: Graph.cycle(5),
    "coxeter": coxeter,
    "hoffmansingleton": hoffman_singleton,
    "c6builder11": c6_builder11,
}


def named_graph(name: str) -> Graph:
    key = name.lower().replace("-", "").replace("_", "")
    if key not in NAMED_GRAPHS:
        raise ParameterError(f"unknown named graph {name!r}; choose from {sorted(NAMED_GRAPHS)}")
    return NAMED_GRAPHS[key]()


# ------------------------------------------------------------ family table


@dataclass(frozen=True)
class FamilyParams:
    family: str
    params: dict = field(default_factory=dict)


FAMILIES = {
    "EhmJoin": (ehm_join, ("n", "s")),
    "BookJoin": (book_join, ("n", "s")),
    "Ws": (ws, ("s", "m1", "m3", "m4")),
    "G4k": (g4k, ("k",)),
    "G4k2": (g4k2, ("k",)),
    "CompleteBipartite": (complete_bipartite, ("a", "b")),
    "FriendshipLike": (friendship_like, ("m", "r")),
    "ApexCliqueFan": (apex_clique_fan, ("n", "k")),
    "TwoApexClique": (two_apex_clique, ("n", "k")),
    "StarMatching": (star_matching, ("n",)),
    "KaszonyiTuza": (kaszonyi_tuza, ("n", "F")),
}

LABELING = {
    "EhmJoin": "clique 0..s-3; independent set s-2..n-1",
    "BookJoin": "K_{s-1}-e on 0..s-2 missing (s-3,s-2); independent set s-1..n-1",
    "Ws": "hub clique 0..s-4; then I1, a2, I3, I4, a5 around the rim",
    "G4k": "v=0, u1=1, u2=2, X=3..k+2, Y=k+3..2k+2, A (k), B (k-1)",
    "G4k2": "v=0, u1=1, u2=2, X=3..k+2, Y=k+3..2k+2, A (k+1), B (k)",
    "CompleteBipartite": "part 0..a-1, part a..a+b-1",
    "FriendshipLike": "shared vertex 0; copy i on 1+i(r-1)..(i+1)(r-1)",
    "ApexCliqueFan": "apex 0; blocks of k-2 clique vertices, then the remainder block",
    "TwoApexClique": "clique 0..2k-3 with x=0, z=1; y_i = 2k-2..n-1",
    "StarMatching": "center 0; matching (1,2), (3,4), ...",
    "KaszonyiTuza": "clique 0..c-1 (c = |V(F)|-alpha(F)-1); J = c..n-1",
}


def make(fp: FamilyParams) -> Graph:
    if fp.family not in FAMILIES:
        raise ParameterError(f"unknown family {fp.family!r}")
    fn, names = FAMILIES[fp.family]
    missing = [p for p in names if p not in fp.params]
    if missing:
        raise ParameterError(f"{fp.family} needs parameters {missing}")
    args = []
    for p in names:
        val = fp.params[p]
        if p == "F" and isinstance(val, Pattern):
            val = val.graph
        args.append(val)
    return fn(*args)


def ehm_join_edges(n: int, s: int) -> int:
    return (s - 2) * (n - s + 2) + comb(s - 2, 2)
