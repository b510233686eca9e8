"""C_k-builders: rooted C_k-saturated graphs that can be glued at their root.

A builder is a pair ``(B, v)`` such that ``B`` is C_k-saturated and so is the
graph made of two copies of ``B`` identified at ``v``. Copies of compatible
builders glued at their roots stay C_k-saturated, which gives saturated graphs
of every order ``1 + m1 (|B1| - 1) + m2 (|B2| - 1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .graph import Graph, bits, from_graph6, identify_vertices, to_graph6
from .patterns import cycle
from .saturation import saturated


class BuilderError(ValueError):
    pass


@dataclass(frozen=True)
class BuilderSpec:
    graph: Graph
    distinguished: int
    k: int

    def __post_init__(self):
        if self.k < 5:
            raise BuilderError("builders are defined for k >= 5")
        if not 0 <= self.distinguished < self.graph.n:
            raise BuilderError("distinguished vertex out of range")

    def to_json(self, verified: bool | None = None) -> str:
        data = {"graph6": to_graph6(self.graph), "distinguished": self.distinguished, "k": self.k}
        if verified is not None:
            data["verified"] = verified
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "BuilderSpec":
        data = json.loads(text)
        return cls(from_graph6(data["graph6"]), int(data["distinguished"]), int(data["k"]))


def verify_builder(g: Graph, v: int, k: int) -> tuple[bool, BuilderSpec | None]:
    """Check that ``g`` is C_k-saturated and stays so when two copies share ``v``."""
    if not 0 <= v < g.n:
        raise BuilderError(f"vertex {v} out of range")
    spec = BuilderSpec(g, v, k)
    target = cycle(k)
    if not saturated(g, target):
        return False, None
    doubled = identify_vertices([(g, v), (g, v)])
    if not saturated(doubled, target):
        return False, None
    return True, spec


def path_length_profile(b: BuilderSpec) -> dict[int, frozenset[int]]:
    """For every vertex ``u != v``, the set of lengths of simple ``u``-``v`` paths."""
    g, v = b.graph, b.distinguished
    adj = g.adj
    found: dict[int, set[int]] = {u: set() for u in range(g.n) if u != v}

    # every simple path starting at v, read backwards, is a path ending at v
    def walk(x: int, used: int, length: int) -> None:
        for y in bits(adj[x] & ~used):
            found[y].add(length + 1)
            walk(y, used | 1 << y, length + 1)

    walk(v, 1 << v, 0)
    return {u: frozenset(s) for u, s in found.items()}


def are_compatible(b1: BuilderSpec, b2: BuilderSpec) -> bool:
    """Every ``u`` in ``B1 - v1`` and ``w`` in ``B2 - v2`` have path lengths summing to ``k - 1``."""
    if b1.k != b2.k:
        return False
    target = b1.k - 1
    p1 = path_length_profile(b1)
    p2 = path_length_profile(b2)
    sums1 = list(p1.values())
    for s2 in p2.values():
        for s1 in sums1:
            if not any(target - a in s2 for a in s1):
                return False
    return True


def glue(b1: BuilderSpec, m1: int, b2: BuilderSpec | None = None, m2: int = 0) -> Graph:
    """``m1`` copies of ``B1`` and ``m2`` copies of ``B2`` identified at their roots.

    The result is re-checked for C_k-saturation; a failure raises BuilderError.
    The shared root is vertex 0 of the returned graph.
    """
    if m1 < 0 or m2 < 0 or m1 + m2 < 1:
        raise BuilderError("need at least one copy")
    if m2 and b2 is None:
        raise BuilderError("m2 > 0 needs a second builder")
    if b2 is not None and m2 and b2.k != b1.k:
        raise BuilderError("builders for different cycle lengths")
    if b2 is not None and m1 and m2 and not are_compatible(b1, b2):
        raise BuilderError("builders are not compatible")
    parts = [(b1.graph, b1.distinguished)] * m1
    if m2:
        parts += [(b2.graph, b2.distinguished)] * m2
    g = identify_vertices(parts)
    if not saturated(g, cycle(b1.k)):
        raise BuilderError(f"glued graph on {g.n} vertices is not C{b1.k}-saturated")
    return g


@dataclass(frozen=True)
class Coverage:
    sizes: frozenset[int]
    threshold: int | None


def size_coverage(a: int, b: int, limit: int | None = None) -> Coverage:
    """Orders ``1 + m1 a + m2 b <= limit`` and the least ``n0`` covering every order up to ``limit``.

    ``a`` and ``b`` are ``|V(B)| - 1`` of the two builders. The threshold is
    reported only when it is certain: the representable set is closed under
    adding ``min(a, b)``, so a run of that many consecutive orders ending at
    ``limit`` proves every larger order is covered too. The default limit is
    ``10 a b``.
    """
    if a < 1 or b < 1:
        raise ValueError("builder sizes must be positive")
    if limit is None:
        limit = 10 * a * b
    reach = [False] * (limit + 1)
    if limit >= 1:
        reach[1] = True
    for x in range(2, limit + 1):
        reach[x] = (x - a >= 1 and reach[x - a]) or (x - b >= 1 and reach[x - b])
    sizes = frozenset(x for x in range(1, limit + 1) if reach[x])
    if gcd(a, b) != 1:
        return Coverage(sizes, None)
    last_gap = max((x for x in range(1, limit + 1) if not reach[x]), default=0)
    run = limit - last_gap
    if run < min(a, b):
        return Coverage(sizes, None)
    return Coverage(sizes, last_gap + 1)
