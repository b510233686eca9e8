"""Isomorph-free generation of graphs by canonical augmentation.

A graph on ``n`` vertices is produced from a graph on ``n - 1`` vertices by
adding one vertex with a chosen neighborhood. The child is kept only when the
new vertex lies in the orbit of the child's *canonical deletion vertex*, and
siblings from one parent are deduplicated. Each isomorphism class is then
visited exactly once.

The deletion vertex is chosen among the vertices of maximum degree, refined by
a cheap invariant, and finally by the canonical labeling with that vertex
individualized. Because the new vertex must have maximum degree, only
neighborhoods at least as large as the parent's maximum degree are tried.

Hereditary constraints (freeness from a list of patterns) prune the tree: an
F-free graph only has F-free parents.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd
from typing import Callable, Iterator, Sequence

from .canon import canonical_labeling
from .counting import contains_through
from .graph import Graph, bits
from .patterns import Pattern

MAX_ENUMERATION = 10


class EnumerationError(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    def __init__(self, message: str, nodes: int, elapsed: float):
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None
    deterministic: bool = True

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


class _Meter:
    def __init__(self, budget: SearchBudget | None):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExhausted("node budget exhausted", self.nodes, self.elapsed())
        if b.max_seconds is not None and self.nodes % 256 == 0 and self.elapsed() > b.max_seconds:
            raise BudgetExhausted("time budget exhausted", self.nodes, self.elapsed())

    def elapsed(self) -> float:
        return time.monotonic() - self.start


# ------------------------------------------------------------ augmentation


def _vertex_invariant(adj: Sequence[int], deg: Sequence[int], v: int) -> tuple:
    a = adj[v]
    nd = sorted((deg[u] for u in bits(a)), reverse=True)
    tri = sum((adj[u] & a).bit_count() for u in bits(a))
    return (tuple(nd), tri)


def _individualized_cert(g: Graph, v: int) -> tuple[int, ...]:
    colors = [1] * g.n
    colors[v] = 0
    return canonical_labeling(g, colors)[1]


def _accept(child: Graph, new: int) -> tuple[int, ...] | None:
    """Key for sibling deduplication if ``new`` is a canonical deletion vertex, else None."""
    adj = child.adj
    deg = [m.bit_count() for m in adj]
    top = deg[new]
    cands = [v for v in range(child.n) if deg[v] == top]
    if len(cands) > 1:
        inv = {v: _vertex_invariant(adj, deg, v) for v in cands}
        best = max(inv.values())
        if inv[new] != best:
            return None
        cands = [v for v in cands if inv[v] == best]
    mine = _individualized_cert(child, new)
    for v in cands:
        if v != new and _individualized_cert(child, v) > mine:
            return None
    return mine


def _is_pruned(child: Graph, new: int, forbidden: Sequence[Pattern]) -> bool:
    return any(contains_through(child, new, f) for f in forbidden)


def children(parent: Graph, forbidden: Sequence[Pattern] = ()) -> list[Graph]:
    """Canonical children of ``parent``, one per isomorphism class, in a fixed order."""
    n = parent.n
    deg = parent.degrees()
    top = max(deg, default=0)
    out: list[Graph] = []
    seen: set[tuple[int, ...]] = set()
    for d in range(top, n + 1):
        # vertices of parent degree d would reach degree d + 1 > d
        blocked = {v for v in range(n) if deg[v] == d}
        allowed = [v for v in range(n) if v not in blocked]
        for nbrs in combinations(allowed, d):
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            child = parent.add_vertex(mask)
            if forbidden and _is_pruned(child, n, forbidden):
                continue
            key = _accept(child, n)
            if key is None or key in seen:
                continue
            seen.add(key)
            out.append(child)
    return out


def _descend(g: Graph, target: int, forbidden: Sequence[Pattern], meter: _Meter) -> Iterator[Graph]:
    if g.n == target:
        yield g
        return
    for c in children(g, forbidden):
        meter.tick()
        yield from _descend(c, target, forbidden, meter)


def _root(forbidden: Sequence[Pattern]) -> Graph | None:
    g = Graph.empty(1)
    if forbidden and _is_pruned(g, 0, forbidden):
        return None
    return g


def generate(
    n: int,
    forbidden: Sequence[Pattern] = (),
    budget: SearchBudget | None = None,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """Yield one graph per isomorphism class on ``n`` vertices avoiding ``forbidden``."""
    _check_n(n, allow_large)
    if n == 0:
        yield Graph.empty(0)
        return
    root = _root(forbidden)
    if root is None:
        return
    yield from _descend(root, n, forbidden, _Meter(budget))


def _check_n(n: int, allow_large: bool) -> None:
    if n < 0:
        raise EnumerationError("n must be nonnegative")
    if n > MAX_ENUMERATION and not allow_large:
        raise EnumerationError(f"full enumeration is limited to n <= {MAX_ENUMERATION}")


def enumerate_graphs(
    n: int,
    visitor: Callable[[Graph], None] | None = None,
    forbidden: Sequence[Pattern] = (),
    budget: SearchBudget | None = None,
) -> int:
    """Visit one representative per isomorphism class; return the number visited."""
    count = 0
    for g in generate(n, forbidden, budget):
        if visitor is not None:
            visitor(g)
        count += 1
    return count


# ------------------------------------------------------- parallel branches


def branch_roots(n: int, forbidden: Sequence[Pattern], depth: int) -> list[Graph]:
    """All canonical graphs on ``min(depth, n)`` vertices, the roots of independent subtrees."""
    return list(generate(min(depth, n), forbidden, allow_large=True))


def _subtree(args) -> list:
    root, n, forbidden, fn = args
    meter = _Meter(None)
    return [fn(g) for g in _descend(root, n, forbidden, meter)]


def map_classes(
    n: int,
    fn: Callable[[Graph], object],
    forbidden: Sequence[Pattern] = (),
    threads: int = 1,
    split_depth: int = 6,
) -> list:
    """``[fn(g) for g in generate(n, forbidden)]`` with subtrees spread over processes.

    ``fn`` must be picklable. The result order does not depend on ``threads``.
    """
    _check_n(n, False)
    if threads <= 1 or n <= split_depth:
        return [fn(g) for g in generate(n, forbidden)]
    roots = branch_roots(n, forbidden, split_depth)
    jobs = [(r, n, tuple(forbidden), fn) for r in roots]
    out: list = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_subtree, jobs, chunksize=1):
            out.extend(part)
    return out


# ----------------------------------------------------------------- oracles


def _pair_cycles(cycle_type: Sequence[int]) -> int:
    """Cycles of a permutation with the given cycle type acting on unordered pairs."""
    total = 0
    for i, a in enumerate(cycle_type):
        # pairs inside one a-cycle; for even a the a/2 antipodal pairs form one orbit
        total += a // 2
        for b in cycle_type[i + 1:]:
            total += gcd(a, b)
    return total


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def _class_size(cycle_type: Sequence[int]) -> int:
    n = sum(cycle_type)
    denom = 1
    counts: dict[int, int] = {}
    for c in cycle_type:
        counts[c] = counts.get(c, 0) + 1
    for c, m in counts.items():
        denom *= c**m * factorial(m)
    return factorial(n) // denom


def burnside_count(n: int) -> int:
    """Number of unlabeled graphs on ``n`` vertices by orbit counting over ``S_n``."""
    total = Fraction(0)
    for ct in _partitions(n):
        total += _class_size(ct) * 2 ** _pair_cycles(ct)
    total /= factorial(n)
    if total.denominator != 1:
        raise ArithmeticError("orbit count is not an integer")
    return int(total)
