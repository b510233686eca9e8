"""The brute-force ``sat(n, H, F)`` oracle and searches for H-free saturated graphs and builders."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations

from . import constructions as cons
from .builders import BuilderSpec, are_compatible, verify_builder
from .canon import canonical_graph, same_orbit
from .counting import copies
from .enumerate import BudgetExhausted, SearchBudget, _Meter, generate, map_classes
from .graph import Graph, clone_vertex, to_graph6
from .patterns import Pattern, cycle
from .saturation import creates_through, is_free, saturated


@dataclass
class OracleResult:
    n: int
    pattern_h: str
    pattern_f: str
    minimum: int | None
    witnesses: list[str]
    saturated_count: int
    elapsed: float
    status: str = "exact"  # or "partial" when the budget ran out
    nodes: int = 0

    def to_json(self) -> str:
        return json.dumps(asdict(self))


class _SatEval:
    """Picklable per-graph step of the oracle: H-count if F-saturated, else None."""

    def __init__(self, h: Pattern, f: Pattern):
        self.h = h
        self.f = f

    def __call__(self, g: Graph):
        if not saturated(g, self.f):
            return None
        return copies(g, self.h), to_graph6(canonical_graph(g))


def sat_oracle(
    n: int,
    h: Pattern,
    f: Pattern,
    budget: SearchBudget | None = None,
    threads: int = 1,
) -> OracleResult:
    """Exact minimum number of copies of ``h`` over ``n``-vertex ``f``-saturated graphs.

    Only ``f``-free graphs are generated; saturation is tested at full size.
    When the budget runs out the result carries status ``partial`` and its
    minimum is only an upper bound.
    """
    start = time.monotonic()
    step = _SatEval(h, f)
    results: list = []
    status = "exact"
    nodes = 0
    if threads > 1 and budget is None:
        results = map_classes(n, step, [f], threads=threads)
        nodes = len(results)
    else:
        meter_budget = budget or SearchBudget()
        try:
            for g in generate(n, [f], meter_budget):
                nodes += 1
                results.append(step(g))
                if meter_budget.max_seconds is not None and time.monotonic() - start > meter_budget.max_seconds:
                    raise BudgetExhausted("time budget exhausted", nodes, time.monotonic() - start)
        except BudgetExhausted:
            status = "partial"
    hits = [r for r in results if r is not None]
    minimum = min((c for c, _ in hits), default=None)
    witnesses = sorted(w for c, w in hits if c == minimum)
    return OracleResult(
        n=n,
        pattern_h=str(h),
        pattern_f=str(f),
        minimum=minimum,
        witnesses=witnesses,
        saturated_count=len(hits),
        elapsed=time.monotonic() - start,
        status=status,
        nodes=nodes,
    )


def saturated_graphs(n: int, f: Pattern, threads: int = 1) -> list[Graph]:
    """All ``f``-saturated graphs on ``n`` vertices, one per isomorphism class."""
    flags = map_classes(n, _SatFlag(f), [f], threads=threads)
    return [g for g, ok in flags if ok]


class _SatFlag:
    def __init__(self, f: Pattern):
        self.f = f

    def __call__(self, g: Graph):
        return g, saturated(g, self.f)


# ------------------------------------------------- H-free saturated graphs


@dataclass
class SearchOutcome:
    graph: Graph | None
    status: str  # "found" | "none" (proved by exhaustion) | "exhausted" (budget)
    method: str
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)


def _clone_to(g: Graph, v: int, n: int) -> Graph | None:
    if g.n > n:
        return None
    while g.n < n:
        g = clone_vertex(g, v)
    return g


def construction_candidates(n: int, f: Pattern) -> list[tuple[str, Graph]]:
    """Known saturated constructions of order ``n`` that may fit the target ``f``."""
    out: list[tuple[str, Graph]] = []
    for name, make in cons.NAMED_GRAPHS.items():
        g = make()
        if g.n == n:
            out.append((name, g))
    if f.kind == "cycle":
        k = f.a
        if k % 2 == 1:
            for a in range(n // 2, 0, -1):
                if n - a >= 1:
                    out.append((f"CompleteBipartite({a},{n - a})", cons.complete_bipartite(a, n - a)))
        elif k % 4 == 0 and k >= 8:
            q = k // 4
            g = _clone_to(cons.g4k(q), cons.g_y_vertices(q)[0], n)
            if g is not None:
                out.append((f"G4k({q}) with cloned Y vertices", g))
        elif k % 4 == 2 and k >= 6:
            q = (k - 2) // 4
            g = _clone_to(cons.g4k2(q), cons.g_y_vertices(q)[0], n)
            if g is not None:
                out.append((f"G4k2({q}) with cloned Y vertices", g))
        if n >= k - 1:
            out.append((f"ApexCliqueFan({n},{k})", cons.apex_clique_fan(n, k)))
        if k % 2 == 0 and n >= k - 2 and k >= 4:
            out.append((f"TwoApexClique({n},{k // 2})", cons.two_apex_clique(n, k // 2)))
    if f.kind == "clique" and f.a >= 3 and n >= f.a:
        s = f.a
        out.append((f"EhmJoin({n},{s})", cons.ehm_join(n, s)))
        out.append((f"BookJoin({n},{s})", cons.book_join(n, s)))
    if n >= 1:
        out.append((f"StarMatching({n})", cons.star_matching(n)))
    if f.graph.num_edges() and n >= f.num_vertices:
        out.append((f"KaszonyiTuza({n},{f})", cons.kaszonyi_tuza(n, f.graph)))
    return out


def _random_maximal(
    n: int,
    f: Pattern,
    h: Pattern,
    max_h: int,
    rng: random.Random,
    meter: _Meter,
) -> Graph:
    """Add edges in random order while the graph stays ``f``-free with at most ``max_h`` copies of ``h``."""
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    g = Graph.empty(n)
    h_now = 0
    for u, v in pairs:
        meter.tick()
        if creates_through(g, u, v, f) is not None:
            continue
        g2 = g.add_edge(u, v)
        if max_h == 0:
            if creates_through(g, u, v, h) is not None:
                continue
        else:
            c = copies(g2, h)
            if c > max_h:
                continue
            h_now = c
        g = g2
    return g


def find_h_free_saturated(
    n: int,
    h: Pattern,
    f: Pattern,
    budget: SearchBudget | None = None,
    exhaustive_limit: int = 10,
    seed: int = 0,
) -> SearchOutcome:
    """An ``n``-vertex ``f``-saturated graph with no copy of ``h``.

    Tries known constructions first, then (for ``n <= exhaustive_limit``) an
    exhaustive search over ``{h, f}``-free graphs, which proves nonexistence
    when it finishes empty. Larger ``n`` fall back to seeded random maximal
    ``{h, f}``-free graphs until the budget runs out.
    """
    start = time.monotonic()
    meter = _Meter(budget)
    for name, g in construction_candidates(n, f):
        if is_free(g, h) and saturated(g, f):
            return SearchOutcome(g, "found", f"construction: {name}", time.monotonic() - start)
    try:
        if n <= exhaustive_limit:
            for g in generate(n, [h, f], budget):
                meter.tick()
                if saturated(g, f):
                    return SearchOutcome(g, "found", "exhaustive", time.monotonic() - start)
            return SearchOutcome(None, "none", "exhaustive", time.monotonic() - start)
        if budget is None or (budget.max_nodes is None and budget.max_seconds is None):
            return SearchOutcome(None, "exhausted", "random", time.monotonic() - start,
                                 ["random search needs a node or time budget"])
        rng = random.Random(seed)
        while True:
            g = _random_maximal(n, f, h, 0, rng, meter)
            if saturated(g, f):
                return SearchOutcome(g, "found", "random", time.monotonic() - start)
    except BudgetExhausted:
        return SearchOutcome(None, "exhausted", "budget", time.monotonic() - start)


# ----------------------------------------------------------------- builders


@dataclass
class BuilderSearchResult:
    builders: list[BuilderSpec]
    # (i, j, compatible, sizes coprime)
    pairs: list[tuple[int, int, bool, bool]]
    status: str  # "complete" | "exhausted"
    attempts: int = 0


def _vertex_orbit_reps(g: Graph) -> list[int]:
    reps: list[int] = []
    for v in range(g.n):
        if not any(g.degree(r) == g.degree(v) and same_orbit(g, r, v) for r in reps):
            reps.append(v)
    return reps


def search_builder(
    k: int,
    h_forbidden: Pattern,
    n_range: range,
    budget: SearchBudget,
    max_h_copies: int = 0,
    seed: int = 0,
    want: int = 1,
) -> BuilderSearchResult:
    """Random search for C_k-builders with at most ``max_h_copies`` copies of ``h_forbidden``.

    Candidate graphs are random maximal graphs that are C_k-free and respect the
    ``h`` limit. A candidate that is C_k-saturated is tried as a builder at one
    vertex per orbit. Found builders are pairwise non-isomorphic as rooted graphs.
    """
    if k < 5:
        raise ValueError("builders are defined for k >= 5")
    sizes = list(n_range)
    found: list[BuilderSpec] = []
    keys: set[bytes] = set()
    status = "complete"
    attempts = 0
    if sizes:
        rng = random.Random(seed)
        meter = _Meter(budget)
        target = cycle(k)
        try:
            while len(found) < want:
                n = sizes[attempts % len(sizes)]
                attempts += 1
                g = _random_maximal(n, target, h_forbidden, max_h_copies, rng, meter)
                if not saturated(g, target):
                    continue
                for v in _vertex_orbit_reps(g):
                    ok, spec = verify_builder(g, v, k)
                    if not ok:
                        continue
                    key = _rooted_key(g, v)
                    if key in keys:
                        continue
                    keys.add(key)
                    found.append(spec)
                    if len(found) >= want:
                        break
        except BudgetExhausted:
            status = "exhausted"
    pairs = []
    for i in range(len(found)):
        for j in range(i, len(found)):
            a, b = found[i], found[j]
            coprime = _gcd(a.graph.n - 1, b.graph.n - 1) == 1
            pairs.append((i, j, are_compatible(a, b), coprime))
    return BuilderSearchResult(found, pairs, status, attempts)


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _rooted_key(g: Graph, v: int) -> bytes:
    from .canon import canonical_labeling

    colors = [1] * g.n
    colors[v] = 0
    order, _, _ = canonical_labeling(g, colors)
    return to_graph6(g.relabel(order)).encode()
