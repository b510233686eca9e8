"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own search code: they use
networkx or plain brute force over vertex tuples, so agreement is evidence.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from satlab.canon import is_isomorphic
from satlab.constructions import book_join, ehm_join, ws
from satlab.counting import copies
from satlab.graph import Graph
from satlab.patterns import clique

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def brute_embeddings(g: Graph, h: Graph) -> int:
    count = 0
    for image in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(image[a], image[b]) for a, b in h.edges()):
            count += 1
    return count


def nx_has_cycle_through_edge(G: nx.Graph, u: int, v: int, k: int) -> bool:
    """Is there a simple u-v path with k-1 edges (so u v closes a k-cycle)?"""
    return any(len(p) == k for p in nx.all_simple_paths(G, u, v, cutoff=k - 1))


def nx_cycle_saturated(g: Graph, k: int) -> bool:
    G = to_nx(g)
    if any(len(c) == k for c in nx.simple_cycles(G, length_bound=k)):
        return False
    return all(nx_has_cycle_through_edge(G, u, v, k) for u, v in nx.non_edges(G))


def nx_clique_saturated(g: Graph, s: int) -> bool:
    G = to_nx(g)
    if any(len(c) >= s for c in nx.find_cliques(G)):
        return False
    for u, v in nx.non_edges(G):
        G.add_edge(u, v)
        ok = any(len(c) >= s for c in nx.find_cliques(G))
        G.remove_edge(u, v)
        if not ok:
            return False
    return True


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _single_clique_vertex(g: Graph, s: int) -> bool:
    return any(copies(g.induced(g.neighbors(v)), clique(s - 2)) == 1 for v in range(g.n))


def structure_violations(graphs: list[Graph], s: int) -> list[tuple[str, str]]:
    """Counterexamples to the minimum-degree structure facts for K_s-saturated graphs.

    Each graph is classified by minimum degree and compared with the explicit
    families by isomorphism; returns (reason, graph6) pairs.
    """
    from satlab.graph import to_graph6

    bad = []
    for g in graphs:
        n = g.n
        if n <= s:
            continue
        delta = min(g.degrees())
        if delta <= s - 2 and not is_isomorphic(g, ehm_join(n, s)):
            bad.append(("low degree but not the join", to_graph6(g)))
        if delta >= s - 1 and n >= 2 * s - 2 and _single_clique_vertex(g, s):
            bad.append(("vertex with a single K_(s-2) in its neighborhood", to_graph6(g)))
        if delta == s - 1:
            m = n - s + 1
            options = [book_join(n, s)] + [
                ws(s, a, b, m - a - b) for a in range(1, m) for b in range(1, m - a)
            ]
            if not any(is_isomorphic(g, h) for h in options):
                bad.append(("degree s-1 but no listed family", to_graph6(g)))
    return bad


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (len(k), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE
