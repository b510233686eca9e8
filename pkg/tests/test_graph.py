import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satlab.graph import (
    Graph,
    GraphError,
    clone_vertex,
    diameter,
    disjoint_union,
    from_adjacency_text,
    from_graph6,
    girth,
    identify_vertices,
    independence_number,
    join,
    metrics,
    read_graph6_lines,
    to_adjacency_text,
    to_graph6,
)

from conftest import to_nx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def test_graph6_known_codes():
    assert to_graph6(Graph.complete(3)) == "Bw"
    assert to_graph6(Graph.empty(1)) == "@"
    star = from_graph6("D?{")
    assert star.n == 5
    assert sorted(star.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_graph6_agrees_with_networkx():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 6), (3, 5), (0, 6), (4, 5)])
    assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == to_graph6(g)


@given(graphs())
def test_graph6_roundtrip(g):
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("n", [62, 63, 64])
def test_graph6_long_header(n):
    g = Graph.cycle(n)
    code = to_graph6(g)
    assert (code[0] == "~") == (n >= 63)
    assert from_graph6(code) == g


@pytest.mark.parametrize(
    "bad",
    ["", "A!", "~??", "Bx", "Bw?", "~?A@" + "?" * 10],
)
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_graph6_rejects_too_many_vertices():
    with pytest.raises(GraphError):
        from_graph6("~?AA" + "?" * 50)


def test_constructor_validation():
    with pytest.raises(GraphError):
        Graph(2, [0b01, 0])  # loop
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])  # not symmetric
    with pytest.raises(GraphError):
        Graph(65, [0] * 65)


def test_adjacency_text_roundtrip():
    g = Graph.cycle(5)
    assert from_adjacency_text(to_adjacency_text(g)) == g
    with pytest.raises(GraphError):
        from_adjacency_text("01\n11")


def test_read_lines_skips_blanks():
    assert len(read_graph6_lines("Bw\n\n@\n")) == 2


def test_join_and_union():
    g = join(Graph.complete(2), Graph.empty(3))
    assert g.num_edges() == 1 + 6
    u = disjoint_union(Graph.cycle(3), Graph.path(2))
    assert u.n == 5 and u.num_edges() == 4


def test_clone_vertex_copies_neighborhood():
    g = clone_vertex(Graph.path(3), 0)
    assert g.neighbors(3) == [1]
    assert not g.has_edge(0, 3)


def test_identify_vertices_order():
    g = identify_vertices([(Graph.path(3), 1), (Graph.path(2), 0)])
    # merged vertex is 0, then 0 and 2 of the first path, then 1 of the second
    assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3)]
    with pytest.raises(GraphError):
        identify_vertices([(Graph.path(3), 5)])


@given(graphs(max_n=9))
@settings(max_examples=60)
def test_metrics_match_networkx(g):
    G = to_nx(g)
    m = metrics(g)
    if g.n == 0:
        return
    if nx.is_connected(G):
        assert m.diameter == (nx.diameter(G) if g.n > 1 else 0)
    else:
        assert m.diameter == math.inf
    assert m.girth == nx.girth(G)
    assert m.min_degree == min(d for _, d in G.degree())


@given(graphs(max_n=9))
@settings(max_examples=60)
def test_independence_number_brute_force(g):
    best = 0
    for r in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
                best = r
    assert independence_number(g) == best


def test_petersen_like_metrics():
    assert girth(Graph.cycle(7)) == 7
    assert diameter(Graph.path(4)) == 3
    assert girth(Graph.path(4)) == math.inf
