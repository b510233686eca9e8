import json

import pytest

from satlab.bounds import evaluate_bound
from satlab.canon import is_isomorphic
from satlab.constructions import ehm_join, petersen
from satlab.counting import copies, count_independent_triples
from satlab.enumerate import SearchBudget
from satlab.graph import from_graph6
from satlab.patterns import clique, clique_minus_edge, cycle
from satlab.saturation import is_free, saturated
from satlab.search import find_h_free_saturated, sat_oracle, saturated_graphs, search_builder

from conftest import nx_clique_saturated, nx_cycle_saturated, structure_violations


@pytest.mark.parametrize("n,s", [(5, 3), (6, 3), (6, 4)])
def test_oracle_edge_counts(n, s):
    res = sat_oracle(n, clique(2), clique(s))
    assert res.status == "exact"
    assert res.minimum == evaluate_bound("EHM", n=n, s=s).upper
    assert len(res.witnesses) == 1
    assert is_isomorphic(from_graph6(res.witnesses[0]), ehm_join(n, s))


def test_oracle_triangles_in_k4_saturated():
    res = sat_oracle(7, clique(3), clique(4))
    assert res.minimum == 5 and len(res.witnesses) == 1
    g = from_graph6(res.witnesses[0])
    assert is_isomorphic(g, ehm_join(7, 4)) and nx_clique_saturated(g, 4)
    data = json.loads(res.to_json())
    assert data["minimum"] == 5 and data["status"] == "exact"


def test_oracle_zero_case():
    for n in (5, 6, 7):
        res = sat_oracle(n, cycle(4), clique_minus_edge(4))
        assert res.minimum == 0
        for w in res.witnesses:
            g = from_graph6(w)
            assert copies(g, cycle(4)) == 0 and saturated(g, clique_minus_edge(4))


def test_oracle_partial_budget():
    res = sat_oracle(8, clique(3), clique(4), budget=SearchBudget(max_nodes=50))
    assert res.status == "partial"


def test_oracle_bound_sandwich():
    for n in (7, 8):
        res = sat_oracle(n, clique(3), clique(4))
        rep = evaluate_bound("K3K4", n=n)
        assert rep.lower <= res.minimum <= rep.upper
        assert res.minimum <= evaluate_bound("KrKs", n=n, r=3, s=4).upper
    res = sat_oracle(7, cycle(4), clique(4))
    assert res.minimum <= evaluate_bound("C4K4", n=7).upper


def test_saturated_graphs_against_networkx():
    for n in range(4, 8):
        gs = saturated_graphs(n, cycle(5))
        assert gs and all(nx_cycle_saturated(g, 5) for g in gs)
        for a in range(len(gs)):
            for b in range(a):
                assert not is_isomorphic(gs[a], gs[b])


@pytest.mark.parametrize("s", [4, 5])
def test_structure_facts_small(s):
    for n in range(s + 1, 9):
        assert structure_violations(saturated_graphs(n, clique(s)), s) == []


def test_c6_count_in_k5_saturated_small():
    for n in range(5, 9):
        for g in saturated_graphs(n, clique(5)):
            assert copies(g, cycle(6)) >= 6 * count_independent_triples(g)


def test_find_h_free_saturated_examples():
    out = find_h_free_saturated(10, clique(3), cycle(4))
    assert out.status == "found" and is_isomorphic(out.graph, petersen())
    out = find_h_free_saturated(9, clique(3), cycle(5))
    assert out.status == "found" and out.graph.num_edges() == 20
    for n, k in [(10, 8), (12, 10)]:
        out = find_h_free_saturated(n, clique(3), cycle(k))
        assert out.status == "found" and out.method.startswith("construction")
        assert is_free(out.graph, clique(3)) and nx_cycle_saturated(out.graph, k)


def test_find_h_free_saturated_nonexistence():
    out = find_h_free_saturated(7, clique(3), cycle(4))
    assert out.status == "none" and out.graph is None


def test_find_h_free_saturated_random_mode():
    out = find_h_free_saturated(12, clique(3), cycle(4), budget=SearchBudget(max_seconds=60))
    assert out.status == "found"
    assert is_free(out.graph, clique(3)) and nx_cycle_saturated(out.graph, 4)
    assert find_h_free_saturated(12, clique(3), cycle(4), exhaustive_limit=0).status in ("found", "exhausted")


def test_builder_search_c7():
    res = search_builder(7, cycle(4), range(8, 13), SearchBudget(max_seconds=120))
    assert res.builders
    b = res.builders[0]
    assert copies(b.graph, cycle(4)) == 0
    assert saturated(b.graph, cycle(7))


def test_builder_search_with_two_c4s():
    res = search_builder(6, cycle(4), range(11, 12), SearchBudget(max_seconds=300), max_h_copies=2)
    assert res.builders
    b = res.builders[0]
    assert b.graph.n == 11 and copies(b.graph, cycle(4)) <= 2


def test_builder_search_empty_range():
    res = search_builder(7, cycle(4), range(0), SearchBudget(max_nodes=10))
    assert res.builders == [] and res.pairs == []
    with pytest.raises(ValueError):
        search_builder(4, cycle(4), range(5, 6), SearchBudget(max_nodes=10))
