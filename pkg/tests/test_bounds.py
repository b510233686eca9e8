import json
from fractions import Fraction
from math import comb

import pytest

from satlab.bounds import (
    BoundRangeError,
    SUMMARY_ROWS,
    evaluate_bound,
    falling_factorial,
    kt_count,
    summary_table,
)
from satlab.constructions import ehm_join, kaszonyi_tuza
from satlab.counting import copies, rooted_pair_count
from satlab.graph import Graph
from satlab.patterns import clique, cycle, path


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(9, 0) == 1
    assert falling_factorial(3, 4) == 0
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


def test_reference_values():
    assert evaluate_bound("EHM", n=10, s=4).upper == 17
    assert evaluate_bound("C4K4", n=10).upper == 28
    assert evaluate_bound("KrKs", n=10, r=3, s=4).upper == 8
    assert evaluate_bound("QuadLB", n=10, H=Graph.cycle(4), s=4).lower == Fraction(35, 3)
    assert evaluate_bound("K3K4", n=9).lower == 7
    assert evaluate_bound("C4C6", t=3).upper == 6


def test_quad_lb_uses_rooted_count():
    rep = evaluate_bound("QuadLB", n=12, h=Graph.cycle(4), s=5)
    f = rooted_pair_count(Graph.cycle(4), 0, 2, 5)
    assert rep.params["f"] == f == 3
    assert rep.lower == f * (Fraction(144, 8) - 6)


def test_range_refusals():
    with pytest.raises(BoundRangeError, match="2s - 4"):
        evaluate_bound("CrKs", n=20, r=7, s=5)
    with pytest.raises(BoundRangeError):
        evaluate_bound("KrKs", n=10, r=4, s=4)
    with pytest.raises(BoundRangeError):
        evaluate_bound("QuadLB", n=10, h=Graph.complete(4), s=4)
    with pytest.raises(BoundRangeError):
        evaluate_bound("nope", n=3)
    with pytest.raises(BoundRangeError):
        evaluate_bound("EHM", n=10)


def test_cr_ks_leading_terms():
    even = evaluate_bound("CrKs", n=10, r=4, s=5)
    assert even.upper == Fraction(6, 4) * 100 and even.lower == Fraction(6, 8) * 100
    assert not even.lower_exact and not even.upper_exact
    odd3 = evaluate_bound("CrKs", n=10, r=3, s=5)
    assert odd3.lower is None and odd3.upper == Fraction(6, 2) * 10


def test_lower_below_upper_where_both_exist():
    for n in range(8, 30):
        for s in range(5, 8):
            for r in range(3, s):
                rep = evaluate_bound("KrKs", n=n, r=r, s=s)
                if n >= 10 * s:
                    assert rep.lower <= rep.upper
            for r in range(3, 2 * s - 3):
                rep = evaluate_bound("CrKs", n=n, r=r, s=s)
                if rep.lower is not None:
                    assert rep.lower <= rep.upper


@pytest.mark.parametrize("s", [4, 5, 6])
def test_ehm_join_clique_counts_match_upper(s):
    for r in range(3, s):
        for n in range(s, 15):
            assert copies(ehm_join(n, s), clique(r)) == evaluate_bound("KrKs", n=n, r=r, s=s).upper


def test_ehm_join_four():
    for n in range(4, 15):
        g = ehm_join(n, 4)
        assert copies(g, clique(3)) == n - 2
        assert copies(g, cycle(4)) == comb(n - 2, 2)


@pytest.mark.parametrize("f", [clique(3), clique(4), path(3)])
def test_kt_count_dominates_construction(f):
    for n in range(f.num_vertices, 13):
        g = kaszonyi_tuza(n, f.graph)
        for r in (2, 3):
            assert copies(g, clique(r)) <= kt_count(n, r, f.graph).upper


def test_json_and_table():
    data = json.loads(evaluate_bound("QuadLB", n=10, h=Graph.cycle(4), s=4).to_json())
    assert data["lower"] == "35/3" and data["upper"] is None
    rows = summary_table(10)
    assert len(rows) == len(SUMMARY_ROWS) == 16
    assert rows[3]["lower"] == "8" and rows[4]["upper"] == "28"
