from math import gcd

import pytest

from satlab.builders import (
    BuilderError,
    BuilderSpec,
    are_compatible,
    glue,
    path_length_profile,
    size_coverage,
    verify_builder,
)
from satlab.canon import is_isomorphic
from satlab.constructions import C6_BUILDER_DISTINGUISHED, c6_builder11, ehm_join, petersen
from satlab.counting import copies
from satlab.graph import Graph
from satlab.patterns import cycle
from satlab.saturation import saturated

from conftest import nx_cycle_saturated


@pytest.fixture(scope="module")
def c6b():
    return BuilderSpec(c6_builder11(), C6_BUILDER_DISTINGUISHED, 6)


def test_c6_builder_verifies(c6b):
    ok, spec = verify_builder(c6b.graph, c6b.distinguished, 6)
    assert ok and spec == c6b


def test_non_builders():
    assert verify_builder(ehm_join(6, 4), 0, 6) == (False, None)
    with pytest.raises(BuilderError):
        verify_builder(Graph.cycle(5), 7, 6)
    with pytest.raises(BuilderError):
        BuilderSpec(Graph.cycle(5), 0, 4)


def test_other_roots_of_c6_builder_are_decided(c6b):
    g = c6b.graph
    for v in range(g.n):
        ok, _ = verify_builder(g, v, 6)
        from satlab.graph import identify_vertices

        assert ok == nx_cycle_saturated(identify_vertices([(g, v), (g, v)]), 6)


def test_profiles_trivial():
    star = BuilderSpec(Graph.complete_bipartite(1, 4), 0, 6)
    assert all(s == {1} for s in path_length_profile(star).values())
    p4 = BuilderSpec(Graph.path(4), 0, 6)
    assert path_length_profile(p4) == {1: {1}, 2: {2}, 3: {3}}


def test_profile_of_c6_builder(c6b):
    prof = path_length_profile(c6b)
    assert len(prof) == 10
    for u, lengths in prof.items():
        assert lengths & set(range(1, 6))
        assert max(lengths) <= 10
        if c6b.graph.has_edge(u, c6b.distinguished):
            assert 1 in lengths


def test_compatibility(c6b):
    assert are_compatible(c6b, c6b)
    star = BuilderSpec(Graph.complete_bipartite(1, 4), 0, 6)
    # leaves only reach the root in one step, and 1 + 1 != 5
    assert not are_compatible(star, star)
    assert not are_compatible(c6b, BuilderSpec(Graph.cycle(7), 0, 7))


@pytest.mark.parametrize("t", [1, 2, 3])
def test_glue_c6_builder(c6b, t):
    g = glue(c6b, t)
    assert g.n == 10 * t + 1
    assert copies(g, cycle(4)) == 2 * t
    assert saturated(g, cycle(6))


def test_glue_once_is_the_builder(c6b):
    assert is_isomorphic(glue(c6b, 1), c6b.graph)


def test_glue_preserves_c4_freeness():
    b = BuilderSpec(petersen(), 0, 7)
    assert verify_builder(b.graph, 0, 7)[0]
    for t in (2, 3):
        g = glue(b, t)
        assert copies(g, cycle(4)) == 0 and saturated(g, cycle(7))


def test_glue_errors(c6b):
    with pytest.raises(BuilderError):
        glue(c6b, 0)
    with pytest.raises(BuilderError):
        glue(c6b, 1, None, 2)
    star = BuilderSpec(Graph.complete_bipartite(1, 4), 0, 6)
    with pytest.raises(BuilderError):
        glue(star, 2)


def test_builder_json_roundtrip(c6b):
    assert BuilderSpec.from_json(c6b.to_json(verified=True)) == c6b


def test_size_coverage_examples():
    assert size_coverage(11, 12).threshold == 111
    assert size_coverage(1, 7).threshold == 1
    cov = size_coverage(2, 4, 200)
    assert cov.threshold is None
    assert all(x % 2 == 1 for x in cov.sizes)


@pytest.mark.parametrize("a,b", [(2, 3), (3, 5), (4, 9), (7, 10), (10, 11), (6, 8), (12, 18)])
def test_size_coverage_brute_force(a, b):
    limit = 10 * a * b
    reps = {1 + x * a + y * b for x in range(limit) for y in range(limit) if 1 + x * a + y * b <= limit}
    cov = size_coverage(a, b, limit)
    assert cov.sizes == reps
    if gcd(a, b) == 1:
        missing = [x for x in range(1, limit + 1) if x not in reps]
        assert cov.threshold == (max(missing) + 1 if missing else 1)
        assert cov.threshold == 1 + (a - 1) * (b - 1)
    else:
        assert cov.threshold is None
