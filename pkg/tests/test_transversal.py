from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from dyncolor import build_hypergraph, candidate_family, has_small_transversal, is_transversal
from .helpers import oracle_has_small_transversal


def test_is_transversal():
    h = build_hypergraph(4, [{0, 1}, {2, 3}])
    assert is_transversal(h, {0, 2})
    assert is_transversal(h, {0, 1, 2})
    assert not is_transversal(h, {0, 1})
    assert is_transversal(build_hypergraph(3, []), set())
    assert not is_transversal(build_hypergraph(3, [set()]), {0, 1, 2})


def test_candidate_family_two_disjoint_pairs():
    h = build_hypergraph(4, [{0, 1}, {2, 3}])
    fam = candidate_family(h, 2)
    assert sorted(fam.sets) == [
        frozenset({0, 2}),
        frozenset({0, 3}),
        frozenset({1, 2}),
        frozenset({1, 3}),
    ]


def test_candidate_family_shared_vertex():
    h = build_hypergraph(3, [{0, 1}, {1, 2}])
    fam = candidate_family(h, 2)
    # picking 0 leaves {1,2} to cover; picking 1 covers both and pads with 0
    assert fam.sets == (frozenset({0, 1}), frozenset({0, 2}))
    assert all(is_transversal(h, s) for s in fam.sets)


def test_candidate_family_padding():
    # one edge, target 2: the second pick pads with the smallest free id
    h = build_hypergraph(4, [{2, 3}])
    fam = candidate_family(h, 2)
    assert fam.sets == (frozenset({0, 2}), frozenset({0, 3}))
    with pytest.raises(ValueError):
        candidate_family(build_hypergraph(4, []), 2)  # needs at least one edge
    # no room left to pad kills the branch
    assert candidate_family(build_hypergraph(2, [{0, 1}]), 3).sets == ()


def test_candidate_family_empty_edge():
    h = build_hypergraph(3, [set()])
    assert candidate_family(h, 2).sets == ()


def test_uniformity_requirement():
    # the family itself tolerates mixed edge sizes; only the decision method
    # that relies on the k^r accounting rejects them
    h = build_hypergraph(3, [{0}, {1, 2}])
    fam = candidate_family(h, 2)
    assert frozenset({0, 1}) in fam.sets and frozenset({0, 2}) in fam.sets
    with pytest.raises(ValueError):
        has_small_transversal(h, 2, method="candidates")
    assert has_small_transversal(h, 2, method="bruteforce")


def test_candidate_family_size_bound():
    # |T| <= k^r where k is the common edge size
    h = build_hypergraph(9, [{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 4, 8}])
    for r in (1, 2, 3):
        fam = candidate_family(h, r)
        assert len(fam.sets) <= 3 ** r
        for s in fam.sets:
            assert len(s) <= r


def test_has_small_transversal_agrees_with_brute_force():
    rng = random.Random(4242)
    for _ in range(80):
        n = rng.randint(2, 6)
        k = rng.randint(1, min(3, n))
        m = rng.randint(0, 4)
        edges = [set(rng.sample(range(n), k)) for _ in range(m)]
        h = build_hypergraph(n, edges)
        for r in (0, 1, 2, 3):
            want = oracle_has_small_transversal(h, r)
            assert has_small_transversal(h, r, method="candidates") == want
            assert has_small_transversal(h, r, method="bruteforce") == want


def test_has_small_transversal_r0():
    assert has_small_transversal(build_hypergraph(3, []), 0)
    assert not has_small_transversal(build_hypergraph(3, [{0}]), 0)


def test_has_small_transversal_bad_method():
    with pytest.raises(ValueError):
        has_small_transversal(build_hypergraph(2, [{0}]), 1, method="magic")


@settings(max_examples=60)
@given(st.integers(min_value=0, max_value=10**6))
def test_family_members_are_transversals_when_one_exists(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    k = rng.randint(1, min(3, n))
    edges = [set(rng.sample(range(n), k)) for _ in range(rng.randint(1, 4))]
    h = build_hypergraph(n, edges)
    r = rng.randint(1, 3)
    fam = candidate_family(h, r)
    for s in fam.sets:
        assert len(s) == r
    # some member is a transversal exactly when a size-r transversal exists;
    # a smaller one pads out to size r only when the vertex pool allows it
    hit = any(is_transversal(h, s) for s in fam.sets)
    assert hit == (r <= n and oracle_has_small_transversal(h, r))
