"""Shared brute-force oracles and instance builders for the tests.

The oracles restate the validity predicates inline (not via the package's
checkers) so that frozen expected values rest on an independent code path.
"""

from __future__ import annotations

import itertools
import random

from dyncolor import build_graph


def oracle_valid(g, coloring, r=0):
    # properness, then the dynamic quota, spelled out from the definitions
    for u, v in g.edges:
        if coloring[u] == coloring[v]:
            return False
    if r:
        for v in range(g.n):
            seen = {coloring[u] for u in g.adj[v]}
            if len(seen) < min(r, len(g.adj[v])):
                return False
    return True


def oracle_chi(g, r=0):
    """Least color count by exhaustive product search (tiny n only)."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for combo in itertools.product(range(1, k + 1), repeat=g.n):
            if oracle_valid(g, combo, r):
                return k
    raise AssertionError("n colors always suffice")


def oracle_has_small_transversal(h, r):
    for size in range(min(r, h.n) + 1):
        for subset in itertools.combinations(range(h.n), size):
            s = set(subset)
            if all(s & e for e in h.edges):
                return True
    return False


def oracle_list_colorings(g, lists):
    """Yield every proper coloring picking from the given lists."""
    for combo in itertools.product(*lists):
        if all(combo[u] != combo[v] for u, v in g.edges):
            yield list(combo)


def oracle_strong_chi(h, r):
    if h.n == 0:
        return 0
    for k in range(1, h.n + 1):
        for combo in itertools.product(range(1, k + 1), repeat=h.n):
            if all(len({combo[v] for v in e}) >= min(r, len(e)) for e in h.edges):
                return k
    raise AssertionError("n colors always suffice")


def bipartite_regular(side, d, seed):
    """d-regular bipartite graph on 2*side vertices from d disjoint permutations."""
    rng = random.Random(seed)
    perms = []
    while len(perms) < d:
        cand = list(range(side))
        rng.shuffle(cand)
        if all(all(cand[i] != q[i] for i in range(side)) for q in perms):
            perms.append(cand)
    edges = [(i, side + q[i]) for q in perms for i in range(side)]
    return build_graph(2 * side, edges)


def random_lists(n, size, universe, rng):
    pool = list(universe)
    return [sorted(rng.sample(pool, size)) for _ in range(n)]
