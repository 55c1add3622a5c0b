"""Augmented hypergraphs whose incidence graphs separate dynamic from strong coloring.

Starting from a (k-r+2)-uniform hypergraph, every edge is enlarged by a core
of r-2 shared new vertices (making the edges k-uniform), the vertex set is
padded to a multiple of k, and r pairwise edge-disjoint partitions of the
vertices into k-blocks are appended as extra edges.  On the incidence graph
of the result, any r-strong coloring of the vertex part lifts to an
r-dynamic coloring using r extra colors, which sandwiches the r-dynamic
chromatic number of the incidence graph between the r-strong chromatic
number of the hypergraph and that value plus r.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coloring import (
    chi_exact,
    hyper_chi_strong,
    is_r_dynamic,
    is_r_strong,
    solve_strong_list_coloring,
)
from .graphs import Hypergraph, incidence_graph, is_bipartite, is_k_degenerate


@dataclass(frozen=True)
class AugmentedHypergraph:
    base: Hypergraph
    hyper: Hypergraph
    core: tuple[int, ...]
    r: int
    k: int
    matchings: tuple[tuple[int, ...], ...]  # edge indices of each partition

    def edge_label(self, j):
        """("base", index) for original edges, ("matching", i) for partition i (1-based)."""
        if j < self.base.m:
            return ("base", j)
        for i, idxs in enumerate(self.matchings, start=1):
            if j in idxs:
                return ("matching", i)
        raise IndexError(f"edge index {j} out of range")


def augment(h: Hypergraph, r, k, seed, max_tries=1000) -> AugmentedHypergraph:
    """Core-extend h to k-uniformity and append r disjoint vertex partitions.

    Requires k >= r >= 2 and every edge of h of size exactly k - r + 2.
    Partitions are drawn by seeded shuffling, rejecting any that repeats an
    already-used block; impossibility (e.g. a single-block universe cannot
    host two distinct partitions) surfaces as an error after max_tries.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if k < r:
        raise ValueError(f"k must be >= r, got k={k} r={r}")
    if h.n < 1:
        raise ValueError("base hypergraph needs at least one vertex")
    want = k - r + 2
    for j, e in enumerate(h.edges):
        if len(e) != want:
            raise ValueError(
                f"edge {j} has size {len(e)}, need uniform size k-r+2 = {want}"
            )
    core = tuple(range(h.n, h.n + r - 2))
    padded = h.n + len(core)
    padded = ((padded + k - 1) // k) * k
    base_edges = [e | frozenset(core) for e in h.edges]

    rng = random.Random(seed)
    used_blocks = set()
    partitions = []
    for i in range(r):
        for _ in range(max_tries):
            perm = list(range(padded))
            rng.shuffle(perm)
            blocks = [frozenset(perm[j : j + k]) for j in range(0, padded, k)]
            if all(b not in used_blocks for b in blocks):
                break
        else:
            raise ValueError(
                f"could not draw partition {i + 1} of {r} with unused blocks "
                f"after {max_tries} tries (padded n={padded}, k={k})"
            )
        used_blocks.update(blocks)
        partitions.append(blocks)

    edges = list(base_edges)
    matchings = []
    for blocks in partitions:
        start = len(edges)
        edges.extend(blocks)
        matchings.append(tuple(range(start, len(edges))))
    return AugmentedHypergraph(
        base=h,
        hyper=Hypergraph(n=padded, edges=tuple(edges)),
        core=core,
        r=r,
        k=k,
        matchings=tuple(matchings),
    )


def lift_coloring(aug: AugmentedHypergraph, f, alphas):
    """Extend an r-strong coloring of the vertex part to the incidence graph.

    Edge-part vertices take alphas[i-1] when the edge belongs to partition i
    and alphas[r-1] when it is a base edge.  Requires f r-strong on the
    augmented hypergraph and the alphas to be r distinct colors outside f's
    range; the result is checked r-dynamic (a failure would falsify the
    construction and raises).
    """
    r = aug.r
    if len(f) != aug.hyper.n:
        raise ValueError(f"coloring has {len(f)} entries for {aug.hyper.n} vertices")
    if not is_r_strong(aug.hyper, f, r):
        raise ValueError("f is not r-strong on the augmented hypergraph")
    alphas = tuple(alphas)
    if len(alphas) != r or len(set(alphas)) != r:
        raise ValueError(f"need r = {r} distinct fresh colors, got {alphas}")
    if set(alphas) & set(f):
        raise ValueError("fresh colors overlap the range of f")
    g, _, _ = incidence_graph(aug.hyper)
    lifted = list(f)
    for j in range(aug.hyper.m):
        kind, i = aug.edge_label(j)
        lifted.append(alphas[i - 1] if kind == "matching" else alphas[r - 1])
    if not is_r_dynamic(g, lifted, r):
        raise AssertionError(
            "lifted coloring failed the dynamic check; the construction "
            "guarantees it, so this is a bug"
        )
    return lifted


def construction_report(h: Hypergraph, r, k, seed, max_n=12):
    """Build the augmented instance and verify its exact sandwich numerically.

    Returns a JSON-ready dict with bipartiteness and k-degeneracy of the
    incidence graph, the exact r-strong chromatic number of the augmented
    hypergraph, the exact r-dynamic chromatic number of the incidence graph,
    the validity and color count of the lifted coloring, and the two
    comparisons strong <= dynamic and dynamic <= strong + r.  max_n guards
    both exact searches (the incidence graph is the larger instance).
    """
    aug = augment(h, r, k, seed)
    g, vertex_part, edge_part = incidence_graph(aug.hyper)
    strong = hyper_chi_strong(aug.hyper, r, max_n=max_n)
    f = solve_strong_list_coloring(
        aug.hyper, [tuple(range(1, strong + 1))] * aug.hyper.n, r
    )
    alphas = tuple(range(strong + 1, strong + r + 1))
    lifted = lift_coloring(aug, f, alphas)
    dynamic = chi_exact(g, mode="dynamic", r=r, max_n=max_n)
    return {
        "base_vertices": h.n,
        "base_edges": h.m,
        "r": r,
        "k": k,
        "seed": seed,
        "augmented_vertices": aug.hyper.n,
        "augmented_edges": aug.hyper.m,
        "incidence_vertices": g.n,
        "incidence_edges": g.m,
        "bipartite": is_bipartite(g),
        "k_degenerate": is_k_degenerate(g, k),
        "strong_chromatic": strong,
        "dynamic_chromatic": dynamic,
        "lifted_valid": is_r_dynamic(g, lifted, r),
        "lifted_colors_used": len(set(lifted)),
        "lower_bound_holds": dynamic >= strong,
        "upper_bound_holds": dynamic <= strong + r,
    }
