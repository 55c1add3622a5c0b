"""Small-transversal detection via a recursive candidate family.

A transversal is a vertex set meeting every edge.  candidate_family builds,
for a target size r, a family of at most k^r size-r sets (k = largest edge)
with the property that a size-r transversal exists iff some member of the
family is one.  Branching is on the lowest-index edge; recursing on vertex v
removes v and every edge containing v (the surviving edges are exactly the
ones the rest of the transversal must cover).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Hypergraph


@dataclass(frozen=True)
class CandidateFamily:
    r: int
    sets: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def is_transversal(h: Hypergraph, subset) -> bool:
    """True when subset meets every edge (vacuously true with no edges)."""
    s = frozenset(subset)
    return all(s & e for e in h.edges)


def candidate_family(h: Hypergraph, r) -> CandidateFamily:
    """Candidate size-r transversals of h, deduplicated and sorted.

    Guarantees: every member has size exactly r, and some member is a
    transversal iff a size-r transversal exists.  Non-transversal members can
    occur (the last pick only branches over one edge), so deciding requires
    checking membership candidates, not mere nonemptiness.  An empty edge
    kills all branches (nothing can meet it), and once no edges remain any r
    of the surviving vertices do the job (the smallest ids are kept as the
    canonical representative).
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if h.m == 0:
        raise ValueError("candidate_family needs at least one edge")

    def recurse(edges, avail, depth):
        if not edges:
            if len(avail) >= depth:
                return {frozenset(sorted(avail)[:depth])}
            return set()
        if any(not e for e in edges):
            return set()
        first = edges[0]
        if depth == 1:
            return {frozenset([v]) for v in first}
        found = set()
        for v in sorted(first):
            rest = tuple(e for e in edges if v not in e)
            for partial in recurse(rest, avail - {v}, depth - 1):
                found.add(partial | {v})
        return found

    members = recurse(h.edges, frozenset(range(h.n)), r)
    ordered = tuple(sorted(members, key=sorted))
    return CandidateFamily(r=r, sets=ordered)


def _brute_force(h, r):
    vertices = range(h.n)
    for size in range(min(r, h.n) + 1):
        for subset in combinations(vertices, size):
            if is_transversal(h, subset):
                return True
    return False


def has_small_transversal(h: Hypergraph, r, method="candidates") -> bool:
    """Decide whether a transversal of size at most r exists.

    method "bruteforce" tries every subset of size <= r and works on any
    hypergraph.  method "candidates" goes through candidate_family and
    requires uniform edge sizes; it asks for size exactly min(r, n), which is
    equivalent (supersets of transversals are transversals, so a small one
    can always be padded with unused vertices).
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if method == "bruteforce":
        return _brute_force(h, r)
    if method != "candidates":
        raise ValueError(f"unknown method {method!r}")
    if h.m == 0:
        return True
    if h.uniformity() is None:
        raise ValueError("candidates method requires uniform edge sizes")
    effective = min(r, h.n)
    if effective == 0:
        return False
    family = candidate_family(h, effective)
    return any(is_transversal(h, member) for member in family)
