"""Greedy r-dynamic list coloring.

Needs every list to hold at least r*max_degree + 1 colors; under that floor
the forbidden set at each step stays at most r*max_degree, so a color is
always available and the result is proper and r-dynamic.
"""

from __future__ import annotations

from .graphs import Graph, degree_stats


def greedy_r_dynamic(g: Graph, lists, r, order=None):
    """Color greedily so the result is proper and r-dynamic.

    At each vertex v the forbidden colors are (a) colors already on
    neighbors of v, and (b) for every neighbor u that has not yet collected
    min(r, d(u)) distinct colors in its own neighborhood, all colors already
    seen there (reusing one would waste u's chance to reach its quota, since
    v may be u's last uncolored neighbor).  (a) contributes at most Delta
    colors, (b) at most Delta*(r-1), so lists of size r*Delta+1 never run
    dry.  Default order is ascending vertex id.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if g.n == 0:
        return []
    floor = r * degree_stats(g).max_degree + 1
    if len(lists) != g.n:
        raise ValueError(f"list assignment has {len(lists)} entries for {g.n} vertices")
    norm = []
    for v, colors in enumerate(lists):
        t = tuple(sorted(set(colors)))
        if len(t) < floor:
            raise ValueError(
                f"list at vertex {v} has {len(t)} colors, needs >= {floor}"
            )
        norm.append(t)
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")

    color = [None] * g.n
    seen = [set() for _ in range(g.n)]  # distinct colors on each vertex's neighbors
    for v in order:
        forbidden = set()
        for u in g.adj[v]:
            if color[u] is not None:
                forbidden.add(color[u])
            if len(seen[u]) < min(r, g.degree(u)):
                forbidden |= seen[u]
        for c in norm[v]:
            if c not in forbidden:
                color[v] = c
                break
        else:
            raise AssertionError(
                f"no admissible color at vertex {v}; precondition guarantees one"
            )
        for u in g.adj[v]:
            seen[u].add(color[v])
    return color
