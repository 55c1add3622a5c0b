"""Random sublist selection with resampling, and the coloring pipeline on top.

The route to an r-dynamic list coloring implemented here: draw a uniform
random sublist of each vertex's list, detect "bad" vertices whose neighbor
sublists can all be hit by fewer than r colors, resample around bad vertices
until none remain, then solve an ordinary proper list coloring on the
surviving sublists.  Once no bad vertex remains, any proper coloring from the
sublists is automatically r-dynamic at every vertex of degree >= r: the
neighbor colors form a transversal of the neighbor-sublist hypergraph, and
clearing means no small transversal exists.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .coloring import is_r_dynamic, solve_list_coloring
from .graphs import Graph, Hypergraph, degree_stats
from .transversal import has_small_transversal


@dataclass
class SublistState:
    """Base lists plus the currently drawn sublists and the rng that drew them.

    slack and r are the list-size bookkeeping parameters (base size =
    sublist_size + slack + r - 2); they stay None when sublists are sampled
    outside the pipeline and no quota is being tracked.
    """

    base: list
    sublists: list
    sublist_size: int
    seed: int
    rng: random.Random = field(repr=False)
    draws: int = 0
    r: int | None = None
    slack: int | None = None


@dataclass(frozen=True)
class ResampleLog:
    iterations: int
    violations_per_sweep: tuple
    status: str  # "clear" or "cap_reached"

    def to_json_dict(self):
        return {
            "iterations": self.iterations,
            "violations_per_sweep": [list(sweep) for sweep in self.violations_per_sweep],
            "status": self.status,
        }


@dataclass(frozen=True)
class PipelineResult:
    """Outcome of the sublist pipeline.

    coloring is None unless status is "ok".  status is one of "ok",
    "cap_reached" (resampling never cleared), "list_coloring_failed" (the
    sublists cleared but admit no proper coloring, i.e. the sublist size is
    below the graph's choosability).
    """

    coloring: list | None
    log: ResampleLog
    status: str


def _normalize_base(lists, sublist_size):
    if sublist_size < 1:
        raise ValueError(f"sublist size must be >= 1, got {sublist_size}")
    norm = []
    for v, colors in enumerate(lists):
        t = tuple(sorted(set(colors)))
        if len(t) < sublist_size:
            raise ValueError(
                f"list at vertex {v} has {len(t)} colors, sublist size is {sublist_size}"
            )
        norm.append(t)
    return norm


def sample_sublists(lists, sublist_size, seed, r=None, slack=None) -> SublistState:
    """Draw a uniform random sublist of each list, independently per vertex.

    Reproducible: the same (lists, sublist_size, seed) give the same draw.
    Passing r (and optionally slack; it is derived from uniform base sizes
    otherwise) arms the state for bad-event checks, enforcing r >= 2 and
    slack >= r - 1.
    """
    base = _normalize_base(lists, sublist_size)
    if r is not None:
        if r < 2:
            raise ValueError(f"r must be >= 2, got {r}")
        if slack is None:
            sizes = {len(t) for t in base}
            if len(sizes) != 1:
                raise ValueError("slack underivable: base list sizes are not uniform")
            slack = sizes.pop() - sublist_size - r + 2
        if slack < r - 1:
            raise ValueError(f"slack {slack} below the floor r-1 = {r - 1}")
    elif slack is not None:
        raise ValueError("slack without r is meaningless")
    rng = random.Random(seed)
    sub = [tuple(sorted(rng.sample(t, sublist_size))) for t in base]
    return SublistState(
        base=base,
        sublists=sub,
        sublist_size=sublist_size,
        seed=seed,
        rng=rng,
        draws=len(base),
        r=r,
        slack=slack,
    )


def neighborhood_color_hypergraph(g: Graph, assignment, v) -> Hypergraph:
    """Hypergraph whose edges are the color lists of v's neighbors.

    Vertex ids are the color values themselves (universe 0..max color), one
    edge per neighbor in ascending neighbor order, duplicates kept.
    """
    if g.degree(v) == 0:
        raise ValueError(f"vertex {v} is isolated; neighborhood hypergraph undefined")
    edges = [frozenset(assignment[w]) for w in sorted(g.adj[v])]
    top = max(max(e) for e in edges)
    return Hypergraph(n=top + 1, edges=tuple(edges))


def bad_event_holds(g: Graph, state: SublistState, v) -> bool:
    """True when fewer than r colors can meet every neighbor sublist of v."""
    if state.r is None:
        raise ValueError("state has no r; sample with r= to enable event checks")
    if g.degree(v) < state.r:
        raise ValueError(f"vertex {v} has degree {g.degree(v)} < r = {state.r}")
    hv = neighborhood_color_hypergraph(g, state.sublists, v)
    return has_small_transversal(hv, state.r - 1, method="candidates")


def default_max_iters(g: Graph, r) -> int:
    stats = degree_stats(g)
    return math.ceil(10 * g.n * (r - 1) * math.log(max(stats.max_degree, 2)))


def resample_until_clear(g: Graph, state: SublistState, max_iters=None):
    """Resample neighbor sublists around bad vertices until none remain.

    Sweeps vertices in ascending id, collecting every vertex of degree >= r
    whose bad event currently holds; each sweep redraws the sublists of the
    first violated vertex's neighbors (the variables its event reads) and
    counts as one iteration.  Stops with status "clear" or, after max_iters
    resamples, "cap_reached".  Returns (state, log); the state is updated in
    place.
    """
    if state.r is None:
        raise ValueError("state has no r; sample with r= to enable event checks")
    r = state.r
    if max_iters is None:
        max_iters = default_max_iters(g, r)
    eligible = [v for v in range(g.n) if g.degree(v) >= r]
    sweeps = []
    while True:
        violated = [v for v in eligible if bad_event_holds(g, state, v)]
        if not violated:
            status = "clear"
            break
        if len(sweeps) >= max_iters:
            status = "cap_reached"
            break
        sweeps.append(tuple(violated))
        centre = violated[0]
        for w in sorted(g.adj[centre]):
            state.sublists[w] = tuple(sorted(state.rng.sample(state.base[w], state.sublist_size)))
            state.draws += 1
    log = ResampleLog(
        iterations=len(sweeps),
        violations_per_sweep=tuple(sweeps),
        status=status,
    )
    return state, log


def dynamic_coloring_via_sublists(
    g: Graph, lists, sublist_size, r, seed, max_iters=None
) -> PipelineResult:
    """Full pipeline: sample, resample until clear, then proper-list-color.

    Base lists must share one size, equal to sublist_size + slack + r - 2
    for some slack >= r - 1, and every vertex needs degree >= r.  On status
    "ok" the coloring is proper and r-dynamic (re-checked internally; a
    checker failure would be a bug and raises).
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if g.n == 0:
        return PipelineResult(
            coloring=[],
            log=ResampleLog(iterations=0, violations_per_sweep=(), status="clear"),
            status="ok",
        )
    if len(lists) != g.n:
        raise ValueError(f"list assignment has {len(lists)} entries for {g.n} vertices")
    sizes = {len(set(colors)) for colors in lists}
    if len(sizes) != 1:
        raise ValueError(f"base list sizes must be uniform, got sizes {sorted(sizes)}")
    slack = sizes.pop() - sublist_size - r + 2
    if slack < r - 1:
        raise ValueError(
            f"base size leaves slack {slack}, below the floor r-1 = {r - 1}"
        )
    min_degree = degree_stats(g).min_degree
    if min_degree < r:
        raise ValueError(f"minimum degree {min_degree} below r = {r}")
    state = sample_sublists(lists, sublist_size, seed, r=r, slack=slack)
    state, log = resample_until_clear(g, state, max_iters)
    if log.status != "clear":
        return PipelineResult(coloring=None, log=log, status="cap_reached")
    coloring = solve_list_coloring(g, state.sublists, mode="proper")
    if coloring is None:
        return PipelineResult(coloring=None, log=log, status="list_coloring_failed")
    if not is_r_dynamic(g, coloring, r):
        raise AssertionError(
            "cleared sublists produced a non-dynamic proper coloring; "
            "this contradicts the clearing guarantee and is a bug"
        )
    return PipelineResult(coloring=coloring, log=log, status="ok")


def sublist_condition_lhs(max_degree, r, slack, sublist_size) -> float:
    """Left side of the degree condition the sublist argument needs."""
    if min(max_degree, r, slack, sublist_size) <= 0:
        raise ValueError("all parameters must be positive")
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if slack < r - 1:
        raise ValueError(f"slack {slack} below the floor r-1 = {r - 1}")
    total = sublist_size + slack
    return ((r + 1) * math.log(max_degree) + (r - 1) * math.log(r) + 1) * (
        (total / slack) ** (r - 1)
    )


def sublist_condition_holds(max_degree, min_degree, r, slack, sublist_size) -> bool:
    """Degree condition under which resampling is expected to clear.

    Reads: ((r+1) ln Delta + (r-1) ln r + 1) * ((l+s)/s)^(r-1) <= delta,
    with l the sublist size and s the slack.  When it holds, lists of size
    l + s + r - 2 suffice for an r-dynamic list coloring.
    """
    if min_degree <= 0:
        raise ValueError("all parameters must be positive")
    return sublist_condition_lhs(max_degree, r, slack, sublist_size) <= min_degree


def fixed_set_hits_all_bound(sublist_size, slack, r, min_degree) -> float:
    """Bound on the chance one fixed (r-1)-color-set hits every neighbor sublist.

    Report-only diagnostic: (1 - (s/(l+s))^(r-1))^delta.
    """
    total = sublist_size + slack
    miss = (slack / total) ** (r - 1)
    return (1 - miss) ** min_degree


def bad_event_bound(sublist_size, slack, r, min_degree) -> float:
    """Union bound on the bad-event probability at one vertex.

    Report-only diagnostic: (l+s+r-2)^(r-1) * exp(-delta * (s/(l+s))^(r-1)).
    """
    total = sublist_size + slack
    miss = (slack / total) ** (r - 1)
    return (total + r - 2) ** (r - 1) * math.exp(-min_degree * miss)
