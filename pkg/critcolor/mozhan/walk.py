"""
The counter-driven swap walk.

Starting from a minimal colouring with a low singleton x_0, step i works in
group p_i (1 when i is odd, 2 when i is even): pick a low x_{i+1} in
Z_{p_i}(x_i) - x_i minimising q, then distance within the component, then
vertex index; swap it with x_i and set q(x_i) = q(x_{i+1}) + 1. The walk
stops at the first step with p_i = 2 where some low z in Z_2(x_i) - x_i has
q(z) = 1.
"""

import logging
from typing import List, Optional

from critcolor.core.budget import Budget
from critcolor.core.errors import (
    CritcolorError,
    DegreeConditionFails,
    ImproperResult,
    InitialColoringNotFound,
    NotInComponent,
    PreconditionViolated,
    Timeout,
)
from critcolor.coloring.solver import chromatic_number
from critcolor.graph.formats import to_graph6
from critcolor.graph.graph_core import Graph, VertexSet, _check_vertex, distances_within, max_degree
from critcolor.mozhan.moves import swap, z_component, z_degree
from critcolor.mozhan.partition import PartitionedColoring, PartitionScheme, SearchMode, internal_edges
from critcolor.mozhan.search import find_minimal_partitioned_coloring
from critcolor.mozhan.trace import (
    WalkStep,
    WalkTrace,
    form_broken,
    no_eligible_vertex,
    step_cap_exceeded,
    stop_condition_met,
)
from critcolor.structure.predicates import low_vertices

logger = logging.getLogger(__name__)

# graphs up to this order get a certified initial colouring by default
EXACT_LIMIT = 12

# walks below this max degree run outside the theorem's hypothesis
THEOREM_MIN_DEGREE = 6


def parity(i: int) -> int:
    return 1 if i % 2 else 2


def mozhan_walk(
    G: Graph,
    x: int,
    max_steps: Optional[int] = None,
    mode: Optional[SearchMode] = None,
    seed: int = 0,
    budget: Optional[Budget] = None,
    promote_high: bool = False,
) -> WalkTrace:
    """
    Run the swap walk from vertex x.

    Args:
        G: a graph with chi(G) = max degree >= 5
        x: start vertex, normally low
        max_steps: step cap, 10 * n when omitted
        mode: how the initial minimal colouring is found; EXACT up to
            EXACT_LIMIT vertices and LOCAL_SEARCH beyond when omitted
        seed: local search seed
        budget: allowance for the exact solvers
        promote_high: when x is high, first swap it onto a low vertex

    Raises:
        PreconditionViolated, InitialColoringNotFound, Timeout
    """
    _check_vertex(G, x)
    delta = max_degree(G)
    chi, _ = chromatic_number(G, budget)
    if chi != delta:
        raise PreconditionViolated(f"walk needs chi == max degree, got chi={chi}, max degree={delta}")
    scheme = PartitionScheme.for_max_degree(delta)
    if min(scheme.group_sizes) < 2:
        raise PreconditionViolated(f"scheme {scheme.group_sizes} is too small; max degree must be at least 5")
    outside = delta < THEOREM_MIN_DEGREE
    if outside:
        logger.warning(f"max degree {delta} is below {THEOREM_MIN_DEGREE}; walk runs outside the theorem's range")

    low = low_vertices(G, chi)
    high = len(G.adj[x]) >= chi
    if x not in low and not (promote_high and high):
        raise PreconditionViolated(f"start vertex {x} is not low", x)

    if mode is None:
        mode = SearchMode.EXACT if G.n <= EXACT_LIMIT else SearchMode.LOCAL_SEARCH
    mode = SearchMode(mode)
    try:
        pi = find_minimal_partitioned_coloring(G, scheme, x, mode, seed, budget, chi=chi)
    except Timeout:
        raise
    except CritcolorError as e:
        raise InitialColoringNotFound(f"no minimal colouring with singleton {x}: {e}") from e

    promoted_from = None
    if x not in low:
        pi = _promote(G, pi, low)
        promoted_from, x = x, pi.singleton
        logger.info(f"promoted high start vertex {promoted_from} to low vertex {x}")

    trace = WalkTrace(
        n=G.n,
        graph6=to_graph6(G),
        start=x,
        group_sizes=list(scheme.group_sizes),
        mode=mode.value,
        seed=seed,
        max_steps=max_steps if max_steps is not None else 10 * G.n,
        initial_objective=internal_edges(G, pi),
        outside_theorem_range=outside,
        promoted_from=promoted_from,
    )
    _run(G, pi, low, trace)
    return trace


def _promote(G: Graph, pi: PartitionedColoring, low: VertexSet) -> PartitionedColoring:
    """Swap a high singleton onto the nearest low vertex of a group meeting the degree condition."""
    x = pi.singleton
    for i in range(1, pi.scheme.groups + 1):
        Z = z_component(G, pi, x, i)
        if z_degree(G, Z, x) != pi.scheme.size(i):
            continue
        dist = distances_within(G, Z, x)
        for y in sorted((v for v in Z if v != x and v in low), key=lambda v: (dist[v], v)):
            try:
                return swap(G, pi, y)
            except ImproperResult:
                continue
    raise PreconditionViolated(f"high vertex {x} cannot be swapped onto a low vertex", x)


def _run(G: Graph, pi: PartitionedColoring, low: VertexSet, trace: WalkTrace) -> None:
    q: List[int] = [0] * G.n
    trace.snapshots.append(pi.coloring.assignment)
    xi = pi.singleton
    i = 0

    while True:
        p = parity(i)
        Z = z_component(G, pi, xi, p)
        eligible = sorted(v for v in Z if v != xi and v in low)

        if p == 2:
            hits = [z for z in eligible if q[z] == 1]
            if hits:
                trace.outcome = stop_condition_met(i, hits[0])
                break
        if i >= trace.max_steps:
            trace.outcome = step_cap_exceeded(i)
            break
        r = pi.scheme.size(p)
        if z_degree(G, Z, xi) != r:
            trace.outcome = form_broken(i, f"d_Z{p}({xi}) = {z_degree(G, Z, xi)}, expected {r}")
            break
        if not eligible:
            trace.outcome = no_eligible_vertex(i)
            break

        dist = distances_within(G, Z, xi)
        chosen = min(eligible, key=lambda v: (q[v], dist[v], v))
        try:
            nxt = swap(G, pi, chosen)
        except (DegreeConditionFails, NotInComponent, ImproperResult) as e:
            trace.outcome = form_broken(i, str(e))
            break

        before = q[xi]
        q[xi] = q[chosen] + 1
        trace.q_excursion = max(trace.q_excursion, q[xi])
        trace.steps.append(
            WalkStep(
                index=i,
                parity=p,
                singleton=xi,
                chosen=chosen,
                q_value=q[chosen],
                distance=dist[chosen],
                snapshot=len(trace.snapshots),
                q_update=(xi, before, q[xi]),
            )
        )
        trace.snapshots.append(nxt.coloring.assignment)
        logger.debug(f"step {i}: p={p} swap {xi} -> {chosen}, q[{xi}] {before} -> {q[xi]}")
        pi, xi = nxt, chosen
        i += 1

    trace.q_final = {v: q[v] for v in range(G.n)}
    if trace.q_excursion > 1:
        logger.info(f"walk from {trace.start}: q excursion {trace.q_excursion}")
    logger.info(f"walk from {trace.start} ended after {len(trace.steps)} steps: {trace.outcome.kind}")
