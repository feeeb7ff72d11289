"""
Recolouring moves on partitioned colourings: the Z-component, Kempe path
shifts and the singleton swap.
"""

import logging
from typing import List, Sequence

from critcolor.core.errors import (
    DegreeConditionFails,
    ImproperResult,
    NotInComponent,
    ObjectiveChanged,
    PreconditionViolated,
)
from critcolor.coloring.coloring import is_proper
from critcolor.graph.graph_core import Graph, VertexSet, _check_vertex, component_of
from critcolor.mozhan.partition import SINGLETON_COLOR, PartitionedColoring, internal_edges

logger = logging.getLogger(__name__)


def z_component(G: Graph, pi: PartitionedColoring, v: int, i: int) -> VertexSet:
    """The component of G[{v} ∪ U_i] containing v."""
    pi.scheme.colors_of_group(i)
    _check_vertex(G, v)
    return component_of(G, pi.group_union(i) | {v}, v)


def z_degree(G: Graph, Z: VertexSet, v: int) -> int:
    """d_Z(v): neighbours of v inside Z."""
    return len(G.adj[v] & Z)


def kempe_path_recolor(G: Graph, pi: PartitionedColoring, path: Sequence[int], i: int) -> PartitionedColoring:
    """
    Shift colours one step back along a path x_1..x_t in Z_i.

    Each x_k with k < t takes the colour of x_{k+1} and x_t takes the colour of
    x_1. Every x_k with k < t must have exactly one neighbour in each class of
    group i other than its own. If x_1 is the singleton, x_t becomes the new
    singleton.

    Raises:
        PreconditionViolated: the path or the neighbour condition is not met.
        ImproperResult: the shifted colouring is not proper.
    """
    path: List[int] = list(path)
    if not path:
        raise PreconditionViolated("Kempe path is empty")
    if len(set(path)) != len(path):
        raise PreconditionViolated("Kempe path repeats a vertex")

    x = pi.singleton
    Z = z_component(G, pi, x, i)
    for v in path:
        if v not in Z:
            raise PreconditionViolated(f"vertex {v} is not in Z_{i}", v)
    for a, b in zip(path, path[1:]):
        if b not in G.adj[a]:
            raise PreconditionViolated(f"{a} and {b} are not adjacent", b)
    if x in path[1:]:
        raise PreconditionViolated("the singleton may only start the path", x)

    group_colors = set(pi.group_colors(i))
    for v in path[:-1]:
        own = pi.color(v)
        for c in sorted(group_colors - {own}):
            hits = sum(1 for u in G.adj[v] if pi.color(u) == c)
            if hits != 1:
                raise PreconditionViolated(f"vertex {v} has {hits} neighbours of colour {c}, needs 1", v)

    if len(path) == 1:
        return pi

    assignment = list(pi.coloring.assignment)
    for a, b in zip(path, path[1:]):
        assignment[a] = pi.color(b)
    assignment[path[-1]] = pi.color(path[0])

    result = pi.with_assignment(assignment)
    if not is_proper(G, result.coloring):
        raise ImproperResult(f"Kempe shift along {path} is not proper")
    return result


def swap(G: Graph, pi: PartitionedColoring, y: int) -> PartitionedColoring:
    """
    Exchange the singleton x with y ∈ Z_i − x, where i is the group of y's colour.

    x takes y's colour and y becomes the singleton. The result must stay
    proper and keep the number of internal edges.

    Raises:
        NotInComponent: y is the singleton or lies outside Z_i.
        DegreeConditionFails: d_{Z_i}(x) != r_i.
        ImproperResult: the swap breaks properness (ObjectiveChanged if it
            only changes the objective).
    """
    _check_vertex(G, y)
    x = pi.singleton
    if y == x:
        raise NotInComponent(f"vertex {y} is already the singleton")

    i = pi.group_of_vertex(y)
    Z = z_component(G, pi, x, i)
    if y not in Z:
        raise NotInComponent(f"vertex {y} is not in Z_{i}(x={x})")
    r = pi.scheme.size(i)
    d = z_degree(G, Z, x)
    if d != r:
        raise DegreeConditionFails(f"d_Z{i}({x}) = {d}, expected r_{i} = {r}")

    assignment = list(pi.coloring.assignment)
    assignment[x] = pi.color(y)
    assignment[y] = SINGLETON_COLOR
    result = pi.with_assignment(assignment, provenance=pi.provenance)

    if not is_proper(G, result.coloring):
        raise ImproperResult(f"swapping {x} and {y} is not proper")
    before, after = internal_edges(G, pi), internal_edges(G, result)
    if before != after:
        raise ObjectiveChanged(f"swapping {x} and {y} moved the objective from {before} to {after}")
    logger.debug(f"swap x={x} -> y={y} in group {i}")
    return result
