"""Breadth-first expansion over relational links with hub suppression."""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

from ocelmill.errors import UnknownNode
from ocelmill.graph.model import TRAVERSAL_KINDS, SchemaGraph


def expansion_depths(
    graph: SchemaGraph,
    seed: Iterable[str],
    depth: int,
    hub_degree_limit: int | None = None,
) -> dict[str, int]:
    """Tables reachable within `depth` hops, mapped to their BFS distance.

    Traversal follows fk_link and change_log_link edges. A node whose
    fk-degree exceeds `hub_degree_limit` is never traversed through: it is
    included when reached but contributes no further hops. Seed nodes always
    expand, hub or not, because a path start is not a path interior.
    depth=0 returns the seed itself at distance 0.
    """
    seed_set = set(seed)
    for node_id in seed_set:
        if node_id not in graph or graph.node(node_id).kind != "table":
            raise UnknownNode(node_id)
    if depth < 0:
        raise ValueError("depth must be >= 0")

    def expandable(node_id: str) -> bool:
        if node_id in seed_set:
            return True
        if hub_degree_limit is None:
            return True
        return graph.fk_degree(node_id) <= hub_degree_limit

    distances = {node_id: 0 for node_id in seed_set}
    frontier: deque[str] = deque(seed_set)
    for level in range(1, depth + 1):
        next_frontier: deque[str] = deque()
        while frontier:
            node_id = frontier.popleft()
            if not expandable(node_id):
                continue
            for neighbor in graph.neighbors(node_id, TRAVERSAL_KINDS):
                if neighbor not in distances:
                    distances[neighbor] = level
                    next_frontier.append(neighbor)
        if not next_frontier:
            break
        frontier = next_frontier
    return distances


def expand(
    graph: SchemaGraph,
    seed: Iterable[str],
    depth: int,
    hub_degree_limit: int | None = None,
) -> set[str]:
    """Tables reachable from the seed within `depth` hops; see expansion_depths."""
    return set(expansion_depths(graph, seed, depth, hub_degree_limit))


def hub_degree_default(graph: SchemaGraph) -> int | None:
    """Default hub limit: 95th percentile of fk-degree over table nodes."""
    degrees = sorted(graph.fk_degree(node_id) for node_id in graph.table_ids())
    if not degrees:
        return None
    # Linear-interpolated percentile, rounded up so the limit is attainable.
    rank = 0.95 * (len(degrees) - 1)
    low = int(math.floor(rank))
    high = int(math.ceil(rank))
    value = degrees[low] + (degrees[high] - degrees[low]) * (rank - low)
    return int(math.ceil(value))
