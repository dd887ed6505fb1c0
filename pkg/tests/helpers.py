"""Shared test scaffolding: tiny builders and independent oracles.

The oracles here are deliberately naive re-implementations (linear scans,
set-based reachability) so tests compare the package against something
obviously correct rather than against itself.
"""

from __future__ import annotations

from ocelmill.graph.model import Edge, Node, SchemaGraph, TRAVERSAL_KINDS
from ocelmill.ingestion.model import ColumnDefinition, TableDefinition


def table(name: str, columns: str, keys: str) -> TableDefinition:
    """Build a TableDefinition from compact specs: "A:code,B:date:n" / "A,B"."""
    cols = []
    for spec in columns.split(","):
        parts = spec.split(":")
        cols.append(
            ColumnDefinition(
                name=parts[0],
                domain=parts[1],
                nullable=len(parts) > 2 and parts[2] == "n",
            )
        )
    return TableDefinition(
        name=name,
        description=f"test table {name}",
        columns=tuple(cols),
        key_columns=tuple(keys.split(",")),
    )


def graph_of(nodes: list[str], edges: list[tuple[str, str]], kind: str = "fk_link") -> SchemaGraph:
    g = SchemaGraph()
    for node_id in nodes:
        g.add_node(Node(id=node_id, kind="table", label=node_id))
    for a, b in edges:
        g.add_edge(Edge(a=a, b=b, kind=kind))
    return g


def random_graph(rng, max_nodes: int = 200, max_edges: int = 2000):
    """A random simple fk-link graph plus its node-id list."""
    n = rng.randrange(2, max_nodes + 1)
    nodes = [f"N{i}" for i in range(n)]
    edge_count = rng.randrange(0, min(max_edges, n * (n - 1) // 2) + 1)
    pairs = set()
    while len(pairs) < edge_count:
        a, b = rng.sample(range(n), 2)
        pairs.add((min(a, b), max(a, b)))
    return graph_of(nodes, [(f"N{a}", f"N{b}") for a, b in pairs]), nodes


def reachable_oracle(
    graph: SchemaGraph,
    seeds: set[str],
    depth: int,
    hub_limit: int | None,
) -> set[str]:
    """Brute-force BFS over traversal edges with hub suppression.

    Recomputes frontier sets from scratch each level: a node is expandable
    when it is a seed or its fk-degree does not exceed the limit; hubs can be
    reached but never traversed through.
    """
    reached = set(seeds)
    frontier = set(seeds)
    for _ in range(depth):
        nxt = set()
        for node in frontier:
            expandable = node in seeds or (
                hub_limit is None or graph.fk_degree(node) <= hub_limit
            )
            if not expandable:
                continue
            for edge in graph.edges.values():
                if edge.kind not in TRAVERSAL_KINDS:
                    continue
                if node == edge.a and edge.b not in reached:
                    nxt.add(edge.b)
                if node == edge.b and edge.a not in reached:
                    nxt.add(edge.a)
        reached |= nxt
        frontier = nxt
    return reached
