"""In-memory labeled property graph with per-node adjacency indexes.

Nodes and edges carry kind labels and string properties. The graph is built
once and then treated as immutable; adjacency is indexed per node so that
neighborhood queries never scan the full edge set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ocelmill.errors import UnknownNode

NODE_KINDS = ("table", "document_class")
EDGE_KINDS = ("fk_link", "class_member", "change_log_link")

# Edge kinds that traversal (expansion) follows.
TRAVERSAL_KINDS = frozenset({"fk_link", "change_log_link"})


@dataclass(frozen=True)
class Node:
    id: str
    kind: str
    label: str
    properties: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    kind: str
    properties: dict[str, str] = field(default_factory=dict)

    @property
    def endpoint_pair(self) -> frozenset[str]:
        return frozenset((self.a, self.b))

    def other(self, node_id: str) -> str:
        return self.b if node_id == self.a else self.a


class SchemaGraph:
    """Node set, edge set, and a per-node edge index kept in lockstep."""

    def __init__(self):
        self.nodes: dict[str, Node] = {}
        self.edges: dict[tuple[frozenset, str], Edge] = {}
        self.adjacency: dict[str, list[Edge]] = {}

    # --- construction (single writer, before first read) --------------------

    def add_node(self, node: Node) -> None:
        if node.id in self.nodes:
            raise ValueError(f"node {node.id} already present")
        if node.kind not in NODE_KINDS:
            raise ValueError(f"unknown node kind: {node.kind}")
        self.nodes[node.id] = node
        self.adjacency[node.id] = []

    def add_edge(self, edge: Edge) -> bool:
        """Insert an edge; returns False when an equivalent edge exists.

        At most one edge per (endpoint pair, kind). Self-loops are rejected
        for fk_link; class_member must connect a document_class and a table.
        """
        for endpoint in (edge.a, edge.b):
            if endpoint not in self.nodes:
                raise UnknownNode(endpoint)
        if edge.kind not in EDGE_KINDS:
            raise ValueError(f"unknown edge kind: {edge.kind}")
        if edge.kind == "fk_link" and edge.a == edge.b:
            return False
        if edge.kind == "class_member":
            kinds = {self.nodes[edge.a].kind, self.nodes[edge.b].kind}
            if kinds != {"document_class", "table"}:
                raise ValueError("class_member must connect a document_class and a table")
        key = (edge.endpoint_pair, edge.kind)
        if key in self.edges:
            return False
        self.edges[key] = edge
        self.adjacency[edge.a].append(edge)
        if edge.a != edge.b:
            self.adjacency[edge.b].append(edge)
        return True

    # --- queries -------------------------------------------------------------

    def __contains__(self, node_id: str) -> bool:
        return node_id in self.nodes

    def node(self, node_id: str) -> Node:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNode(node_id) from None

    def edges_of(self, node_id: str, kinds: set[str] | frozenset[str] | None = None) -> list[Edge]:
        if node_id not in self.nodes:
            raise UnknownNode(node_id)
        incident = self.adjacency[node_id]
        if kinds is None:
            return list(incident)
        return [edge for edge in incident if edge.kind in kinds]

    def neighbors(self, node_id: str, kinds: set[str] | frozenset[str]) -> set[str]:
        """Node ids sharing an edge of one of the requested kinds with node_id."""
        return {edge.other(node_id) for edge in self.edges_of(node_id, kinds)}

    def fk_degree(self, node_id: str) -> int:
        return len(self.edges_of(node_id, {"fk_link"}))

    def table_ids(self) -> list[str]:
        return [node.id for node in self.nodes.values() if node.kind == "table"]

    def class_ids(self) -> list[str]:
        return [node.id for node in self.nodes.values() if node.kind == "document_class"]

    def rebuild_adjacency(self) -> dict[str, list[Edge]]:
        """Recompute the index from the edge set; used to audit consistency."""
        fresh: dict[str, list[Edge]] = {node_id: [] for node_id in self.nodes}
        for edge in self.edges.values():
            fresh[edge.a].append(edge)
            if edge.a != edge.b:
                fresh[edge.b].append(edge)
        return fresh
