"""Labeled property graph over tables and document classes."""

from ocelmill.graph.model import Edge, Node, SchemaGraph
from ocelmill.graph.build import build_graph, induced_subgraph
from ocelmill.graph.traverse import expand, expansion_depths, hub_degree_default
from ocelmill.graph.layout import LayoutResult, layout
from ocelmill.graph.export import subgraph_export, graph_document_bytes

__all__ = [
    "Edge",
    "Node",
    "SchemaGraph",
    "build_graph",
    "induced_subgraph",
    "expand",
    "expansion_depths",
    "hub_degree_default",
    "LayoutResult",
    "layout",
    "subgraph_export",
    "graph_document_bytes",
]
