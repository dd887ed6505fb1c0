"""Canonical JSON export of induced subgraphs, the feed for any UI."""

from __future__ import annotations

import json
from typing import Iterable

from ocelmill.errors import UnknownNode
from ocelmill.graph.layout import LayoutResult
from ocelmill.graph.model import SchemaGraph


def subgraph_export(
    graph: SchemaGraph,
    ids: Iterable[str],
    layout: LayoutResult | None = None,
) -> dict:
    """Graph document for the subgraph induced by `ids`.

    Nodes are sorted lexicographically by id, edges by (a, b, kind) with
    endpoints in lexicographic orientation, so equal inputs produce equal
    documents. When a layout is given it must cover every exported node.
    """
    id_set = set(ids)
    for node_id in id_set:
        if node_id not in graph:
            raise UnknownNode(node_id)

    nodes = []
    for node_id in sorted(id_set):
        node = graph.node(node_id)
        entry: dict = {"id": node.id, "kind": node.kind, "label": node.label}
        if layout is not None:
            if node_id not in layout.positions:
                raise UnknownNode(node_id)
            x, y = layout.positions[node_id]
            entry["x"] = x
            entry["y"] = y
        nodes.append(entry)

    edges = []
    for edge in graph.edges.values():
        if edge.a in id_set and edge.b in id_set:
            a, b = sorted((edge.a, edge.b))
            edges.append({"a": a, "b": b, "kind": edge.kind})
    edges.sort(key=lambda e: (e["a"], e["b"], e["kind"]))

    return {"nodes": nodes, "edges": edges}


def graph_document_bytes(document: dict) -> bytes:
    """Serialize a graph document to its canonical UTF-8 byte form."""
    return (json.dumps(document, ensure_ascii=False, indent=2) + "\n").encode("utf-8")
