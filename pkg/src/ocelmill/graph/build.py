"""Assemble the schema graph from validated metadata."""

from __future__ import annotations

from typing import Iterable

from ocelmill.graph.model import Edge, Node, SchemaGraph
from ocelmill.ingestion.model import (
    DocumentClassRecord,
    RelationshipRecord,
    TableDefinition,
)


def build_graph(
    catalog: Iterable[TableDefinition],
    relationships: Iterable[RelationshipRecord],
    document_classes: Iterable[DocumentClassRecord] = (),
) -> SchemaGraph:
    """Build the labeled property graph.

    One table node per definition, one document_class node per non-reserved
    class, one fk_link per relationship (duplicates collapse), class_member
    edges for class membership, and change_log_link edges connecting the
    reserved change-document tables to every table of a change-tracked class.
    """
    graph = SchemaGraph()

    for table in catalog:
        graph.add_node(
            Node(
                id=table.name,
                kind="table",
                label=table.name,
                properties={"description": table.description},
            )
        )

    for record in relationships:
        graph.add_edge(
            Edge(
                a=record.from_table,
                b=record.to_table,
                kind="fk_link",
                properties={
                    "from": record.from_table,
                    "from_columns": "|".join(record.from_columns),
                    "to": record.to_table,
                    "to_columns": "|".join(record.to_columns),
                    "origin": record.origin,
                },
            )
        )

    change_tables: list[str] = []
    tracked_tables: list[str] = []
    for record in document_classes:
        if record.reserved:
            change_tables.extend(record.member_tables)
            continue
        graph.add_node(
            Node(
                id=record.class_id,
                kind="document_class",
                label=record.label,
                properties={"change_tracked": "true" if record.change_tracked else "false"},
            )
        )
        for table in record.member_tables:
            graph.add_edge(Edge(a=record.class_id, b=table, kind="class_member"))
        if record.change_tracked:
            tracked_tables.extend(record.member_tables)

    for change_table in change_tables:
        for table in tracked_tables:
            if table == change_table:
                continue
            graph.add_edge(Edge(a=change_table, b=table, kind="change_log_link"))

    # Cache fk-degree on table nodes for cheap hub classification downstream.
    for node_id in graph.table_ids():
        node = graph.nodes[node_id]
        node.properties["fk_degree"] = str(graph.fk_degree(node_id))

    return graph


def induced_subgraph(graph: SchemaGraph, ids: Iterable[str]) -> SchemaGraph:
    """Subgraph over `ids` keeping every edge with both endpoints inside."""
    sub = SchemaGraph()
    id_set = set(ids)
    for node_id in sorted(id_set):
        sub.add_node(graph.node(node_id))
    for edge in graph.edges.values():
        if edge.a in id_set and edge.b in id_set:
            sub.add_edge(edge)
    return sub
