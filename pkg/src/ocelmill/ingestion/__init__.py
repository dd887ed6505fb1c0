"""Schema metadata parsing and row-data streaming."""

from ocelmill.ingestion.model import (
    CLIENT_DOMAIN,
    Catalog,
    DOMAINS,
    ColumnDefinition,
    DocumentClassRecord,
    RelationshipRecord,
    TableDefinition,
    CHANGE_DOCUMENTS_CLASS,
)
from ocelmill.ingestion.catalog import (
    infer_relationships,
    merge_relationships,
    parse_document_classes,
    parse_relationships,
    parse_table_catalog,
    serialize_table_catalog,
)
from ocelmill.ingestion.rows import RowDataset, load_row_data

__all__ = [
    "CLIENT_DOMAIN",
    "DOMAINS",
    "CHANGE_DOCUMENTS_CLASS",
    "Catalog",
    "ColumnDefinition",
    "DocumentClassRecord",
    "RelationshipRecord",
    "TableDefinition",
    "RowDataset",
    "infer_relationships",
    "merge_relationships",
    "load_row_data",
    "parse_document_classes",
    "parse_relationships",
    "parse_table_catalog",
    "serialize_table_catalog",
]
