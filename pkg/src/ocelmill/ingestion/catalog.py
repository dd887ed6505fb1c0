"""Parsers for the three metadata files plus key-based relationship inference.

Canonical text encoding is UTF-8. The CSV dialect is fixed: comma separated,
double-quote quoting, `|` joining in-cell lists. JSON inputs carry one object
per record with the same field names.
"""

from __future__ import annotations

import csv
import io
import json
from typing import BinaryIO, Iterable

from ocelmill.errors import (
    ArityMismatch,
    DuplicateTable,
    MissingKeyColumns,
    ParseError,
    UnknownColumn,
    UnknownTable,
)
from ocelmill.ingestion.model import (
    CLIENT_DOMAIN,
    ColumnDefinition,
    DocumentClassRecord,
    RelationshipRecord,
    TableDefinition,
)

CATALOG_HEADER = ["name", "description", "columns", "key_columns"]
RELATIONSHIP_HEADER = ["from_table", "from_columns", "to_table", "to_columns"]
CLASS_HEADER = ["class_id", "label", "member_tables"]
CLASS_HEADER_FLAGGED = CLASS_HEADER + ["change_tracked"]

_TRUE = {"true", "1", "yes"}
_FALSE = {"false", "0", "no"}


def _text_lines(source: bytes | BinaryIO) -> io.TextIOWrapper | io.StringIO:
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8"))
    return io.TextIOWrapper(source, encoding="utf-8", newline="")


def _read_json(source: bytes | BinaryIO):
    raw = source if isinstance(source, (bytes, bytearray)) else source.read()
    try:
        return json.loads(raw.decode("utf-8") if isinstance(raw, (bytes, bytearray)) else raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc


def _csv_rows(source, expected_header: list[str], alt_header: list[str] | None = None):
    """Yield (line_number, row) after validating the header row."""
    stream = _text_lines(source)
    reader = csv.reader(stream, delimiter=",", quotechar='"')
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty file, expected a header row", 1)
    header = [cell.strip() for cell in header]
    if header != expected_header and (alt_header is None or header != alt_header):
        raise ParseError(f"unexpected header {header}, expected {expected_header}", 1)
    for row in reader:
        if not row or all(cell.strip() == "" for cell in row):
            continue
        yield reader.line_num, [cell.strip() for cell in row], len(header)


def _split_list(cell: str) -> list[str]:
    return [part for part in cell.split("|") if part != ""]


def _parse_column_spec(spec: str, line: int) -> ColumnDefinition:
    parts = spec.split(":")
    if len(parts) == 2:
        name, domain = parts
        nullable = False
    elif len(parts) == 3:
        name, domain, flag = parts
        if flag != "nullable":
            raise ParseError(f"column spec {spec!r}: third segment must be 'nullable'", line)
        nullable = True
    else:
        raise ParseError(f"malformed column spec {spec!r}, expected NAME:DOMAIN[:nullable]", line)
    try:
        return ColumnDefinition(name=name, domain=domain, nullable=nullable)
    except ParseError as exc:
        raise ParseError(str(exc), line) from exc


def parse_table_catalog(source: bytes | BinaryIO, format: str = "csv") -> list[TableDefinition]:
    """Parse a table catalog, returning definitions in file order.

    Raises ParseError on malformed input, DuplicateTable on repeated names,
    MissingKeyColumns when a table declares no key.
    """
    definitions: list[TableDefinition] = []
    seen: set[str] = set()

    if format == "json":
        records = _read_json(source)
        if not isinstance(records, list):
            raise ParseError("catalog JSON must be a list of objects")
        for record in records:
            columns = tuple(
                ColumnDefinition(
                    name=col["name"],
                    domain=col["domain"],
                    nullable=bool(col.get("nullable", False)),
                )
                for col in record.get("columns", [])
            )
            definition = _finish_table(
                record.get("name", ""),
                record.get("description", ""),
                columns,
                tuple(record.get("key_columns", [])),
                seen,
                line=None,
            )
            definitions.append(definition)
        return definitions

    if format != "csv":
        raise ParseError(f"unknown catalog format: {format!r}")

    for line, row, width in _csv_rows(source, CATALOG_HEADER):
        if len(row) != width:
            raise ParseError(f"expected {width} cells, got {len(row)}", line)
        name, description, columns_cell, keys_cell = row
        columns = tuple(_parse_column_spec(spec, line) for spec in _split_list(columns_cell))
        definition = _finish_table(
            name, description, columns, tuple(_split_list(keys_cell)), seen, line
        )
        definitions.append(definition)
    return definitions


def _finish_table(name, description, columns, key_columns, seen, line) -> TableDefinition:
    if name in seen:
        raise DuplicateTable(name)
    if not key_columns:
        raise MissingKeyColumns(name)
    try:
        definition = TableDefinition(
            name=name, description=description, columns=columns, key_columns=key_columns
        )
    except ParseError as exc:
        raise ParseError(str(exc), line) from exc
    seen.add(name)
    return definition


def serialize_table_catalog(definitions: Iterable[TableDefinition]) -> bytes:
    """Write a catalog back to its canonical CSV form (round-trip safe)."""
    out = io.StringIO()
    writer = csv.writer(out, delimiter=",", quotechar='"', lineterminator="\n")
    writer.writerow(CATALOG_HEADER)
    for definition in definitions:
        columns_cell = "|".join(
            f"{col.name}:{col.domain}:nullable" if col.nullable else f"{col.name}:{col.domain}"
            for col in definition.columns
        )
        writer.writerow(
            [
                definition.name,
                definition.description,
                columns_cell,
                "|".join(definition.key_columns),
            ]
        )
    return out.getvalue().encode("utf-8")


def _resolve_columns(table: TableDefinition, columns: Iterable[str]):
    names = set(table.column_names)
    for column in columns:
        if column not in names:
            raise UnknownColumn(table.name, column)


def parse_relationships(
    source: bytes | BinaryIO,
    catalog: dict[str, TableDefinition],
    format: str = "csv",
) -> list[RelationshipRecord]:
    """Parse declared relationships against an already-loaded catalog."""
    records: list[RelationshipRecord] = []

    def build(index: int, from_table, from_columns, to_table, to_columns) -> RelationshipRecord:
        for table in (from_table, to_table):
            if table not in catalog:
                raise UnknownTable(table)
        if len(from_columns) != len(to_columns) or not from_columns:
            raise ArityMismatch(index)
        _resolve_columns(catalog[from_table], from_columns)
        _resolve_columns(catalog[to_table], to_columns)
        return RelationshipRecord(
            from_table=from_table,
            from_columns=tuple(from_columns),
            to_table=to_table,
            to_columns=tuple(to_columns),
            origin="declared",
        )

    if format == "json":
        data = _read_json(source)
        if not isinstance(data, list):
            raise ParseError("relationships JSON must be a list of objects")
        for index, record in enumerate(data):
            records.append(
                build(
                    index,
                    record.get("from_table", ""),
                    list(record.get("from_columns", [])),
                    record.get("to_table", ""),
                    list(record.get("to_columns", [])),
                )
            )
        return records

    for index, (line, row, width) in enumerate(_csv_rows(source, RELATIONSHIP_HEADER)):
        if len(row) != width:
            raise ParseError(f"expected {width} cells, got {len(row)}", line)
        from_table, from_cell, to_table, to_cell = row
        records.append(
            build(index, from_table, _split_list(from_cell), to_table, _split_list(to_cell))
        )
    return records


def parse_document_classes(
    source: bytes | BinaryIO,
    catalog: dict[str, TableDefinition],
    format: str = "csv",
) -> list[DocumentClassRecord]:
    """Parse the document-class registry.

    The optional fourth CSV column (`change_tracked`) defaults to true; the
    canonical three-column header remains valid input.
    """
    records: list[DocumentClassRecord] = []
    seen: set[str] = set()

    def build(class_id, label, member_tables, change_tracked, line=None) -> DocumentClassRecord:
        if class_id in seen:
            raise ParseError(f"duplicate document class: {class_id}", line)
        for table in member_tables:
            if table not in catalog:
                raise UnknownTable(table)
        seen.add(class_id)
        return DocumentClassRecord(
            class_id=class_id,
            label=label,
            member_tables=tuple(member_tables),
            change_tracked=change_tracked,
        )

    if format == "json":
        data = _read_json(source)
        if not isinstance(data, list):
            raise ParseError("document-class JSON must be a list of objects")
        for record in data:
            records.append(
                build(
                    record.get("class_id", ""),
                    record.get("label", ""),
                    list(record.get("member_tables", [])),
                    bool(record.get("change_tracked", True)),
                )
            )
        return records

    for line, row, width in _csv_rows(source, CLASS_HEADER, CLASS_HEADER_FLAGGED):
        if len(row) != width:
            raise ParseError(f"expected {width} cells, got {len(row)}", line)
        if width == 3:
            class_id, label, members_cell = row
            tracked = True
        else:
            class_id, label, members_cell, flag = row
            low = flag.lower()
            if low in _TRUE:
                tracked = True
            elif low in _FALSE:
                tracked = False
            else:
                raise ParseError(f"change_tracked must be boolean, got {flag!r}", line)
        records.append(build(class_id, label, _split_list(members_cell), tracked, line))
    return records


def infer_relationships(
    catalog: list[TableDefinition] | dict[str, TableDefinition],
    min_shared_keys: int = 1,
) -> list[RelationshipRecord]:
    """Infer table links from shared key columns.

    Two tables are linked when their key columns share at least
    `min_shared_keys` (name, domain) pairs, ignoring client-discriminator
    columns. Each unordered pair yields one record, oriented from the
    lexicographically smaller table name; output is sorted by
    (from_table, to_table) and therefore deterministic.
    """
    if min_shared_keys < 1:
        raise ValueError("min_shared_keys must be >= 1")
    definitions = list(catalog.values()) if isinstance(catalog, dict) else list(catalog)
    records: list[RelationshipRecord] = []
    ordered = sorted(definitions, key=lambda d: d.name)
    for i, left in enumerate(ordered):
        left_keys = {
            name: domain
            for name, domain in left.key_domains().items()
            if domain != CLIENT_DOMAIN
        }
        for right in ordered[i + 1:]:
            shared = [
                name
                for name, domain in right.key_domains().items()
                if domain != CLIENT_DOMAIN and left_keys.get(name) == domain
            ]
            if len(shared) >= min_shared_keys:
                shared_in_left_order = [name for name in left_keys if name in set(shared)]
                records.append(
                    RelationshipRecord(
                        from_table=left.name,
                        from_columns=tuple(shared_in_left_order),
                        to_table=right.name,
                        to_columns=tuple(shared_in_left_order),
                        origin="inferred",
                    )
                )
    records.sort(key=lambda r: (r.from_table, r.to_table))
    return records


def merge_relationships(
    declared: list[RelationshipRecord],
    inferred: list[RelationshipRecord],
) -> list[RelationshipRecord]:
    """Combine declared and inferred links; declared wins on shared endpoints."""
    declared_pairs = {record.endpoint_pair for record in declared}
    merged = list(declared)
    merged.extend(r for r in inferred if r.endpoint_pair not in declared_pairs)
    return merged
