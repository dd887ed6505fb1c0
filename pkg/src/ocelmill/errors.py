"""Exception hierarchy shared across the package.

Every error carries enough context (table, line, row number) to point a user
at the offending input without a stack trace.
"""

from __future__ import annotations


class OcelmillError(Exception):
    """Base class for all package errors."""


# --- metadata ingestion -----------------------------------------------------

class ParseError(OcelmillError):
    """Malformed input file; `line` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        suffix = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{suffix}")


class DuplicateTable(OcelmillError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate table definition: {name}")


class MissingKeyColumns(OcelmillError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"table {name} declares no key columns")


class UnknownTable(OcelmillError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown table: {name}")


class ArityMismatch(OcelmillError):
    """Relationship whose column lists have different lengths."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"relationship record {index}: column lists differ in length")


class RowCapExceeded(OcelmillError):
    def __init__(self, table: str, cap: int):
        self.table = table
        self.cap = cap
        super().__init__(f"table {table} exceeds the row cap of {cap}")


class MissingKeyValue(OcelmillError):
    def __init__(self, table: str, row: int, column: str):
        self.table = table
        self.row = row
        self.column = column
        super().__init__(f"table {table}, row {row}: key column {column} is empty")


class UnknownColumn(OcelmillError):
    def __init__(self, table: str, column: str):
        self.table = table
        self.column = column
        super().__init__(f"table {table} has no column {column}")


# --- schema graph -----------------------------------------------------------

class UnknownNode(OcelmillError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"unknown graph node: {node_id}")


# --- process identification -------------------------------------------------

class UnknownClass(OcelmillError):
    def __init__(self, class_id: str):
        self.class_id = class_id
        super().__init__(f"unknown document class: {class_id}")


class UnknownSelection(OcelmillError):
    def __init__(self, selection_id: str):
        self.selection_id = selection_id
        super().__init__(f"unknown selection: {selection_id}")


class StorageFailure(OcelmillError):
    """Selection store could not read or write its backing file."""


# --- extraction -------------------------------------------------------------

class ConfigError(OcelmillError):
    """Extraction config violates its contract against catalog or selection."""


class UnknownFilterColumn(OcelmillError):
    def __init__(self, table: str, column: str):
        self.table = table
        self.column = column
        super().__init__(f"filter on {table}.{column}: no such column")


class FilterTypeMismatch(OcelmillError):
    def __init__(self, table: str, column: str, detail: str):
        self.table = table
        self.column = column
        super().__init__(f"filter on {table}.{column}: {detail}")


class UnparsableTimestamp(OcelmillError):
    def __init__(self, table: str, row: int, detail: str):
        self.table = table
        self.row = row
        super().__init__(f"table {table}, row {row}: {detail}")


class MissingObjectKey(OcelmillError):
    def __init__(self, table: str, row: int, column: str):
        self.table = table
        self.row = row
        self.column = column
        super().__init__(f"table {table}, row {row}: object key column {column} is empty")


class OrphanItem(OcelmillError):
    def __init__(self, item_key: tuple):
        self.item_key = item_key
        super().__init__(f"change item {item_key} has no matching header")


class UnknownObjectClass(OcelmillError):
    def __init__(self, object_class: str):
        self.object_class = object_class
        super().__init__(f"change header names unmapped object class: {object_class}")


class DuplicateEventId(OcelmillError):
    def __init__(self, event_id: str):
        self.event_id = event_id
        super().__init__(f"duplicate event id: {event_id}")
