"""Domain types for schema metadata.

All identifiers (table and column names) are uppercase, matching the
convention of ERP data dictionaries. Column semantics are captured by a
closed set of domain tags; the `client` domain marks tenant-discriminator
columns that must never drive relationship inference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ocelmill.errors import ParseError

# Closed enumeration of column domains.
DOMAINS = frozenset({
    "client",
    "document-number",
    "item-number",
    "year",
    "date",
    "time",
    "amount",
    "quantity",
    "currency",
    "unit",
    "code",
    "identifier",
    "text",
    "flag",
})

# Tenant discriminator; excluded from relationship inference.
CLIENT_DOMAIN = "client"

# Reserved document-class id naming the change-log header/item tables.
CHANGE_DOCUMENTS_CLASS = "__change_documents__"

_IDENT_RE = re.compile(r"^[A-Z][A-Z0-9_]*$")
_CLASS_ID_RE = re.compile(r"^[a-z_][a-z0-9_]*$")


def _check_ident(name: str, what: str, line: int | None = None) -> str:
    if not _IDENT_RE.match(name or ""):
        raise ParseError(f"invalid {what} name: {name!r}", line)
    return name


@dataclass(frozen=True)
class ColumnDefinition:
    """One column: uppercase name, semantic domain tag, nullability."""

    name: str
    domain: str
    nullable: bool = False

    def __post_init__(self):
        _check_ident(self.name, "column")
        if self.domain not in DOMAINS:
            raise ParseError(f"column {self.name}: unknown domain {self.domain!r}")


@dataclass(frozen=True)
class TableDefinition:
    """A table: ordered columns plus the ordered subset forming its key."""

    name: str
    description: str
    columns: tuple[ColumnDefinition, ...]
    key_columns: tuple[str, ...]

    def __post_init__(self):
        _check_ident(self.name, "table")
        seen: set[str] = set()
        for col in self.columns:
            if col.name in seen:
                raise ParseError(f"table {self.name}: duplicate column {col.name}")
            seen.add(col.name)
        for key in self.key_columns:
            if key not in seen:
                raise ParseError(f"table {self.name}: key column {key} not among columns")

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(col.name for col in self.columns)

    def column(self, name: str) -> ColumnDefinition:
        for col in self.columns:
            if col.name == name:
                return col
        raise KeyError(name)

    def key_domains(self) -> dict[str, str]:
        """Key column name -> domain, preserving key order."""
        by_name = {col.name: col.domain for col in self.columns}
        return {key: by_name[key] for key in self.key_columns}


@dataclass(frozen=True)
class RelationshipRecord:
    """A join path between two tables over equal-length column lists."""

    from_table: str
    from_columns: tuple[str, ...]
    to_table: str
    to_columns: tuple[str, ...]
    origin: str = "declared"  # declared | inferred

    def __post_init__(self):
        if self.origin not in ("declared", "inferred"):
            raise ParseError(f"relationship origin must be declared or inferred, got {self.origin!r}")

    @property
    def endpoint_pair(self) -> frozenset[str]:
        return frozenset((self.from_table, self.to_table))


@dataclass(frozen=True)
class DocumentClassRecord:
    """A business document concept mapped to its member tables.

    `change_tracked` marks whether the change-log tables record edits to this
    class's documents; it defaults to true and only matters for building
    change-log links in the schema graph.
    """

    class_id: str
    label: str
    member_tables: tuple[str, ...]
    change_tracked: bool = True

    def __post_init__(self):
        if not _CLASS_ID_RE.match(self.class_id or ""):
            raise ParseError(f"invalid document class id: {self.class_id!r}")
        if not self.member_tables:
            raise ParseError(f"document class {self.class_id} has no member tables")

    @property
    def reserved(self) -> bool:
        return self.class_id == CHANGE_DOCUMENTS_CLASS


@dataclass
class Catalog:
    """Validated table catalog with name-based lookup."""

    tables: dict[str, TableDefinition] = field(default_factory=dict)

    @classmethod
    def from_definitions(cls, definitions: list[TableDefinition]) -> "Catalog":
        catalog = cls()
        for definition in definitions:
            catalog.tables[definition.name] = definition
        return catalog

    def __contains__(self, name: str) -> bool:
        return name in self.tables

    def __getitem__(self, name: str) -> TableDefinition:
        return self.tables[name]

    def names(self) -> list[str]:
        return list(self.tables)
