"""Declarative extraction configuration.

The config says, per table: what activity a row stands for, where its
timestamp lives, which objects it touches, which columns survive into the
log, and which rows to keep.  Nothing in here is a query; the extraction
surface is selections, configs, and datasets only.

JSON shape (see README for the full schema):

    {
      "tables": {
        "EKKO": {
          "activity": {"static": "Create Purchase Order"},
          "timestamp": {"date": "AEDAT", "time": "AEZEIT"},
          "objects": [{"type": "purchase_order", "keys": ["EBELN"],
                       "attributes": ["WAERS"]}],
          "attributes": ["BSART"],
          "filters": [{"column": "BSART", "op": "=", "value": "NB"}]
        },
        "LFA1": {
          "objects_only": true,
          "objects": [{"type": "vendor", "keys": ["LIFNR"],
                       "attributes": ["NAME1"]}]
        }
      },
      "changes": {
        "header_table": "CDHDR", "item_table": "CDPOS",
        "pairing_keys": ["CHANGENR"],
        "timestamp": {"date": "UDATE", "time": "UTIME"},
        "object_class_column": "OBJECTCLAS",
        "object_id_column": "OBJECTID",
        "field_column": "FNAME",
        "object_types": {"purchase_orders": "purchase_order"},
        "header_attributes": ["USERNAME"],
        "item_attributes": ["VALUE_OLD", "VALUE_NEW"]
      }
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ocelmill.errors import ConfigError, UnknownFilterColumn
from ocelmill.identify.selection import TableSelection
from ocelmill.ingestion.model import Catalog, TableDefinition

FILTER_OPERATORS = frozenset({"=", "≠", "in", "date-range"})


@dataclass(frozen=True)
class ActivityRule:
    """Static label, or a template with {COLUMN} placeholders."""

    kind: str
    value: str

    def __post_init__(self) -> None:
        if self.kind not in ("static", "template"):
            raise ConfigError(f"unknown activity rule kind: {self.kind}")
        if not self.value:
            raise ConfigError("activity rule value must be non-empty")


@dataclass(frozen=True)
class TimestampRule:
    date_column: str
    time_column: Optional[str] = None


@dataclass(frozen=True)
class ObjectRule:
    object_type: str
    key_columns: Tuple[str, ...]
    attributes: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.object_type:
            raise ConfigError("object rule needs a type name")
        if not self.key_columns:
            raise ConfigError(
                f"object rule for type {self.object_type} needs key columns"
            )


@dataclass(frozen=True)
class FilterRule:
    """Row predicate: =, ≠ (alias !=), in, or an inclusive date-range."""

    column: str
    operator: str
    value: Optional[str] = None
    values: Tuple[str, ...] = ()
    lower: Optional[date] = None
    upper: Optional[date] = None

    def __post_init__(self) -> None:
        if self.operator not in FILTER_OPERATORS:
            raise ConfigError(f"unknown filter operator: {self.operator}")
        if self.operator in ("=", "≠") and self.value is None:
            raise ConfigError(f"filter {self.operator} on {self.column} needs a value")
        if self.operator == "in" and not self.values:
            raise ConfigError(f"filter in on {self.column} needs a value list")
        if self.operator == "date-range" and self.lower is None and self.upper is None:
            raise ConfigError(
                f"date-range filter on {self.column} needs a from or to bound"
            )


@dataclass(frozen=True)
class TableRule:
    """Extraction rules for one table.

    Event tables carry activity + timestamp rules; objects-only tables
    contribute object instances (master data) but no events.
    """

    table: str
    activity: Optional[ActivityRule] = None
    timestamp: Optional[TimestampRule] = None
    objects: Tuple[ObjectRule, ...] = ()
    attributes: Tuple[str, ...] = ()
    filters: Tuple[FilterRule, ...] = ()
    objects_only: bool = False

    def __post_init__(self) -> None:
        if not self.objects:
            raise ConfigError(f"table {self.table}: at least one object rule required")
        if self.objects_only:
            if self.activity is not None or self.timestamp is not None:
                raise ConfigError(
                    f"table {self.table}: objects-only tables take no "
                    "activity or timestamp rule"
                )
            if self.attributes:
                raise ConfigError(
                    f"table {self.table}: objects-only tables carry attributes "
                    "on their object rules, not the table"
                )
        else:
            if self.activity is None or self.timestamp is None:
                raise ConfigError(
                    f"table {self.table}: activity and timestamp rules required "
                    "(or mark the table objects_only)"
                )


@dataclass(frozen=True)
class ChangeRule:
    """Header/item change-document extraction: one event per item row."""

    header_table: str
    item_table: str
    pairing_keys: Tuple[str, ...]
    timestamp: TimestampRule
    object_class_column: str
    object_id_column: str
    field_column: str
    object_types: Mapping[str, str]
    header_attributes: Tuple[str, ...] = ()
    item_attributes: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "object_types", dict(self.object_types))
        if not self.pairing_keys:
            raise ConfigError("change rule needs pairing keys")
        if not self.object_types:
            raise ConfigError("change rule needs an object class -> type map")


@dataclass(frozen=True)
class ExtractionConfig:
    tables: Mapping[str, TableRule] = field(default_factory=dict)
    changes: Optional[ChangeRule] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "tables", dict(self.tables))
        for name, rule in self.tables.items():
            if name != rule.table:
                raise ConfigError(f"table rule for {rule.table} filed under {name}")


# --- parsing ------------------------------------------------------------------


def _parse_date(text: str, context: str) -> date:
    try:
        return date.fromisoformat(text)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{context}: bad date {text!r}") from exc


def _parse_activity(raw: dict, table: str) -> ActivityRule:
    if not isinstance(raw, dict):
        raise ConfigError(f"table {table}: activity rule must be an object")
    if "static" in raw:
        return ActivityRule(kind="static", value=raw["static"])
    if "template" in raw:
        return ActivityRule(kind="template", value=raw["template"])
    raise ConfigError(f"table {table}: activity rule needs 'static' or 'template'")


def _parse_timestamp(raw: dict, context: str) -> TimestampRule:
    if not isinstance(raw, dict) or "date" not in raw:
        raise ConfigError(f"{context}: timestamp rule needs a 'date' column")
    return TimestampRule(date_column=raw["date"], time_column=raw.get("time"))


def _parse_object(raw: dict, table: str) -> ObjectRule:
    if not isinstance(raw, dict) or "type" not in raw or "keys" not in raw:
        raise ConfigError(f"table {table}: object rule needs 'type' and 'keys'")
    return ObjectRule(
        object_type=raw["type"],
        key_columns=tuple(raw["keys"]),
        attributes=tuple(raw.get("attributes", ())),
    )


def _parse_filter(raw: dict, table: str) -> FilterRule:
    if not isinstance(raw, dict) or "column" not in raw or "op" not in raw:
        raise ConfigError(f"table {table}: filter needs 'column' and 'op'")
    operator = raw["op"]
    if operator == "!=":
        operator = "≠"
    column = raw["column"]
    if operator == "date-range":
        lower = raw.get("from")
        upper = raw.get("to")
        return FilterRule(
            column=column,
            operator=operator,
            lower=_parse_date(lower, f"filter on {table}.{column}")
            if lower is not None
            else None,
            upper=_parse_date(upper, f"filter on {table}.{column}")
            if upper is not None
            else None,
        )
    if operator == "in":
        values = raw.get("values")
        if not isinstance(values, list):
            raise ConfigError(f"table {table}: in-filter needs a 'values' list")
        return FilterRule(column=column, operator=operator, values=tuple(values))
    return FilterRule(column=column, operator=operator, value=raw.get("value"))


def _parse_table_rule(name: str, raw: dict) -> TableRule:
    if not isinstance(raw, dict):
        raise ConfigError(f"table {name}: rule must be an object")
    unknown = set(raw) - {
        "activity", "timestamp", "objects", "attributes", "filters", "objects_only",
    }
    if unknown:
        raise ConfigError(f"table {name}: unknown keys {sorted(unknown)}")
    return TableRule(
        table=name,
        activity=_parse_activity(raw["activity"], name) if "activity" in raw else None,
        timestamp=_parse_timestamp(raw["timestamp"], f"table {name}")
        if "timestamp" in raw
        else None,
        objects=tuple(_parse_object(item, name) for item in raw.get("objects", ())),
        attributes=tuple(raw.get("attributes", ())),
        filters=tuple(_parse_filter(item, name) for item in raw.get("filters", ())),
        objects_only=bool(raw.get("objects_only", False)),
    )


def _parse_changes(raw: dict) -> ChangeRule:
    if not isinstance(raw, dict):
        raise ConfigError("changes block must be an object")
    required = {
        "header_table", "item_table", "pairing_keys", "timestamp",
        "object_class_column", "object_id_column", "field_column", "object_types",
    }
    missing = required - set(raw)
    if missing:
        raise ConfigError(f"changes block missing keys {sorted(missing)}")
    object_types = raw["object_types"]
    if not isinstance(object_types, dict):
        raise ConfigError("changes.object_types must map class ids to type names")
    return ChangeRule(
        header_table=raw["header_table"],
        item_table=raw["item_table"],
        pairing_keys=tuple(raw["pairing_keys"]),
        timestamp=_parse_timestamp(raw["timestamp"], "changes block"),
        object_class_column=raw["object_class_column"],
        object_id_column=raw["object_id_column"],
        field_column=raw["field_column"],
        object_types=dict(object_types),
        header_attributes=tuple(raw.get("header_attributes", ())),
        item_attributes=tuple(raw.get("item_attributes", ())),
    )


def parse_extraction_config(source) -> ExtractionConfig:
    """Parse a config from a dict, JSON text/bytes, or a file path."""
    if isinstance(source, Path):
        source = source.read_text(encoding="utf-8")
    if isinstance(source, (bytes, bytearray)):
        source = source.decode("utf-8")
    if isinstance(source, str):
        try:
            source = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(source, dict):
        raise ConfigError("config root must be a JSON object")
    unknown = set(source) - {"tables", "changes"}
    if unknown:
        raise ConfigError(f"unknown top-level config keys {sorted(unknown)}")
    tables_raw = source.get("tables", {})
    if not isinstance(tables_raw, dict):
        raise ConfigError("'tables' must map table names to rules")
    tables = {
        name: _parse_table_rule(name, raw) for name, raw in tables_raw.items()
    }
    changes = _parse_changes(source["changes"]) if "changes" in source else None
    return ExtractionConfig(tables=tables, changes=changes)


# --- validation against catalog and selection ----------------------------------


def _require_column(definition: TableDefinition, column: str, context: str) -> None:
    if column not in definition.column_names:
        raise ConfigError(f"{context}: {definition.name} has no column {column}")


def _check_table_rule(rule: TableRule, definition: TableDefinition) -> None:
    if rule.timestamp is not None:
        _require_column(definition, rule.timestamp.date_column, "timestamp rule")
        if rule.timestamp.time_column is not None:
            _require_column(definition, rule.timestamp.time_column, "timestamp rule")
    if rule.activity is not None and rule.activity.kind == "template":
        for placeholder in _template_columns(rule.activity.value):
            _require_column(definition, placeholder, "activity template")
    for obj in rule.objects:
        for column in obj.key_columns:
            _require_column(definition, column, f"object rule {obj.object_type}")
        for column in obj.attributes:
            _require_column(definition, column, f"object rule {obj.object_type}")
    for column in rule.attributes:
        _require_column(definition, column, "attribute list")
    for flt in rule.filters:
        if flt.column not in definition.column_names:
            raise UnknownFilterColumn(definition.name, flt.column)


def _template_columns(template: str) -> Sequence[str]:
    import string

    names = []
    for _, name, _, _ in string.Formatter().parse(template):
        if name is not None:
            if not name:
                raise ConfigError("activity template placeholders must be named")
            names.append(name)
    return names


def validate_config(
    config: ExtractionConfig,
    selection: TableSelection,
    catalog: Catalog,
) -> None:
    """Check a config against the selection it will run over.

    Every included table must be covered, either by a table rule or by the
    change block; config must not reach outside the included set.
    """
    included = set(selection.included_tables())
    if not included:
        raise ConfigError("selection has no included tables")

    covered: Dict[str, str] = {}
    for name in config.tables:
        covered[name] = "table rule"
    if config.changes is not None:
        for name in (config.changes.header_table, config.changes.item_table):
            if name in covered:
                raise ConfigError(f"table {name} covered twice (rule and change block)")
            covered[name] = "change block"

    for name in covered:
        if name not in catalog:
            raise ConfigError(f"config references unknown table {name}")
        if name not in included:
            raise ConfigError(f"config references table {name} outside the selection")
    for name in sorted(included - set(covered)):
        raise ConfigError(f"included table {name} has no extraction rule")

    for name, rule in config.tables.items():
        _check_table_rule(rule, catalog[name])

    if config.changes is not None:
        changes = config.changes
        header = catalog[changes.header_table]
        item = catalog[changes.item_table]
        for key in changes.pairing_keys:
            _require_column(header, key, "change pairing key")
            _require_column(item, key, "change pairing key")
        _require_column(header, changes.timestamp.date_column, "change timestamp")
        if changes.timestamp.time_column is not None:
            _require_column(header, changes.timestamp.time_column, "change timestamp")
        _require_column(header, changes.object_class_column, "change object class")
        _require_column(header, changes.object_id_column, "change object id")
        _require_column(item, changes.field_column, "change field")
        for column in changes.header_attributes:
            _require_column(header, column, "change header attribute")
        for column in changes.item_attributes:
            _require_column(item, column, "change item attribute")
