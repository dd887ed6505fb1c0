"""Turning filtered rows into events and object instances.

Two producers: one event per row of a business table under its declared
rules, and one event per change-document item joined to its header.  Both
also return the object instances their events reference, so the assembled
log is closed under omap lookups by construction.
"""

from __future__ import annotations

from datetime import date, datetime, time, timezone
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ocelmill.errors import (
    MissingObjectKey,
    OrphanItem,
    UnknownObjectClass,
    UnparsableTimestamp,
)
from ocelmill.extraction.config import (
    ActivityRule,
    ChangeRule,
    ObjectRule,
    TimestampRule,
)
from ocelmill.extraction.filters import FilteredView
from ocelmill.extraction.model import Event, ObjectInstance, event_id, object_id
from ocelmill.ingestion.rows import Row


def _parse_date_cell(cell: str) -> Optional[date]:
    try:
        return date.fromisoformat(cell)
    except ValueError:
        if len(cell) == 8 and cell.isdigit():
            try:
                return date(int(cell[:4]), int(cell[4:6]), int(cell[6:]))
            except ValueError:
                return None
        return None


def _parse_time_cell(cell: str) -> Optional[time]:
    try:
        return time.fromisoformat(cell)
    except ValueError:
        if len(cell) == 6 and cell.isdigit():
            try:
                return time(int(cell[:2]), int(cell[2:4]), int(cell[4:]))
            except ValueError:
                return None
        return None


def build_timestamp(
    rule: TimestampRule, row: Row, table: str, row_number: int
) -> datetime:
    """Combine date and optional time cells into a UTC instant.

    A missing time cell (or no time column at all) means midnight; a
    missing or unparsable date is an error.
    """
    raw_date = row.get(rule.date_column)
    if raw_date is None:
        raise UnparsableTimestamp(
            table, row_number, f"date column {rule.date_column} is empty"
        )
    day = _parse_date_cell(raw_date)
    if day is None:
        raise UnparsableTimestamp(
            table, row_number, f"cannot parse date {raw_date!r} in {rule.date_column}"
        )
    moment = time(0, 0, 0)
    if rule.time_column is not None:
        raw_time = row.get(rule.time_column)
        if raw_time is not None:
            parsed = _parse_time_cell(raw_time)
            if parsed is None:
                raise UnparsableTimestamp(
                    table,
                    row_number,
                    f"cannot parse time {raw_time!r} in {rule.time_column}",
                )
            moment = parsed
    return datetime.combine(day, moment, tzinfo=timezone.utc)


def _render_activity(rule: ActivityRule, row: Row) -> str:
    if rule.kind == "static":
        return rule.value
    values = {name: (value if value is not None else "") for name, value in row.items()}
    return rule.value.format(**values)


def _row_objects(
    rules: Sequence[ObjectRule],
    row: Row,
    table: str,
    row_number: int,
    registry: Dict[str, ObjectInstance],
) -> List[str]:
    """Resolve a row's object references, registering instances as found.

    Attribute maps merge first-writer-wins per key, so the first row that
    mentions an object pins its attributes.
    """
    ids = []
    for rule in rules:
        values = []
        for column in rule.key_columns:
            value = row.get(column)
            if value is None:
                raise MissingObjectKey(table, row_number, column)
            values.append(value)
        oid = object_id(rule.object_type, values)
        ovmap = {
            column: row[column]
            for column in rule.attributes
            if row.get(column) is not None
        }
        existing = registry.get(oid)
        if existing is None:
            registry[oid] = ObjectInstance(id=oid, type=rule.object_type, ovmap=ovmap)
        elif ovmap:
            merged = dict(ovmap)
            merged.update(existing.ovmap)
            if merged != existing.ovmap:
                registry[oid] = ObjectInstance(
                    id=oid, type=existing.type, ovmap=merged
                )
        if oid not in ids:
            ids.append(oid)
    return ids


def extract_table_events(
    view: FilteredView,
    activity: ActivityRule,
    timestamp: TimestampRule,
    objects: Sequence[ObjectRule],
    attributes: Sequence[str] = (),
) -> Tuple[List[Event], List[ObjectInstance]]:
    """One event per filtered row; event id is the table name plus row key."""
    table = view.table
    key_columns = view.definition.key_columns
    registry: Dict[str, ObjectInstance] = {}
    events = []
    for row_number, row in view.rows():
        stamp = build_timestamp(timestamp, row, table, row_number)
        omap = _row_objects(objects, row, table, row_number, registry)
        vmap = {
            column: row[column]
            for column in attributes
            if row.get(column) is not None
        }
        events.append(
            Event(
                id=event_id(table, [row[column] for column in key_columns]),
                activity=_render_activity(activity, row),
                timestamp=stamp,
                omap=omap,
                vmap=vmap,
            )
        )
    return events, list(registry.values())


def extract_objects(
    view: FilteredView, objects: Sequence[ObjectRule]
) -> List[ObjectInstance]:
    """Objects-only extraction for master-data tables: instances, no events."""
    registry: Dict[str, ObjectInstance] = {}
    for row_number, row in view.rows():
        _row_objects(objects, row, view.table, row_number, registry)
    return list(registry.values())


def extract_change_events(
    header_view: FilteredView,
    item_view: FilteredView,
    rule: ChangeRule,
) -> Tuple[List[Event], List[ObjectInstance]]:
    """One "Change <FIELD>" event per item row joined to its header.

    The header names the changed business object as an (object class,
    object id) pair; the rule's class map resolves the class to an object
    type.  Headers for classes outside the map are an error, as are items
    with no header.
    """
    headers: Dict[tuple, tuple] = {}
    for row_number, row in header_view.rows():
        key = tuple(row.get(column) for column in rule.pairing_keys)
        headers[key] = (row_number, row)

    registry: Dict[str, ObjectInstance] = {}
    events = []
    item_keys = item_view.definition.key_columns
    for row_number, row in item_view.rows():
        key = tuple(row.get(column) for column in rule.pairing_keys)
        if key not in headers:
            raise OrphanItem(key)
        header_number, header = headers[key]

        object_class = header.get(rule.object_class_column)
        if object_class is None or object_class not in rule.object_types:
            raise UnknownObjectClass(str(object_class))
        object_type = rule.object_types[object_class]
        raw_id = header.get(rule.object_id_column)
        if raw_id is None:
            raise MissingObjectKey(
                header_view.table, header_number, rule.object_id_column
            )
        oid = object_id(object_type, [raw_id])
        if oid not in registry:
            registry[oid] = ObjectInstance(id=oid, type=object_type)

        field = row.get(rule.field_column)
        if field is None:
            raise MissingObjectKey(item_view.table, row_number, rule.field_column)
        stamp = build_timestamp(
            rule.timestamp, header, header_view.table, header_number
        )
        vmap: Dict[str, str] = {}
        for column in rule.header_attributes:
            if header.get(column) is not None:
                vmap[column] = header[column]
        for column in rule.item_attributes:
            if row.get(column) is not None:
                vmap[column] = row[column]
        events.append(
            Event(
                id=event_id(
                    item_view.table, [row[column] for column in item_keys]
                ),
                activity=f"Change {field}",
                timestamp=stamp,
                omap=[oid],
                vmap=vmap,
            )
        )
    return events, list(registry.values())
