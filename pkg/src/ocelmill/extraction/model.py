"""Event, object, and log types for object-centric extraction.

A log keeps every event once, however many objects it touches; the omap is
what ties an event to its purchase order, its invoice, its vendor.  All
three types are frozen: a log is assembled, then read.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Dict, Mapping, Sequence

OCEL_VERSION = "1.0"


@dataclass(frozen=True)
class Event:
    """One row-level fact: an activity happened at a time to some objects."""

    id: str
    activity: str
    timestamp: datetime
    omap: Sequence[str]
    vmap: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "omap", tuple(self.omap))
        object.__setattr__(self, "vmap", dict(self.vmap))
        if not self.id:
            raise ValueError("event id must be non-empty")
        if not self.omap:
            raise ValueError(f"event {self.id}: omap must reference >= 1 object")
        if self.timestamp.tzinfo is None:
            raise ValueError(f"event {self.id}: timestamp must be timezone-aware")
        object.__setattr__(
            self, "timestamp", self.timestamp.astimezone(timezone.utc)
        )


@dataclass(frozen=True)
class ObjectInstance:
    """A business object referenced by events, e.g. one purchase order."""

    id: str
    type: str
    ovmap: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ovmap", dict(self.ovmap))
        if not self.id:
            raise ValueError("object id must be non-empty")
        if not self.type:
            raise ValueError(f"object {self.id}: type must be non-empty")


def object_id(object_type: str, key_values: Sequence[str]) -> str:
    return f"{object_type}:{'/'.join(key_values)}"


def event_id(table: str, key_values: Sequence[str]) -> str:
    return f"{table}:{'/'.join(key_values)}"


@dataclass(frozen=True)
class ObjectCentricLog:
    """An immutable, fully cross-referenced object-centric event log."""

    events: Sequence[Event]
    objects: Sequence[ObjectInstance]
    attribute_names: Sequence[str] = ()
    object_types: Sequence[str] = ()
    version: str = OCEL_VERSION

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attribute_names", tuple(self.attribute_names))
        object.__setattr__(self, "object_types", tuple(self.object_types))

        by_id: Dict[str, ObjectInstance] = {}
        for instance in self.objects:
            if instance.id in by_id:
                raise ValueError(f"duplicate object id: {instance.id}")
            by_id[instance.id] = instance

        seen = set()
        previous = None
        for event in self.events:
            if event.id in seen:
                raise ValueError(f"duplicate event id: {event.id}")
            seen.add(event.id)
            key = (event.timestamp, event.id)
            if previous is not None and key < previous:
                raise ValueError("events are not sorted by (timestamp, id)")
            previous = key
            for oid in event.omap:
                if oid not in by_id:
                    raise ValueError(
                        f"event {event.id}: omap id {oid} has no objects entry"
                    )

        names = set(self.attribute_names)
        for event in self.events:
            missing = set(event.vmap) - names
            if missing:
                raise ValueError(
                    f"event {event.id}: vmap keys {sorted(missing)} "
                    "missing from attribute_names"
                )
        for instance in self.objects:
            missing = set(instance.ovmap) - names
            if missing:
                raise ValueError(
                    f"object {instance.id}: ovmap keys {sorted(missing)} "
                    "missing from attribute_names"
                )
        types = set(self.object_types)
        for instance in self.objects:
            if instance.type not in types:
                raise ValueError(
                    f"object {instance.id}: type {instance.type} "
                    "missing from object_types"
                )

    def object_index(self) -> Dict[str, ObjectInstance]:
        return {instance.id: instance for instance in self.objects}
