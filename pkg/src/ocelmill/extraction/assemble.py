"""Merging per-table extraction results into one log.

The merge is the single-threaded barrier at the end of extraction: events
from all sources are deduplicated by id, sorted by (timestamp, id), and
checked against the referenced objects.
"""

from __future__ import annotations

from typing import Dict, Iterable, List

from ocelmill.errors import DuplicateEventId
from ocelmill.extraction.model import Event, ObjectCentricLog, ObjectInstance


def merge_objects(
    object_sets: Iterable[Iterable[ObjectInstance]],
) -> List[ObjectInstance]:
    """Deduplicate object instances by id.

    Attribute maps merge key-wise, first writer wins, so input order (and
    nothing else) decides conflicting attribute values.
    """
    merged: Dict[str, ObjectInstance] = {}
    for instances in object_sets:
        for instance in instances:
            existing = merged.get(instance.id)
            if existing is None:
                merged[instance.id] = instance
                continue
            if existing.type != instance.type:
                raise ValueError(
                    f"object {instance.id} seen with types "
                    f"{existing.type} and {instance.type}"
                )
            ovmap = dict(instance.ovmap)
            ovmap.update(existing.ovmap)
            if ovmap != existing.ovmap:
                merged[instance.id] = ObjectInstance(
                    id=instance.id, type=existing.type, ovmap=ovmap
                )
    return list(merged.values())


def assemble_log(
    event_lists: Iterable[Iterable[Event]],
    object_sets: Iterable[Iterable[ObjectInstance]],
) -> ObjectCentricLog:
    """Build the final, invariant-checked log from extraction outputs."""
    events: Dict[str, Event] = {}
    for batch in event_lists:
        for event in batch:
            if event.id in events:
                raise DuplicateEventId(event.id)
            events[event.id] = event

    ordered = sorted(events.values(), key=lambda event: (event.timestamp, event.id))
    objects = sorted(merge_objects(object_sets), key=lambda instance: instance.id)

    names = set()
    for event in ordered:
        names.update(event.vmap)
    for instance in objects:
        names.update(instance.ovmap)
    types = {instance.type for instance in objects}

    return ObjectCentricLog(
        events=ordered,
        objects=objects,
        attribute_names=sorted(names),
        object_types=sorted(types),
    )
