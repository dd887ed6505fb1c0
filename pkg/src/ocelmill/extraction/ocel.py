"""Canonical OCEL JSON serialization and validation.

One byte form per log: fixed top-level key order, events ordered by
(timestamp, id), objects and attribute maps sorted by key.  Serializing,
parsing, and serializing again reproduces the bytes exactly.

The validator walks the whole document and reports every violation with a
path; it never stops at the first finding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Sequence

from ocelmill.extraction.model import (
    Event,
    ObjectCentricLog,
    ObjectInstance,
    OCEL_VERSION,
)

TOP_LEVEL_KEYS = (
    "ocel:global-log",
    "ocel:version",
    "ocel:attribute-names",
    "ocel:object-types",
    "ocel:events",
    "ocel:objects",
)


def _timestamp_text(stamp: datetime) -> str:
    return stamp.isoformat()


def log_to_document(log: ObjectCentricLog) -> dict:
    """Render a log as a plain dict in canonical key order."""
    events: Dict[str, dict] = {}
    for event in log.events:
        events[event.id] = {
            "ocel:activity": event.activity,
            "ocel:timestamp": _timestamp_text(event.timestamp),
            "ocel:omap": list(event.omap),
            "ocel:vmap": {key: event.vmap[key] for key in sorted(event.vmap)},
        }
    objects: Dict[str, dict] = {}
    for instance in sorted(log.objects, key=lambda entry: entry.id):
        objects[instance.id] = {
            "ocel:type": instance.type,
            "ocel:ovmap": {
                key: instance.ovmap[key] for key in sorted(instance.ovmap)
            },
        }
    names = sorted(log.attribute_names)
    types = sorted(log.object_types)
    return {
        "ocel:global-log": {
            "ocel:attribute-names": names,
            "ocel:object-types": types,
            "ocel:ordering": "timestamp",
            "ocel:version": log.version,
        },
        "ocel:version": log.version,
        "ocel:attribute-names": names,
        "ocel:object-types": types,
        "ocel:events": events,
        "ocel:objects": objects,
    }


def serialize_ocel(log: ObjectCentricLog) -> bytes:
    document = log_to_document(log)
    return (json.dumps(document, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def parse_ocel(data) -> ObjectCentricLog:
    """Rebuild a log from OCEL JSON bytes, text, or an already-parsed dict."""
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("OCEL document root must be a JSON object")
    events = []
    for event_id, body in data.get("ocel:events", {}).items():
        events.append(
            Event(
                id=event_id,
                activity=body["ocel:activity"],
                timestamp=datetime.fromisoformat(body["ocel:timestamp"]),
                omap=tuple(body["ocel:omap"]),
                vmap=dict(body.get("ocel:vmap", {})),
            )
        )
    objects = []
    for object_id, body in data.get("ocel:objects", {}).items():
        objects.append(
            ObjectInstance(
                id=object_id,
                type=body["ocel:type"],
                ovmap=dict(body.get("ocel:ovmap", {})),
            )
        )
    events.sort(key=lambda event: (event.timestamp, event.id))
    return ObjectCentricLog(
        events=events,
        objects=sorted(objects, key=lambda instance: instance.id),
        attribute_names=tuple(data.get("ocel:attribute-names", ())),
        object_types=tuple(data.get("ocel:object-types", ())),
        version=data.get("ocel:version", OCEL_VERSION),
    )


# --- validation -----------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    path: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    findings: Sequence[Finding] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "findings", tuple(self.findings))

    @property
    def ok(self) -> bool:
        return not self.findings

    def to_document(self) -> dict:
        return {
            "findings": [
                {"path": finding.path, "message": finding.message}
                for finding in self.findings
            ]
        }


def _check_string_list(value, path: str, findings: List[Finding]) -> List[str]:
    if not isinstance(value, list) or any(
        not isinstance(item, str) for item in value
    ):
        findings.append(Finding(path, "must be a list of strings"))
        return []
    return value


def _check_events(
    events, names: set, object_ids: set, findings: List[Finding]
) -> None:
    if not isinstance(events, dict):
        findings.append(Finding("ocel:events", "must be an object keyed by event id"))
        return
    previous = None
    for event_id, body in events.items():
        path = f"ocel:events/{event_id}"
        if not isinstance(body, dict):
            findings.append(Finding(path, "event body must be an object"))
            continue
        for key in ("ocel:activity", "ocel:timestamp", "ocel:omap", "ocel:vmap"):
            if key not in body:
                findings.append(Finding(f"{path}/{key}", "missing required key"))

        stamp = None
        raw = body.get("ocel:timestamp")
        if raw is not None:
            try:
                stamp = datetime.fromisoformat(raw)
            except (TypeError, ValueError):
                findings.append(
                    Finding(f"{path}/ocel:timestamp", f"not an ISO-8601 instant: {raw!r}")
                )
        if stamp is not None:
            key = (stamp, event_id)
            if previous is not None and key < previous:
                findings.append(
                    Finding(
                        "ocel:events",
                        f"event {event_id} out of (timestamp, id) order",
                    )
                )
            previous = key

        omap = body.get("ocel:omap")
        if omap is not None:
            if not isinstance(omap, list) or not omap:
                findings.append(
                    Finding(f"{path}/ocel:omap", "must reference at least one object")
                )
            else:
                for oid in omap:
                    if oid not in object_ids:
                        findings.append(
                            Finding(
                                f"{path}/ocel:omap",
                                f"object {oid} not present in ocel:objects",
                            )
                        )
        vmap = body.get("ocel:vmap")
        if vmap is not None:
            if not isinstance(vmap, dict):
                findings.append(Finding(f"{path}/ocel:vmap", "must be an object"))
            else:
                for key in vmap:
                    if key not in names:
                        findings.append(
                            Finding(
                                f"{path}/ocel:vmap",
                                f"attribute {key} not in ocel:attribute-names",
                            )
                        )


def _check_objects(
    objects, names: set, types: set, findings: List[Finding]
) -> None:
    if not isinstance(objects, dict):
        findings.append(
            Finding("ocel:objects", "must be an object keyed by object id")
        )
        return
    for object_id, body in objects.items():
        path = f"ocel:objects/{object_id}"
        if not isinstance(body, dict):
            findings.append(Finding(path, "object body must be an object"))
            continue
        otype = body.get("ocel:type")
        if not otype or not isinstance(otype, str):
            findings.append(Finding(f"{path}/ocel:type", "missing or empty type"))
        elif otype not in types:
            findings.append(
                Finding(f"{path}/ocel:type", f"type {otype} not in ocel:object-types")
            )
        ovmap = body.get("ocel:ovmap")
        if ovmap is None:
            findings.append(Finding(f"{path}/ocel:ovmap", "missing required key"))
        elif not isinstance(ovmap, dict):
            findings.append(Finding(f"{path}/ocel:ovmap", "must be an object"))
        else:
            for key in ovmap:
                if key not in names:
                    findings.append(
                        Finding(
                            f"{path}/ocel:ovmap",
                            f"attribute {key} not in ocel:attribute-names",
                        )
                    )


def validate_ocel(data) -> ValidationReport:
    """Check an OCEL document against every log invariant.

    Returns all findings at once; an empty findings list means the
    document is valid.
    """
    findings: List[Finding] = []
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            return ValidationReport([Finding("", f"not UTF-8: {exc}")])
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            return ValidationReport([Finding("", f"not valid JSON: {exc}")])
    if not isinstance(data, dict):
        return ValidationReport([Finding("", "root must be a JSON object")])

    for key in TOP_LEVEL_KEYS:
        if key not in data:
            findings.append(Finding(key, "missing required key"))

    version = data.get("ocel:version")
    if version is not None and version != OCEL_VERSION:
        findings.append(
            Finding("ocel:version", f"unsupported version {version!r}")
        )
    global_log = data.get("ocel:global-log")
    if global_log is not None and not isinstance(global_log, dict):
        findings.append(Finding("ocel:global-log", "must be an object"))

    names = set(
        _check_string_list(
            data.get("ocel:attribute-names", []), "ocel:attribute-names", findings
        )
    )
    types = set(
        _check_string_list(
            data.get("ocel:object-types", []), "ocel:object-types", findings
        )
    )
    objects = data.get("ocel:objects", {})
    object_ids = set(objects) if isinstance(objects, dict) else set()

    _check_events(data.get("ocel:events", {}), names, object_ids, findings)
    _check_objects(objects, names, types, findings)
    return ValidationReport(findings)
