"""Disk persistence for table selections.

Selections are stored one JSON file per selection under a directory the
caller owns.  ``save`` mints a fresh identifier every time; ``put`` writes
under a caller-chosen identifier so long-lived selections can be updated
in place.
"""

from __future__ import annotations

import json
import secrets
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from ocelmill.errors import StorageFailure, UnknownSelection
from ocelmill.identify.selection import SelectionEntry, TableSelection

_ID_BYTES = 8


def selection_to_document(selection: TableSelection, id: Optional[str] = None) -> dict:
    """Render a selection as its canonical JSON document."""
    return {
        "id": id if id is not None else selection.id,
        "class_id": selection.class_id,
        "entries": [
            {
                "table": entry.table,
                "provenance": entry.provenance,
                "depth": entry.depth,
                "included": entry.included,
            }
            for entry in selection.entries
        ],
        "created": selection.created.isoformat(),
        "modified": selection.modified.isoformat(),
    }


def selection_from_document(document: dict) -> TableSelection:
    try:
        entries = tuple(
            SelectionEntry(
                table=item["table"],
                provenance=item["provenance"],
                depth=item["depth"],
                included=item["included"],
            )
            for item in document["entries"]
        )
        return TableSelection(
            class_id=document["class_id"],
            entries=entries,
            id=document["id"],
            created=datetime.fromisoformat(document["created"]),
            modified=datetime.fromisoformat(document["modified"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise StorageFailure(f"malformed selection document: {exc}") from exc


class SelectionStore:
    """One-file-per-selection JSON store."""

    def __init__(self, directory: Path) -> None:
        self.directory = Path(directory)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageFailure(f"cannot create {self.directory}: {exc}") from exc

    def _path(self, selection_id: str) -> Path:
        if not selection_id or any(ch in selection_id for ch in "/\\."):
            raise UnknownSelection(selection_id)
        return self.directory / f"{selection_id}.json"

    def save(self, selection: TableSelection) -> str:
        """Persist under a newly minted identifier and return it."""
        selection_id = secrets.token_hex(_ID_BYTES)
        self.put(selection_id, selection)
        return selection_id

    def put(self, selection_id: str, selection: TableSelection) -> None:
        """Persist under the given identifier, replacing any prior version."""
        document = selection_to_document(selection, id=selection_id)
        path = self._path(selection_id)
        try:
            path.write_text(
                json.dumps(document, indent=2, ensure_ascii=False) + "\n",
                encoding="utf-8",
            )
        except OSError as exc:
            raise StorageFailure(f"cannot write {path}: {exc}") from exc

    def load(self, selection_id: str) -> TableSelection:
        path = self._path(selection_id)
        if not path.exists():
            raise UnknownSelection(selection_id)
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise StorageFailure(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise StorageFailure(f"corrupt selection file {path}: {exc}") from exc
        return selection_from_document(document)

    def list_ids(self) -> List[str]:
        try:
            return sorted(path.stem for path in self.directory.glob("*.json"))
        except OSError as exc:
            raise StorageFailure(f"cannot list {self.directory}: {exc}") from exc
