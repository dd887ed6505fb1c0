"""Table selections: seeded from a document class, grown by graph expansion,
and curated by hand.

A selection is an ordered list of entries, one per table, each tagged with
how the table got there (``seed``, ``expansion``, or ``manual``) and whether
it is currently included.  All operations return new selection objects; the
inputs are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from typing import Dict, Iterable, List, Optional, Sequence

from ocelmill.errors import UnknownClass, UnknownTable
from ocelmill.graph.model import SchemaGraph
from ocelmill.graph.traverse import expansion_depths
from ocelmill.ingestion.model import DocumentClassRecord

PROVENANCES = frozenset({"seed", "expansion", "manual"})

# Registry of seedable document classes, keyed by class id.
ClassRegistry = Dict[str, DocumentClassRecord]


def _utcnow() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


@dataclass(frozen=True)
class SelectionEntry:
    """One table in a selection and the story of how it got there."""

    table: str
    provenance: str
    depth: Optional[int] = None
    included: bool = True

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        # Depth is meaningful only for expansion entries.
        if self.provenance == "expansion":
            if self.depth is None or self.depth < 1:
                raise ValueError("expansion entries need a depth >= 1")
        elif self.depth is not None:
            raise ValueError(f"{self.provenance} entries carry no depth")


@dataclass(frozen=True)
class SeedSelection:
    """The resolved starting point: a class and its member tables."""

    class_id: str
    label: str
    tables: Sequence[str]


@dataclass(frozen=True)
class TableSelection:
    """A curated set of tables describing one process.

    ``id`` stays None until the selection is persisted.  Entries are unique
    per table; order is insertion order (seeds first, then expansion waves,
    then manual additions).
    """

    class_id: str
    entries: Sequence[SelectionEntry] = field(default_factory=tuple)
    id: Optional[str] = None
    created: datetime = field(default_factory=_utcnow)
    modified: datetime = field(default_factory=_utcnow)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        seen = set()
        for entry in self.entries:
            if entry.table in seen:
                raise ValueError(f"duplicate selection entry for {entry.table}")
            seen.add(entry.table)

    def entry_for(self, table: str) -> Optional[SelectionEntry]:
        for entry in self.entries:
            if entry.table == table:
                return entry
        return None

    def tables(self) -> List[str]:
        return [entry.table for entry in self.entries]

    def included_tables(self) -> List[str]:
        return [entry.table for entry in self.entries if entry.included]


def resolve_seed(registry: ClassRegistry, class_id: str) -> SeedSelection:
    """Look up a document class and return its seed tables.

    The change-document bookkeeping class is not a process and cannot seed
    a selection.
    """
    record = registry.get(class_id)
    if record is None or record.reserved:
        raise UnknownClass(class_id)
    return SeedSelection(
        class_id=record.class_id,
        label=record.label,
        tables=tuple(record.member_tables),
    )


def selection_from_seed(
    seed: SeedSelection, now: Optional[datetime] = None
) -> TableSelection:
    """Start a fresh selection containing exactly the seed tables."""
    stamp = now or _utcnow()
    entries = tuple(
        SelectionEntry(table=table, provenance="seed") for table in seed.tables
    )
    return TableSelection(
        class_id=seed.class_id, entries=entries, created=stamp, modified=stamp
    )


def expand_selection(
    selection: TableSelection,
    graph: SchemaGraph,
    depth: int,
    hub_degree_limit: Optional[int] = None,
    now: Optional[datetime] = None,
) -> TableSelection:
    """Grow a selection by breadth-first expansion from its included tables.

    Newly reached tables are appended as included ``expansion`` entries
    tagged with their distance from the nearest expansion start.  Existing
    entries are left exactly as they are, excluded ones included.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    starts = selection.included_tables()
    if not starts:
        raise ValueError("selection has no included tables to expand from")
    known = {entry.table for entry in selection.entries}
    reached = expansion_depths(graph, starts, depth, hub_degree_limit)
    additions = []
    for table in sorted(reached):
        if table in known:
            continue
        additions.append(
            SelectionEntry(
                table=table, provenance="expansion", depth=reached[table]
            )
        )
    if not additions:
        return selection
    return replace(
        selection,
        entries=tuple(selection.entries) + tuple(additions),
        modified=now or _utcnow(),
    )


def toggle_table(
    selection: TableSelection,
    table: str,
    included: bool,
    graph: Optional[SchemaGraph] = None,
    now: Optional[datetime] = None,
) -> TableSelection:
    """Set a table's inclusion flag, adding it as a manual entry if absent.

    Toggling to the state a table is already in is a no-op and returns the
    selection unchanged.  When a graph is supplied, unknown tables are
    rejected instead of silently added.
    """
    existing = selection.entry_for(table)
    if existing is not None:
        if existing.included == included:
            return selection
        entries = tuple(
            replace(entry, included=included) if entry.table == table else entry
            for entry in selection.entries
        )
        return replace(selection, entries=entries, modified=now or _utcnow())
    if graph is not None:
        node = graph.nodes.get(table)
        if node is None or node.kind != "table":
            raise UnknownTable(table)
    entry = SelectionEntry(table=table, provenance="manual", included=included)
    return replace(
        selection,
        entries=tuple(selection.entries) + (entry,),
        modified=now or _utcnow(),
    )


@dataclass(frozen=True)
class CandidateScore:
    """A ranked expansion candidate adjacent to the current selection."""

    table: str
    score: int
    connecting_tables: Sequence[str]


@dataclass(frozen=True)
class CandidateRanking:
    candidates: Sequence[CandidateScore]

    def tables(self) -> List[str]:
        return [candidate.table for candidate in self.candidates]


def rank_candidates(
    selection: TableSelection, graph: SchemaGraph
) -> CandidateRanking:
    """Rank tables one foreign-key hop beyond the selection.

    A candidate's score is the number of distinct included tables it links
    to, so tables stitched to several corners of the selection rise to the
    top.  Ties break lexicographically.  Tables already in the selection,
    even excluded ones, never appear.
    """
    known = {entry.table for entry in selection.entries}
    connections: Dict[str, set] = {}
    for table in selection.included_tables():
        if table not in graph.nodes:
            raise UnknownTable(table)
        for neighbour in graph.neighbors(table, kinds=("fk_link",)):
            if neighbour in known:
                continue
            connections.setdefault(neighbour, set()).add(table)
    scored = [
        CandidateScore(
            table=table,
            score=len(linked),
            connecting_tables=tuple(sorted(linked)),
        )
        for table, linked in connections.items()
    ]
    scored.sort(key=lambda candidate: (-candidate.score, candidate.table))
    return CandidateRanking(candidates=tuple(scored))
