"""Seeding, expansion, curation, and persistence of table selections."""

from ocelmill.identify.selection import (
    CandidateRanking,
    CandidateScore,
    ClassRegistry,
    SeedSelection,
    SelectionEntry,
    TableSelection,
    expand_selection,
    rank_candidates,
    resolve_seed,
    selection_from_seed,
    toggle_table,
)
from ocelmill.identify.store import (
    SelectionStore,
    selection_from_document,
    selection_to_document,
)

__all__ = [
    "CandidateRanking",
    "CandidateScore",
    "ClassRegistry",
    "SeedSelection",
    "SelectionEntry",
    "TableSelection",
    "SelectionStore",
    "expand_selection",
    "rank_candidates",
    "resolve_seed",
    "selection_from_document",
    "selection_from_seed",
    "selection_to_document",
    "toggle_table",
]
