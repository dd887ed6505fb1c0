"""Row filtering: the pre-processing step that restricts extraction scope.

Filters are declarative predicates over cell values; a filtered view wraps a
row dataset and streams only the rows passing every predicate, preserving
source order and the one-batch memory bound of the underlying dataset.
"""

from __future__ import annotations

from datetime import date
from typing import Callable, Dict, Iterator, Sequence

from ocelmill.errors import FilterTypeMismatch, UnknownFilterColumn
from ocelmill.extraction.config import ExtractionConfig, FilterRule
from ocelmill.identify.selection import TableSelection
from ocelmill.ingestion.rows import Row, RowDataset

Predicate = Callable[[Row], bool]


def _parse_cell_date(cell: str, table: str, column: str) -> date:
    try:
        return date.fromisoformat(cell)
    except ValueError:
        # Compact YYYYMMDD form, common in exported ERP data.
        if len(cell) == 8 and cell.isdigit():
            try:
                return date(int(cell[:4]), int(cell[4:6]), int(cell[6:]))
            except ValueError:
                pass
    raise FilterTypeMismatch(table, column, f"cell {cell!r} is not a date")


def make_predicate(rule: FilterRule, dataset: RowDataset) -> Predicate:
    """Compile one filter rule into a row predicate.

    Null cells fail every filter except ≠, which they pass vacuously.
    """
    table = dataset.table
    if rule.column not in dataset.definition.column_names:
        raise UnknownFilterColumn(table, rule.column)
    column = rule.column

    if rule.operator == "=":
        return lambda row: row[column] == rule.value
    if rule.operator == "≠":
        return lambda row: row[column] != rule.value
    if rule.operator == "in":
        allowed = frozenset(rule.values)
        return lambda row: row[column] in allowed

    def in_range(row: Row) -> bool:
        cell = row[column]
        if cell is None:
            return False
        value = _parse_cell_date(cell, table, column)
        if rule.lower is not None and value < rule.lower:
            return False
        if rule.upper is not None and value > rule.upper:
            return False
        return True

    return in_range


class FilteredView:
    """A row dataset restricted to rows passing a set of predicates.

    Iteration yields (row_number, row) pairs; row numbers count unfiltered
    source rows from 1 so error messages still point at the input file.
    """

    def __init__(self, dataset: RowDataset, rules: Sequence[FilterRule] = ()):
        self.table = dataset.table
        self.definition = dataset.definition
        self._dataset = dataset
        self._predicates = [make_predicate(rule, dataset) for rule in rules]

    def rows(self) -> Iterator[tuple]:
        for number, row in enumerate(self._dataset.rows(), start=1):
            if all(predicate(row) for predicate in self._predicates):
                yield number, row

    def __iter__(self) -> Iterator[tuple]:
        return self.rows()

    def count(self) -> int:
        return sum(1 for _ in self.rows())


def preprocess(
    selection: TableSelection,
    config: ExtractionConfig,
    datasets: Dict[str, RowDataset],
) -> Dict[str, FilteredView]:
    """Build the filtered row views extraction will consume.

    Covers every included table the config addresses; change header/item
    tables get identity views (the join itself narrows them).
    """
    included = set(selection.included_tables())
    views: Dict[str, FilteredView] = {}
    for name, rule in config.tables.items():
        if name not in included:
            continue
        views[name] = FilteredView(datasets[name], rule.filters)
    if config.changes is not None:
        for name in (config.changes.header_table, config.changes.item_table):
            if name in included and name not in views:
                views[name] = FilteredView(datasets[name])
    return views
