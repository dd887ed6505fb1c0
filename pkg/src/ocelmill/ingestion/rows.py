"""Streaming access to per-table row data.

Row files are one CSV per table, header row = column names, empty cell = null.
A RowDataset re-opens its source on every pass and never holds more than one
batch of rows in memory; the optional batch probe lets tests assert that.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Callable, Iterator

from ocelmill.errors import MissingKeyValue, ParseError, RowCapExceeded, UnknownColumn
from ocelmill.ingestion.model import TableDefinition

DEFAULT_ROW_CAP = 1_000_000
DEFAULT_BATCH_SIZE = 1_000

Row = dict[str, "str | None"]
Opener = Callable[[], "io.BufferedIOBase"]


class RowDataset:
    """Re-iterable stream of validated rows for one table.

    Each call to `rows()` (or iteration) opens a fresh pass over the source.
    A single returned iterator must not be consumed concurrently.
    """

    def __init__(
        self,
        table: TableDefinition,
        opener: Opener,
        row_count: int,
        batch_size: int,
        row_cap: int,
        batch_probe: Callable[[int], None] | None = None,
    ):
        self.table = table.name
        self.definition = table
        self.row_count = row_count
        self._opener = opener
        self._batch_size = batch_size
        self._row_cap = row_cap
        self._batch_probe = batch_probe

    def rows(self) -> Iterator[Row]:
        return _stream_rows(
            self.definition, self._opener, self._batch_size, self._row_cap, self._batch_probe
        )

    def __iter__(self) -> Iterator[Row]:
        return self.rows()

    def __repr__(self) -> str:
        return f"RowDataset({self.table}, rows={self.row_count})"


def _make_opener(source) -> Opener:
    if isinstance(source, (str, Path)):
        path = Path(source)
        return lambda: open(path, "rb")
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
        return lambda: io.BytesIO(data)
    if callable(source):
        return source
    if hasattr(source, "read") and hasattr(source, "seek") and source.seekable():
        def rewind():
            source.seek(0)
            return _NonClosingStream(source)
        return rewind
    raise TypeError(
        "row source must be a path, bytes, a seekable binary stream, or an opener callable"
    )


class _NonClosingStream:
    """Pass-through wrapper so TextIOWrapper cannot close a borrowed stream."""

    def __init__(self, inner):
        self._inner = inner

    def close(self):  # noqa: D401 - deliberately inert
        pass

    def __getattr__(self, name):
        return getattr(self._inner, name)


def _stream_rows(
    table: TableDefinition,
    opener: Opener,
    batch_size: int,
    row_cap: int,
    batch_probe: Callable[[int], None] | None,
) -> Iterator[Row]:
    known = set(table.column_names)
    keys = table.key_columns
    with io.TextIOWrapper(opener(), encoding="utf-8", newline="") as stream:
        reader = csv.reader(stream, delimiter=",", quotechar='"')
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(f"row file for {table.name} is empty, expected a header row", 1)
        header = [cell.strip() for cell in header]
        for column in header:
            if column not in known:
                raise UnknownColumn(table.name, column)

        row_number = 0
        batch: list[Row] = []
        while True:
            batch.clear()
            for raw in reader:
                if not raw or all(cell == "" for cell in raw):
                    continue
                row_number += 1
                if row_number > row_cap:
                    raise RowCapExceeded(table.name, row_cap)
                if len(raw) != len(header):
                    raise ParseError(
                        f"table {table.name}: expected {len(header)} cells, got {len(raw)}",
                        reader.line_num,
                    )
                row: Row = {name: None for name in table.column_names}
                for name, cell in zip(header, raw):
                    row[name] = cell if cell != "" else None
                for key in keys:
                    if row.get(key) is None:
                        raise MissingKeyValue(table.name, row_number, key)
                batch.append(row)
                if len(batch) >= batch_size:
                    break
            if not batch:
                return
            if batch_probe is not None:
                batch_probe(len(batch))
            yield from list(batch)


def load_row_data(
    table: TableDefinition,
    source,
    *,
    batch_size: int = DEFAULT_BATCH_SIZE,
    row_cap: int = DEFAULT_ROW_CAP,
    batch_probe: Callable[[int], None] | None = None,
) -> RowDataset:
    """Open, validate, and wrap a table's row file.

    The validation pass streams the whole file once (checking the header, key
    completeness, and the row cap) and fixes `row_count`; it buffers at most
    `batch_size` rows at a time.
    """
    if batch_size < 1:
        raise ValueError("batch_size must be >= 1")
    opener = _make_opener(source)
    count = 0
    for _ in _stream_rows(table, opener, batch_size, row_cap, batch_probe):
        count += 1
    return RowDataset(
        table=table,
        opener=opener,
        row_count=count,
        batch_size=batch_size,
        row_cap=row_cap,
        batch_probe=batch_probe,
    )
