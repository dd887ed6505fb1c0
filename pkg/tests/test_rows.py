"""Row streaming: fresh passes, batching, null mapping, validation errors."""

import io

import pytest

from ocelmill.errors import MissingKeyValue, ParseError, RowCapExceeded, UnknownColumn
from ocelmill.ingestion.rows import DEFAULT_BATCH_SIZE, DEFAULT_ROW_CAP, load_row_data

from helpers import table

EKET = table("EKET", "MANDT:client,EBELN:document-number,ETENR:item-number,MENGE:quantity:n", "MANDT,EBELN,ETENR")

ROWS_CSV = b"""MANDT,EBELN,ETENR,MENGE
100,4500000001,0001,10
100,4500000001,0002,
100,4500000002,0001,5
"""


def test_defaults():
    assert DEFAULT_ROW_CAP == 1_000_000
    assert DEFAULT_BATCH_SIZE == 1_000


def test_basic_load():
    ds = load_row_data(EKET, ROWS_CSV)
    assert ds.table == "EKET"
    assert ds.row_count == 3
    rows = list(ds)
    assert rows[0] == {"MANDT": "100", "EBELN": "4500000001", "ETENR": "0001", "MENGE": "10"}
    # empty cell maps to None, not ""
    assert rows[1]["MENGE"] is None


def test_reiterable_fresh_passes():
    ds = load_row_data(EKET, ROWS_CSV)
    first = list(ds.rows())
    second = list(ds.rows())
    assert first == second
    # partial consumption of one pass never affects the next
    it = ds.rows()
    next(it)
    assert len(list(ds.rows())) == 3


def test_missing_columns_filled_with_none():
    # header may omit nullable columns; absent ones come back as None
    src = b"MANDT,EBELN,ETENR\n100,A1,0001\n"
    rows = list(load_row_data(EKET, src))
    assert rows[0]["MENGE"] is None
    assert set(rows[0]) == {"MANDT", "EBELN", "ETENR", "MENGE"}


def test_batch_probe_sizes():
    sizes = []
    ds = load_row_data(EKET, ROWS_CSV, batch_size=2, batch_probe=sizes.append)
    assert sizes == [2, 1]  # validation pass
    sizes.clear()
    list(ds)
    assert sizes == [2, 1]


def test_row_cap():
    with pytest.raises(RowCapExceeded) as err:
        load_row_data(EKET, ROWS_CSV, row_cap=2)
    assert err.value.table == "EKET"
    assert err.value.cap == 2


def test_missing_key_value():
    src = b"MANDT,EBELN,ETENR,MENGE\n100,4500000001,0001,10\n100,,0002,1\n"
    with pytest.raises(MissingKeyValue) as err:
        load_row_data(EKET, src)
    assert err.value.row == 2
    assert err.value.column == "EBELN"


def test_unknown_header_column():
    src = b"MANDT,EBELN,ETENR,WERKS\n100,A1,0001,PL01\n"
    with pytest.raises(UnknownColumn) as err:
        load_row_data(EKET, src)
    assert err.value.column == "WERKS"


def test_ragged_row_reports_line():
    src = b"MANDT,EBELN,ETENR,MENGE\n100,A1,0001,1\n100,A1\n"
    with pytest.raises(ParseError) as err:
        load_row_data(EKET, src)
    assert err.value.line == 3


def test_empty_file():
    with pytest.raises(ParseError):
        load_row_data(EKET, b"")


def test_blank_lines_skipped():
    src = ROWS_CSV + b"\n\n"
    assert load_row_data(EKET, src).row_count == 3


def test_bad_batch_size():
    with pytest.raises(ValueError):
        load_row_data(EKET, ROWS_CSV, batch_size=0)


def test_path_source(tmp_path):
    path = tmp_path / "EKET.csv"
    path.write_bytes(ROWS_CSV)
    ds = load_row_data(EKET, path)
    assert ds.row_count == 3
    assert len(list(ds)) == 3


def test_seekable_stream_source():
    stream = io.BytesIO(ROWS_CSV)
    ds = load_row_data(EKET, stream)
    # stream is rewound per pass, never closed
    assert len(list(ds)) == 3
    assert len(list(ds)) == 3
    assert not stream.closed


def test_opener_callable_source():
    opens = []

    def opener():
        opens.append(1)
        return io.BytesIO(ROWS_CSV)

    ds = load_row_data(EKET, opener)
    list(ds)
    list(ds)
    assert len(opens) == 3  # validation pass + two reads


def test_rejects_unusable_source():
    with pytest.raises(TypeError):
        load_row_data(EKET, 42)
