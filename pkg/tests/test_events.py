"""Event production: timestamps, activities, object resolution, change joins."""

from datetime import datetime, timezone

import pytest

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
from ocelmill.extraction.events import (
    build_timestamp,
    extract_change_events,
    extract_objects,
    extract_table_events,
)
from ocelmill.extraction.filters import FilteredView
from ocelmill.ingestion.rows import load_row_data

from helpers import table


def utc(*args):
    return datetime(*args, tzinfo=timezone.utc)


def view_of(definition, csv_bytes):
    return FilteredView(load_row_data(definition, csv_bytes))


class TestTimestamps:
    RULE = TimestampRule(date_column="BLDAT", time_column="CPUTM")
    T = table("BKPF", "BLDAT:date:n,CPUTM:time:n,BELNR:document-number", "BELNR")

    def stamp(self, bldat, cputm):
        row = {"BLDAT": bldat, "CPUTM": cputm, "BELNR": "1"}
        return build_timestamp(self.RULE, row, "BKPF", 1)

    def test_date_and_time(self):
        assert self.stamp("2021-01-04", "09:30:15") == utc(2021, 1, 4, 9, 30, 15)

    def test_compact_forms(self):
        assert self.stamp("20210104", "093015") == utc(2021, 1, 4, 9, 30, 15)

    def test_null_time_cell_means_midnight(self):
        assert self.stamp("2021-01-04", None) == utc(2021, 1, 4, 0, 0, 0)

    def test_no_time_column_means_midnight(self):
        rule = TimestampRule(date_column="BLDAT")
        row = {"BLDAT": "2021-01-04", "CPUTM": "09:30:15", "BELNR": "1"}
        assert build_timestamp(rule, row, "BKPF", 1) == utc(2021, 1, 4)

    def test_null_date_is_an_error(self):
        with pytest.raises(UnparsableTimestamp) as err:
            self.stamp(None, "09:30:15")
        assert err.value.table == "BKPF"
        assert err.value.row == 1

    @pytest.mark.parametrize("bad", ["yesterday", "2021-13-01", "20211301", "2021/01/04"])
    def test_bad_date(self, bad):
        with pytest.raises(UnparsableTimestamp):
            self.stamp(bad, None)

    @pytest.mark.parametrize("bad", ["noon", "25:00:00", "256161"])
    def test_bad_time(self, bad):
        with pytest.raises(UnparsableTimestamp):
            self.stamp("2021-01-04", bad)

    def test_result_is_utc(self):
        assert self.stamp("2021-01-04", "120000").tzinfo == timezone.utc


EKKO = table(
    "EKKO",
    "MANDT:client,EBELN:document-number,LIFNR:identifier:n,AEDAT:date,WAERS:currency:n,BSART:code:n",
    "MANDT,EBELN",
)

EKKO_ROWS = b"""MANDT,EBELN,LIFNR,AEDAT,WAERS,BSART
100,4500000001,V100,2021-01-04,EUR,NB
100,4500000002,V100,2021-01-05,USD,NB
100,4500000003,V200,2021-01-06,,ZB
"""


class TestTableEvents:
    ACTIVITY = ActivityRule(kind="static", value="Create Purchase Order")
    TIMESTAMP = TimestampRule(date_column="AEDAT")
    OBJECTS = (
        ObjectRule(object_type="purchase_order", key_columns=("EBELN",), attributes=("WAERS",)),
        ObjectRule(object_type="vendor", key_columns=("LIFNR",)),
    )

    def extract(self, rows=EKKO_ROWS, attributes=()):
        return extract_table_events(
            view_of(EKKO, rows), self.ACTIVITY, self.TIMESTAMP, self.OBJECTS, attributes
        )

    def test_one_event_per_row(self):
        events, objects = self.extract()
        assert len(events) == 3
        first = events[0]
        assert first.id == "EKKO:100/4500000001"  # table name + key values
        assert first.activity == "Create Purchase Order"
        assert first.timestamp == utc(2021, 1, 4)
        assert first.omap == ("purchase_order:4500000001", "vendor:V100")

    def test_objects_deduplicated_across_rows(self):
        _, objects = self.extract()
        ids = sorted(o.id for o in objects)
        assert ids == [
            "purchase_order:4500000001",
            "purchase_order:4500000002",
            "purchase_order:4500000003",
            "vendor:V100",
            "vendor:V200",
        ]

    def test_object_attributes_first_writer_wins(self):
        rows = (
            b"MANDT,EBELN,LIFNR,AEDAT,WAERS,BSART\n"
            b"100,A1,V1,2021-01-04,EUR,NB\n"
            b"100,A2,V1,2021-01-05,USD,NB\n"
        )
        objects = {
            o.id: o
            for o in extract_table_events(
                view_of(EKKO, rows),
                self.ACTIVITY,
                self.TIMESTAMP,
                (ObjectRule(object_type="po", key_columns=("LIFNR",), attributes=("WAERS",)),),
            )[1]
        }
        assert objects["po:V1"].ovmap == {"WAERS": "EUR"}

    def test_later_row_fills_missing_attribute(self):
        rows = (
            b"MANDT,EBELN,LIFNR,AEDAT,WAERS,BSART\n"
            b"100,A1,V1,2021-01-04,,NB\n"
            b"100,A2,V1,2021-01-05,USD,NB\n"
        )
        objects = {
            o.id: o
            for o in extract_table_events(
                view_of(EKKO, rows),
                self.ACTIVITY,
                self.TIMESTAMP,
                (ObjectRule(object_type="po", key_columns=("LIFNR",), attributes=("WAERS",)),),
            )[1]
        }
        # null attributes are omitted, so the second row supplies the value
        assert objects["po:V1"].ovmap == {"WAERS": "USD"}

    def test_event_attributes_skip_nulls(self):
        events, _ = self.extract(attributes=("WAERS", "BSART"))
        assert events[0].vmap == {"WAERS": "EUR", "BSART": "NB"}
        assert events[2].vmap == {"BSART": "ZB"}  # WAERS null -> omitted

    def test_missing_object_key(self):
        rows = b"MANDT,EBELN,LIFNR,AEDAT,WAERS,BSART\n100,A1,,2021-01-04,EUR,NB\n"
        with pytest.raises(MissingObjectKey) as err:
            self.extract(rows)
        assert err.value.column == "LIFNR"
        assert err.value.row == 1

    def test_template_activity(self):
        events, _ = extract_table_events(
            view_of(EKKO, EKKO_ROWS),
            ActivityRule(kind="template", value="Create {BSART} Order"),
            self.TIMESTAMP,
            self.OBJECTS,
        )
        assert [e.activity for e in events] == [
            "Create NB Order",
            "Create NB Order",
            "Create ZB Order",
        ]

    def test_template_renders_null_as_empty(self):
        events, _ = extract_table_events(
            view_of(EKKO, b"MANDT,EBELN,LIFNR,AEDAT,WAERS,BSART\n100,A1,V1,2021-01-04,,NB\n"),
            ActivityRule(kind="template", value="Order [{WAERS}]"),
            self.TIMESTAMP,
            self.OBJECTS,
        )
        assert events[0].activity == "Order []"

    def test_multi_column_object_key(self):
        t = table("EKPO", "EBELN:document-number,EBELP:item-number,AEDAT:date", "EBELN,EBELP")
        rows = b"EBELN,EBELP,AEDAT\nA1,00010,2021-01-04\n"
        events, objects = extract_table_events(
            view_of(t, rows),
            ActivityRule(kind="static", value="Create Item"),
            TimestampRule(date_column="AEDAT"),
            (ObjectRule(object_type="po_item", key_columns=("EBELN", "EBELP")),),
        )
        assert objects[0].id == "po_item:A1/00010"
        assert events[0].omap == ("po_item:A1/00010",)


class TestObjectsOnly:
    def test_instances_without_events(self):
        t = table("LFA1", "LIFNR:identifier,NAME1:text:n", "LIFNR")
        rows = b"LIFNR,NAME1\nV100,Acme\nV200,Globex\nV100,Duplicate\n"
        objects = extract_objects(
            view_of(t, rows),
            (ObjectRule(object_type="vendor", key_columns=("LIFNR",), attributes=("NAME1",)),),
        )
        by_id = {o.id: o for o in objects}
        assert set(by_id) == {"vendor:V100", "vendor:V200"}
        assert by_id["vendor:V100"].ovmap == {"NAME1": "Acme"}  # first writer wins


CDHDR = table(
    "CDHDR",
    "MANDT:client,OBJECTCLAS:code,OBJECTID:identifier:n,CHANGENR:identifier,USERNAME:text:n,UDATE:date,UTIME:time:n",
    "MANDT,CHANGENR",
)
CDPOS = table(
    "CDPOS",
    "MANDT:client,CHANGENR:identifier,TABNAME:code,FNAME:code:n,VALUE_OLD:text:n,VALUE_NEW:text:n",
    "MANDT,CHANGENR,TABNAME",
)

CHANGE_RULE = ChangeRule(
    header_table="CDHDR",
    item_table="CDPOS",
    pairing_keys=("CHANGENR",),
    timestamp=TimestampRule(date_column="UDATE", time_column="UTIME"),
    object_class_column="OBJECTCLAS",
    object_id_column="OBJECTID",
    field_column="FNAME",
    object_types={"EINKBELEG": "purchase_order", "BANF": "purchase_requisition"},
    header_attributes=("USERNAME",),
    item_attributes=("VALUE_OLD", "VALUE_NEW"),
)

HEADERS = b"""MANDT,OBJECTCLAS,OBJECTID,CHANGENR,USERNAME,UDATE,UTIME
100,EINKBELEG,4500000001,0000000001,JSMITH,2021-01-10,083000
100,BANF,0010000007,0000000002,MJONES,2021-01-11,
"""

ITEMS = b"""MANDT,CHANGENR,TABNAME,FNAME,VALUE_OLD,VALUE_NEW
100,0000000001,EKKO,NETPR,10.00,12.50
100,0000000001,EKPO,MENGE,5,
100,0000000002,EBAN,BADAT,,2021-02-01
"""


class TestChangeEvents:
    def extract(self, headers=HEADERS, items=ITEMS, rule=CHANGE_RULE):
        return extract_change_events(view_of(CDHDR, headers), view_of(CDPOS, items), rule)

    def test_one_event_per_item(self):
        events, objects = self.extract()
        assert len(events) == 3
        assert [e.activity for e in events] == ["Change NETPR", "Change MENGE", "Change BADAT"]
        # event ids come from the item table's key
        assert events[0].id == "CDPOS:100/0000000001/EKKO"

    def test_timestamp_from_header(self):
        events, _ = self.extract()
        assert events[0].timestamp == utc(2021, 1, 10, 8, 30)
        # header with null UTIME fills midnight
        assert events[2].timestamp == utc(2021, 1, 11)

    def test_object_resolution(self):
        events, objects = self.extract()
        assert events[0].omap == ("purchase_order:4500000001",)
        assert events[2].omap == ("purchase_requisition:0010000007",)
        ids = sorted(o.id for o in objects)
        assert ids == ["purchase_order:4500000001", "purchase_requisition:0010000007"]
        # change-produced objects are stubs: no attributes
        assert all(o.ovmap == {} for o in objects)

    def test_vmap_merges_header_and_item_attributes(self):
        events, _ = self.extract()
        assert events[0].vmap == {
            "USERNAME": "JSMITH",
            "VALUE_OLD": "10.00",
            "VALUE_NEW": "12.50",
        }
        # nulls omitted on both sides
        assert events[1].vmap == {"USERNAME": "JSMITH", "VALUE_OLD": "5"}
        assert events[2].vmap == {"USERNAME": "MJONES", "VALUE_NEW": "2021-02-01"}

    def test_orphan_item(self):
        items = ITEMS + b"100,0000000099,EKKO,NETWR,1,2\n"
        with pytest.raises(OrphanItem) as err:
            self.extract(items=items)
        assert err.value.item_key == ("0000000099",)

    def test_unmapped_object_class(self):
        headers = HEADERS.replace(b"BANF", b"VERKBELEG")
        with pytest.raises(UnknownObjectClass) as err:
            self.extract(headers=headers)
        assert err.value.object_class == "VERKBELEG"

    def test_null_object_id(self):
        headers = HEADERS.replace(b"4500000001", b"")
        with pytest.raises(MissingObjectKey) as err:
            self.extract(headers=headers)
        assert err.value.column == "OBJECTID"

    def test_null_field_name(self):
        items = ITEMS.replace(b"NETPR", b"")
        with pytest.raises(MissingObjectKey) as err:
            self.extract(items=items)
        assert err.value.column == "FNAME"

    def test_headers_without_items_produce_nothing(self):
        items = b"MANDT,CHANGENR,TABNAME,FNAME,VALUE_OLD,VALUE_NEW\n"
        events, objects = self.extract(items=items)
        assert events == []
        assert objects == []
