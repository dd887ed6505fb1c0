"""End-to-end pipeline over the bundled procurement dataset.

Expected values here are derived from the dataset files themselves (raw CSV
line counts), never from the code under test.
"""

import pytest

from ocelmill.errors import ParseError
from ocelmill.extraction.config import parse_extraction_config
from ocelmill.extraction.ocel import serialize_ocel, validate_ocel
from ocelmill.graph.traverse import hub_degree_default
from ocelmill.identify.selection import (
    expand_selection,
    resolve_seed,
    selection_from_seed,
)
from ocelmill.pipeline import load_dataset, run_extraction

# The procurement document family one fk-hop from the purchase-order tables.
PO_FAMILY = [
    "BKPF", "BSEG", "CDHDR", "CDPOS", "CSKS", "EBAN", "EKBE", "EKET", "EKKN",
    "EKKO", "EKPA", "EKPO", "LFA1", "MARA", "RBKP", "RSEG", "SKA1",
    "T001", "T001W", "T024",
]


def csv_data_lines(path):
    """Count non-blank data lines without going through the package."""
    lines = path.read_text(encoding="utf-8").splitlines()
    return sum(1 for line in lines[1:] if line.strip())


@pytest.fixture(scope="module")
def po_selection(bundle):
    seed = resolve_seed(bundle.classes, "purchase_orders")
    limit = hub_degree_default(bundle.graph)
    return expand_selection(selection_from_seed(seed), bundle.graph, 1, limit)


@pytest.fixture(scope="module")
def config(bundled_root):
    return parse_extraction_config(bundled_root / "config.json")


@pytest.fixture(scope="module")
def log(bundle, po_selection, config):
    return run_extraction(bundle, po_selection, config)


class TestLoading:
    def test_table_and_row_counts_match_files(self, bundle, bundled_root):
        row_files = sorted((bundled_root / "rows").glob("*.csv"))
        assert len(bundle.datasets) == len(row_files)
        for path in row_files:
            assert bundle.datasets[path.stem].row_count == csv_data_lines(path)

    def test_relationship_counts(self, bundle, bundled_root):
        declared = csv_data_lines(bundled_root / "relationships.csv")
        by_origin = {}
        for record in bundle.relationships:
            by_origin[record.origin] = by_origin.get(record.origin, 0) + 1
        assert by_origin["declared"] == declared
        assert by_origin["inferred"] > 0
        # merged set has one record per table pair
        pairs = [r.endpoint_pair for r in bundle.relationships]
        assert len(pairs) == len(set(pairs))

    def test_classes_match_registry_file(self, bundle, bundled_root):
        assert len(bundle.classes) == csv_data_lines(bundled_root / "classes.csv")
        seedable = bundle.seedable_classes()
        assert all(not record.reserved for record in seedable)
        assert len(seedable) == len(bundle.classes) - 1

    def test_graph_covers_catalog(self, bundle):
        assert sorted(bundle.graph.table_ids()) == sorted(bundle.catalog.names())

    def test_missing_catalog(self, tmp_path):
        with pytest.raises(ParseError):
            load_dataset(tmp_path)

    def test_missing_row_file(self, tmp_path, bundled_root):
        (tmp_path / "rows").mkdir()
        (tmp_path / "catalog.csv").write_bytes((bundled_root / "catalog.csv").read_bytes())
        with pytest.raises(ParseError) as err:
            load_dataset(tmp_path)
        assert "rows/" in str(err.value)


class TestSelection:
    def test_depth_one_family(self, po_selection):
        assert sorted(set(po_selection.tables())) == sorted(set(PO_FAMILY))

    def test_seed_tables_flagged(self, po_selection, bundle):
        seeds = set(bundle.classes["purchase_orders"].member_tables)
        for entry in po_selection.entries:
            if entry.table in seeds:
                assert entry.provenance == "seed"
            else:
                assert entry.provenance == "expansion" and entry.depth == 1


class TestExtraction:
    def test_event_conservation_against_raw_files(self, log, config, bundled_root):
        """Every event-table row becomes exactly one event, none invented."""
        per_table = {}
        for event in log.events:
            table = event.id.split(":", 1)[0]
            per_table[table] = per_table.get(table, 0) + 1

        event_tables = [
            name for name, rule in config.tables.items() if not rule.objects_only
        ]
        for name in event_tables:
            expected = csv_data_lines(bundled_root / "rows" / f"{name}.csv")
            assert per_table.pop(name) == expected, name
        # change events: one per item row
        expected_changes = csv_data_lines(bundled_root / "rows" / "CDPOS.csv")
        assert per_table.pop(config.changes.item_table) == expected_changes
        assert per_table == {}  # nothing from anywhere else

    def test_log_is_valid(self, log):
        assert validate_ocel(serialize_ocel(log)).ok

    def test_events_reference_known_objects(self, log):
        index = log.object_index()
        for event in log.events:
            for oid in event.omap:
                assert oid in index

    def test_byte_determinism(self, bundle, po_selection, config):
        first = serialize_ocel(run_extraction(bundle, po_selection, config))
        second = serialize_ocel(run_extraction(bundle, po_selection, config))
        assert first == second

    def test_progress_is_monotone_and_complete(self, bundle, po_selection, config):
        calls = []
        run_extraction(bundle, po_selection, config, progress=lambda d, t: calls.append((d, t)))
        total = len(config.tables) + 1  # change join is the final step
        assert calls[0] == (1, total)
        assert calls[-1] == (total, total)
        assert [d for d, _ in calls] == list(range(1, total + 1))
        assert all(t == total for _, t in calls)

    def test_object_types_cover_master_data(self, log, config):
        declared = set()
        for rule in config.tables.values():
            declared.update(o.object_type for o in rule.objects)
        declared.update(config.changes.object_types.values())
        assert set(log.object_types) <= declared
