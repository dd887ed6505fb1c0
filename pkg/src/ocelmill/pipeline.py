"""End-to-end wiring: dataset directory -> graph -> selection -> OCEL log.

A dataset directory holds:

    catalog.csv         table definitions
    relationships.csv   declared links (optional)
    classes.csv         document class registry (optional)
    rows/<TABLE>.csv    one row file per catalog table

The same loading and extraction paths back both the CLI and the HTTP
service, so their outputs agree by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional

from ocelmill.errors import ParseError
from ocelmill.extraction.assemble import assemble_log
from ocelmill.extraction.config import ExtractionConfig, validate_config
from ocelmill.extraction.events import (
    extract_change_events,
    extract_objects,
    extract_table_events,
)
from ocelmill.extraction.filters import preprocess
from ocelmill.extraction.model import ObjectCentricLog
from ocelmill.graph.build import build_graph
from ocelmill.graph.model import SchemaGraph
from ocelmill.identify.selection import ClassRegistry, TableSelection
from ocelmill.ingestion.catalog import (
    infer_relationships,
    merge_relationships,
    parse_document_classes,
    parse_relationships,
    parse_table_catalog,
)
from ocelmill.ingestion.model import Catalog, DocumentClassRecord, RelationshipRecord
from ocelmill.ingestion.rows import (
    DEFAULT_BATCH_SIZE,
    DEFAULT_ROW_CAP,
    RowDataset,
    load_row_data,
)

# Links are inferred only from key pairs at least this wide; single shared
# columns (years, generic item counters) connect unrelated tables too easily.
DEFAULT_MIN_SHARED_KEYS = 2

ProgressCallback = Callable[[int, int], None]


@dataclass
class DatasetBundle:
    """Everything loaded from one dataset directory."""

    catalog: Catalog
    relationships: List[RelationshipRecord]
    classes: ClassRegistry
    datasets: Dict[str, RowDataset]
    graph: SchemaGraph
    root: Optional[Path] = None
    class_order: List[str] = field(default_factory=list)

    def seedable_classes(self) -> List[DocumentClassRecord]:
        return [
            self.classes[class_id]
            for class_id in self.class_order
            if not self.classes[class_id].reserved
        ]


def load_dataset(
    directory,
    *,
    min_shared_keys: int = DEFAULT_MIN_SHARED_KEYS,
    row_cap: int = DEFAULT_ROW_CAP,
    batch_size: int = DEFAULT_BATCH_SIZE,
) -> DatasetBundle:
    """Load and validate a dataset directory into a ready-to-use bundle.

    Declared relationships win over inferred ones on the same table pair;
    the graph is built from the merged set.
    """
    root = Path(directory)
    catalog_path = root / "catalog.csv"
    if not catalog_path.is_file():
        raise ParseError(f"no catalog.csv in {root}")
    definitions = parse_table_catalog(catalog_path.read_bytes())
    catalog = Catalog.from_definitions(definitions)

    declared: List[RelationshipRecord] = []
    relationships_path = root / "relationships.csv"
    if relationships_path.is_file():
        declared = parse_relationships(relationships_path.read_bytes(), catalog.tables)
    inferred = infer_relationships(definitions, min_shared_keys=min_shared_keys)
    relationships = merge_relationships(declared, inferred)

    class_records: List[DocumentClassRecord] = []
    classes_path = root / "classes.csv"
    if classes_path.is_file():
        class_records = parse_document_classes(classes_path.read_bytes(), catalog.tables)

    datasets: Dict[str, RowDataset] = {}
    for definition in definitions:
        row_path = root / "rows" / f"{definition.name}.csv"
        if not row_path.is_file():
            raise ParseError(f"missing row file rows/{definition.name}.csv in {root}")
        datasets[definition.name] = load_row_data(
            definition, row_path, batch_size=batch_size, row_cap=row_cap
        )

    graph = build_graph(definitions, relationships, class_records)
    return DatasetBundle(
        catalog=catalog,
        relationships=relationships,
        classes={record.class_id: record for record in class_records},
        datasets=datasets,
        graph=graph,
        root=root,
        class_order=[record.class_id for record in class_records],
    )


def run_extraction(
    bundle: DatasetBundle,
    selection: TableSelection,
    config: ExtractionConfig,
    progress: Optional[ProgressCallback] = None,
) -> ObjectCentricLog:
    """Extract an object-centric log for a selection under a config.

    Tables are processed in name order so object-attribute merges are
    deterministic; the change-document join runs as the final step.
    `progress` is called after each completed step with (done, total).
    """
    validate_config(config, selection, bundle.catalog)
    views = preprocess(selection, config, bundle.datasets)

    included = set(selection.included_tables())
    steps = sorted(name for name in config.tables if name in included)
    total = len(steps) + (1 if config.changes is not None else 0)
    done = 0

    event_lists = []
    object_sets = []
    for name in steps:
        rule = config.tables[name]
        if rule.objects_only:
            object_sets.append(extract_objects(views[name], rule.objects))
        else:
            events, objects = extract_table_events(
                views[name],
                rule.activity,
                rule.timestamp,
                rule.objects,
                rule.attributes,
            )
            event_lists.append(events)
            object_sets.append(objects)
        done += 1
        if progress is not None:
            progress(done, total)

    if config.changes is not None:
        changes = config.changes
        events, objects = extract_change_events(
            views[changes.header_table], views[changes.item_table], changes
        )
        event_lists.append(events)
        object_sets.append(objects)
        done += 1
        if progress is not None:
            progress(done, total)

    return assemble_log(event_lists, object_sets)
