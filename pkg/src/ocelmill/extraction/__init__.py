"""Object-centric event log extraction from selected tables' row data."""

from ocelmill.extraction.assemble import assemble_log, merge_objects
from ocelmill.extraction.config import (
    ActivityRule,
    ChangeRule,
    ExtractionConfig,
    FilterRule,
    ObjectRule,
    TableRule,
    TimestampRule,
    parse_extraction_config,
    validate_config,
)
from ocelmill.extraction.events import (
    build_timestamp,
    extract_change_events,
    extract_objects,
    extract_table_events,
)
from ocelmill.extraction.filters import FilteredView, make_predicate, preprocess
from ocelmill.extraction.model import (
    Event,
    ObjectCentricLog,
    ObjectInstance,
    event_id,
    object_id,
)
from ocelmill.extraction.ocel import (
    Finding,
    ValidationReport,
    log_to_document,
    parse_ocel,
    serialize_ocel,
    validate_ocel,
)

__all__ = [
    "ActivityRule",
    "ChangeRule",
    "Event",
    "ExtractionConfig",
    "FilterRule",
    "FilteredView",
    "Finding",
    "ObjectCentricLog",
    "ObjectInstance",
    "ObjectRule",
    "TableRule",
    "TimestampRule",
    "ValidationReport",
    "assemble_log",
    "build_timestamp",
    "event_id",
    "extract_change_events",
    "extract_objects",
    "extract_table_events",
    "log_to_document",
    "make_predicate",
    "merge_objects",
    "object_id",
    "parse_extraction_config",
    "parse_ocel",
    "preprocess",
    "serialize_ocel",
    "validate_config",
    "validate_ocel",
]
