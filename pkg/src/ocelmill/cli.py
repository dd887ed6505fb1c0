"""Command line driver: ingest, identify, extract, validate, layout, serve.

stdout carries only data (table lists, JSON documents, summaries) so output
can be piped; anything diagnostic goes to stderr. Exit codes: 0 success,
2 usage, 3 parse failure, 4 unknown entity, 5 extraction failure,
6 validation findings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from ocelmill import bundled_dataset_path
from ocelmill.errors import (
    ArityMismatch,
    ConfigError,
    DuplicateEventId,
    DuplicateTable,
    FilterTypeMismatch,
    MissingKeyColumns,
    MissingKeyValue,
    MissingObjectKey,
    OcelmillError,
    OrphanItem,
    ParseError,
    RowCapExceeded,
    StorageFailure,
    UnknownClass,
    UnknownColumn,
    UnknownFilterColumn,
    UnknownNode,
    UnknownObjectClass,
    UnknownSelection,
    UnknownTable,
    UnparsableTimestamp,
)
from ocelmill.extraction import (
    parse_extraction_config,
    serialize_ocel,
    validate_ocel,
)
from ocelmill.graph import (
    graph_document_bytes,
    hub_degree_default,
    layout,
    subgraph_export,
)
from ocelmill.identify import (
    expand_selection,
    resolve_seed,
    selection_from_document,
    selection_from_seed,
    selection_to_document,
)
from ocelmill.ingestion.rows import DEFAULT_ROW_CAP
from ocelmill.pipeline import load_dataset, run_extraction

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_UNKNOWN = 4
EXIT_EXTRACTION = 5
EXIT_FINDINGS = 6

_PARSE_ERRORS = (
    ParseError,
    DuplicateTable,
    MissingKeyColumns,
    ArityMismatch,
    RowCapExceeded,
    MissingKeyValue,
    UnknownColumn,
    StorageFailure,
)
_UNKNOWN_ERRORS = (UnknownTable, UnknownNode, UnknownClass, UnknownSelection)
_EXTRACTION_ERRORS = (
    ConfigError,
    UnknownFilterColumn,
    FilterTypeMismatch,
    UnparsableTimestamp,
    MissingObjectKey,
    OrphanItem,
    UnknownObjectClass,
    DuplicateEventId,
)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _exit_code_for(exc: OcelmillError) -> int:
    if isinstance(exc, _UNKNOWN_ERRORS):
        return EXIT_UNKNOWN
    if isinstance(exc, _EXTRACTION_ERRORS):
        return EXIT_EXTRACTION
    if isinstance(exc, _PARSE_ERRORS):
        return EXIT_PARSE
    return EXIT_PARSE


def _data_dir(args: argparse.Namespace) -> Path:
    if args.data is not None:
        return Path(args.data)
    env = os.environ.get("OCELMILL_DATA")
    if env:
        return Path(env)
    return bundled_dataset_path()


def _row_cap(args: argparse.Namespace) -> int:
    if getattr(args, "row_cap", None) is not None:
        return args.row_cap
    env = os.environ.get("OCELMILL_ROW_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"OCELMILL_ROW_CAP is not an integer: {env!r}")
    return DEFAULT_ROW_CAP


def _require_file(path: Path, code: int = EXIT_USAGE) -> Optional[int]:
    if not path.is_file():
        return _fail(f"no such file: {path}", code)
    return None


def _hub_limit(args: argparse.Namespace, graph) -> Optional[int]:
    if args.hub_limit is not None:
        return None if args.hub_limit < 0 else args.hub_limit
    env = os.environ.get("OCELMILL_HUB_LIMIT")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ParseError(f"OCELMILL_HUB_LIMIT is not an integer: {env!r}")
        return None if value < 0 else value
    return hub_degree_default(graph)


# --- subcommands ----------------------------------------------------------------


def _cmd_ingest(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        return _fail(f"no such directory: {directory}", EXIT_USAGE)
    bundle = load_dataset(directory, row_cap=_row_cap(args))
    tables = len(bundle.catalog.names())
    rows = sum(d.row_count for d in bundle.datasets.values())
    declared = sum(1 for r in bundle.relationships if r.origin == "declared")
    inferred = len(bundle.relationships) - declared
    if args.json:
        print(
            json.dumps(
                {
                    "tables": tables,
                    "rows": rows,
                    "relationships": {"declared": declared, "inferred": inferred},
                    "classes": bundle.class_order,
                },
                indent=2,
            )
        )
    else:
        print(
            f"{tables} tables, {rows} rows, {declared} declared + "
            f"{inferred} inferred relationships, {len(bundle.class_order)} classes"
        )
    return 0


def _cmd_identify(args: argparse.Namespace) -> int:
    bundle = load_dataset(_data_dir(args), row_cap=_row_cap(args))
    limit = _hub_limit(args, bundle.graph)
    seed = resolve_seed(bundle.classes, args.class_id)
    selection = selection_from_seed(seed)
    if args.depth > 0:
        selection = expand_selection(
            selection, bundle.graph, depth=args.depth, hub_degree_limit=limit
        )
    document = selection_to_document(selection)
    if args.out:
        Path(args.out).write_text(
            json.dumps(document, indent=2) + "\n", encoding="utf-8"
        )
    if args.json:
        print(
            json.dumps(
                {
                    "class": args.class_id,
                    "depth": args.depth,
                    "hub_limit": limit,
                    "tables": selection.included_tables(),
                    "selection": document,
                },
                indent=2,
            )
        )
    else:
        for table in selection.included_tables():
            print(table)
    return 0


def _cmd_extract(args: argparse.Namespace) -> int:
    selection_path = Path(args.selection)
    config_path = Path(args.config)
    for path in (selection_path, config_path):
        failed = _require_file(path)
        if failed is not None:
            return failed
    try:
        selection_doc = json.loads(selection_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        return _fail(f"selection file is not JSON: {exc}", EXIT_PARSE)
    selection = selection_from_document(selection_doc)
    try:
        config = parse_extraction_config(config_path.read_text(encoding="utf-8"))
    except ConfigError as exc:
        return _fail(str(exc), EXIT_PARSE)
    bundle = load_dataset(_data_dir(args), row_cap=_row_cap(args))

    def progress(done: int, total: int) -> None:
        print(f"step {done}/{total}", file=sys.stderr)

    log = run_extraction(
        bundle, selection, config, progress if args.verbose else None
    )
    data = serialize_ocel(log)
    Path(args.out).write_bytes(data)
    summary = {
        "events": len(log.events),
        "objects": len(log.objects),
        "out": str(args.out),
    }
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        print(f"{summary['events']} events, {summary['objects']} objects -> {args.out}")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    path = Path(args.ocel)
    failed = _require_file(path)
    if failed is not None:
        return failed
    report = validate_ocel(path.read_bytes())
    if args.json:
        print(json.dumps(report.to_document(), indent=2))
    else:
        for finding in report.findings:
            print(f"{finding.path or '<document>'}: {finding.message}")
        if report.ok:
            print("valid")
    return 0 if report.ok else EXIT_FINDINGS


def _cmd_layout(args: argparse.Namespace) -> int:
    bundle = load_dataset(_data_dir(args), row_cap=_row_cap(args))
    placed = layout(bundle.graph, seed=args.seed)
    document = subgraph_export(bundle.graph, bundle.graph.nodes, placed)
    data = graph_document_bytes(document)
    Path(args.out).write_bytes(data)
    summary = {
        "nodes": len(document["nodes"]),
        "edges": len(document["edges"]),
        "out": str(args.out),
    }
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        print(f"{summary['nodes']} nodes, {summary['edges']} edges -> {args.out}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from ocelmill.service import Settings, create_app

    data_dir = (
        Path(args.data)
        if args.data is not None
        else Path(os.environ.get("OCELMILL_DATA", "ocelmill-data"))
    )
    hub_limit = args.hub_limit
    if hub_limit is None:
        env = os.environ.get("OCELMILL_HUB_LIMIT")
        hub_limit = int(env) if env else None
    settings = Settings(
        data_dir=data_dir,
        row_cap=_row_cap(args),
        hub_limit=hub_limit,
        dataset_dir=bundled_dataset_path() if args.bundled else None,
        frontend_dir=Path(args.frontend) if args.frontend else None,
    )
    host = args.host or os.environ.get("OCELMILL_HOST", "127.0.0.1")
    port = args.port if args.port is not None else int(
        os.environ.get("OCELMILL_PORT", "8520")
    )
    app = create_app(settings)
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return 0


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ocelmill",
        description="Schema exploration and object-centric event log extraction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, data: bool = True) -> None:
        p.add_argument("--json", action="store_true", help="JSON output on stdout")
        if data:
            p.add_argument(
                "--data",
                help="dataset directory (default: $OCELMILL_DATA or the bundled dataset)",
            )
            p.add_argument("--row-cap", type=int, help="per-table row limit")

    p_ingest = sub.add_parser("ingest", help="load and validate a dataset directory")
    p_ingest.add_argument("directory")
    p_ingest.add_argument("--json", action="store_true")
    p_ingest.add_argument("--row-cap", type=int)
    p_ingest.set_defaults(func=_cmd_ingest)

    p_identify = sub.add_parser(
        "identify", help="seed a document class and expand over the schema graph"
    )
    p_identify.add_argument("--class", dest="class_id", required=True)
    p_identify.add_argument("--depth", type=int, default=1)
    p_identify.add_argument(
        "--hub-limit",
        type=int,
        help="fk-degree above which tables are not traversed through; -1 disables",
    )
    p_identify.add_argument("--out", help="write the selection document here")
    add_common(p_identify)
    p_identify.set_defaults(func=_cmd_identify)

    p_extract = sub.add_parser("extract", help="run an extraction to an OCEL file")
    p_extract.add_argument("--selection", required=True)
    p_extract.add_argument("--config", required=True)
    p_extract.add_argument("--out", required=True)
    p_extract.add_argument("--verbose", action="store_true")
    add_common(p_extract)
    p_extract.set_defaults(func=_cmd_extract)

    p_validate = sub.add_parser("validate", help="validate an OCEL JSON file")
    p_validate.add_argument("--ocel", required=True)
    p_validate.add_argument("--json", action="store_true")
    p_validate.set_defaults(func=_cmd_validate)

    p_layout = sub.add_parser("layout", help="deterministic layout of the schema graph")
    p_layout.add_argument("--out", required=True)
    p_layout.add_argument("--seed", type=int, default=0)
    add_common(p_layout)
    p_layout.set_defaults(func=_cmd_layout)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host")
    p_serve.add_argument("--port", type=int)
    p_serve.add_argument("--data", help="service data directory")
    p_serve.add_argument("--row-cap", type=int)
    p_serve.add_argument("--hub-limit", type=int)
    p_serve.add_argument(
        "--bundled", action="store_true", help="start with the bundled dataset loaded"
    )
    p_serve.add_argument("--frontend", help="directory of built UI assets to serve")
    p_serve.set_defaults(func=_cmd_serve, json=False)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OcelmillError as exc:
        return _fail(str(exc), _exit_code_for(exc))
    except OSError as exc:
        return _fail(str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
