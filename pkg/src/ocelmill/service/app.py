"""HTTP service over the pipeline: datasets, graph views, selections, jobs.

One dataset is active at a time. Uploading a new one via POST /datasets
stores it under the data directory and switches to it; the active dataset
survives restarts, as do saved selections and finished extraction results.
Sessions and the job registry live in memory only, but finished jobs leave
a record file behind so their results stay downloadable.
"""

from __future__ import annotations

import json
import re
import secrets
import shutil
import sys
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional

from fastapi import FastAPI, File, Request, Response, UploadFile
from fastapi.responses import JSONResponse

from ocelmill.errors import (
    OcelmillError,
    UnknownClass,
    UnknownNode,
    UnknownSelection,
    UnknownTable,
)
from ocelmill.extraction import (
    parse_extraction_config,
    serialize_ocel,
    validate_config,
)
from ocelmill.graph import (
    expansion_depths,
    hub_degree_default,
    induced_subgraph,
    layout,
    subgraph_export,
)
from ocelmill.identify import (
    SelectionStore,
    expand_selection,
    rank_candidates,
    resolve_seed,
    selection_from_seed,
    selection_to_document,
    toggle_table,
)
from ocelmill.ingestion.rows import DEFAULT_ROW_CAP
from ocelmill.pipeline import DatasetBundle, load_dataset, run_extraction

_ROW_FILE_RE = re.compile(r"^[A-Z][A-Z0-9_]*\.csv$")

_NOT_FOUND = (UnknownTable, UnknownNode, UnknownClass, UnknownSelection)


@dataclass
class Settings:
    """Service configuration; the CLI fills this from flags and environment."""

    data_dir: Path
    row_cap: int = DEFAULT_ROW_CAP
    hub_limit: Optional[int] = None
    dataset_dir: Optional[Path] = None
    frontend_dir: Optional[Path] = None


class ApiError(Exception):
    """Maps straight to an HTTP status and the `{"error","detail"}` body."""

    def __init__(self, status: int, error: str, detail: str):
        self.status = status
        self.error = error
        self.detail = detail
        super().__init__(detail)


@dataclass
class Session:
    token: str
    dataset: Optional[str]
    created: datetime
    selection_id: Optional[str] = None


@dataclass
class Job:
    id: str
    session: str
    state: str = "queued"
    done: int = 0
    total: int = 0
    error: Optional[str] = None
    result_path: Optional[Path] = None

    def to_document(self) -> dict:
        return {
            "job": self.id,
            "state": self.state,
            "progress": {"done": self.done, "total": self.total},
            "error": self.error,
            "result": f"/jobs/{self.id}/result" if self.state == "done" else None,
        }


def _utcnow() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


def _error_slug(exc: OcelmillError) -> str:
    name = type(exc).__name__
    return re.sub(r"(?<!^)(?=[A-Z])", "_", name).lower()


class ServiceState:
    """Everything the handlers share; mutations go through `lock`."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.lock = threading.RLock()
        self.bundle: Optional[DatasetBundle] = None
        self.dataset_id: Optional[str] = None
        self.sessions: dict[str, Session] = {}
        self.jobs: dict[str, Job] = {}

        root = settings.data_dir
        root.mkdir(parents=True, exist_ok=True)
        (root / "datasets").mkdir(exist_ok=True)
        (root / "results").mkdir(exist_ok=True)
        (root / "jobs").mkdir(exist_ok=True)
        self.store = SelectionStore(root / "selections")
        self._load_startup_dataset()

    # --- dataset lifecycle ----------------------------------------------------

    def _load_startup_dataset(self) -> None:
        if self.settings.dataset_dir is not None:
            directory = Path(self.settings.dataset_dir)
            self.bundle = load_dataset(directory, row_cap=self.settings.row_cap)
            self.dataset_id = directory.name
            return
        marker = self.settings.data_dir / "active_dataset"
        if not marker.is_file():
            return
        dataset_id = marker.read_text(encoding="utf-8").strip()
        directory = self.settings.data_dir / "datasets" / dataset_id
        try:
            self.bundle = load_dataset(directory, row_cap=self.settings.row_cap)
            self.dataset_id = dataset_id
        except OcelmillError as exc:
            print(f"could not reload dataset {dataset_id}: {exc}", file=sys.stderr)

    def activate(self, dataset_id: str, bundle: DatasetBundle) -> None:
        with self.lock:
            self.bundle = bundle
            self.dataset_id = dataset_id
            marker = self.settings.data_dir / "active_dataset"
            marker.write_text(dataset_id + "\n", encoding="utf-8")

    # --- guards ----------------------------------------------------------------

    def require_bundle(self) -> DatasetBundle:
        bundle = self.bundle
        if bundle is None:
            raise ApiError(409, "no_dataset", "no dataset is loaded")
        return bundle

    def require_session(self, token: object) -> Session:
        if not isinstance(token, str) or not token:
            raise ApiError(400, "bad_request", "missing session token")
        session = self.sessions.get(token)
        if session is None:
            raise ApiError(404, "unknown_session", "unknown session token")
        return session

    def hub_limit_for(self, bundle: DatasetBundle) -> Optional[int]:
        if self.settings.hub_limit is not None:
            return self.settings.hub_limit
        return hub_degree_default(bundle.graph)

    # --- jobs -------------------------------------------------------------------

    def job_record_path(self, job_id: str) -> Path:
        if not job_id or any(ch in job_id for ch in "/\\."):
            raise ApiError(404, "unknown_job", f"unknown job: {job_id}")
        return self.settings.data_dir / "jobs" / f"{job_id}.json"

    def persist_job(self, job: Job) -> None:
        document = job.to_document()
        document["result_path"] = (
            str(job.result_path) if job.result_path is not None else None
        )
        self.job_record_path(job.id).write_text(
            json.dumps(document, indent=2) + "\n", encoding="utf-8"
        )

    def find_job(self, job_id: str) -> Job:
        with self.lock:
            job = self.jobs.get(job_id)
        if job is not None:
            return job
        record = self.job_record_path(job_id)
        if not record.is_file():
            raise ApiError(404, "unknown_job", f"unknown job: {job_id}")
        document = json.loads(record.read_text(encoding="utf-8"))
        return Job(
            id=job_id,
            session="",
            state=document["state"],
            done=document["progress"]["done"],
            total=document["progress"]["total"],
            error=document["error"],
            result_path=Path(document["result_path"])
            if document.get("result_path")
            else None,
        )


async def _json_body(request: Request) -> dict:
    try:
        payload = await request.json()
    except Exception:
        raise ApiError(400, "bad_request", "request body must be a JSON object")
    if not isinstance(payload, dict):
        raise ApiError(400, "bad_request", "request body must be a JSON object")
    return payload


def _parse_int(raw: object, name: str, minimum: int) -> int:
    try:
        value = int(raw)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise ApiError(400, "bad_request", f"{name} must be an integer")
    if value < minimum:
        raise ApiError(400, "bad_request", f"{name} must be >= {minimum}")
    return value


def _parse_hub_limit(raw: object) -> Optional[int]:
    """-1 disables hub suppression; absent means the dataset default."""
    if raw is None:
        return None
    try:
        value = int(raw)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise ApiError(400, "bad_request", "hubLimit must be an integer")
    if value == -1:
        return None
    if value < 0:
        raise ApiError(400, "bad_request", "hubLimit must be >= 0 or -1")
    return value


def create_app(settings: Settings) -> FastAPI:
    state = ServiceState(settings)
    app = FastAPI(title="ocelmill", docs_url=None, redoc_url=None)
    app.state.service = state

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": exc.error, "detail": exc.detail},
        )

    @app.exception_handler(OcelmillError)
    async def _domain_error(request: Request, exc: OcelmillError):
        status = 404 if isinstance(exc, _NOT_FOUND) else 400
        return JSONResponse(
            status_code=status,
            content={"error": _error_slug(exc), "detail": str(exc)},
        )

    # --- datasets ---------------------------------------------------------------

    @app.post("/datasets", status_code=201)
    async def upload_dataset(
        catalog: Optional[UploadFile] = File(None),
        relationships: Optional[UploadFile] = File(None),
        classes: Optional[UploadFile] = File(None),
        rows: Optional[List[UploadFile]] = File(None),
    ):
        if catalog is None:
            raise ApiError(400, "bad_request", "catalog file is required")
        dataset_id = secrets.token_hex(8)
        directory = settings.data_dir / "datasets" / dataset_id
        rows_dir = directory / "rows"
        rows_dir.mkdir(parents=True)
        try:
            (directory / "catalog.csv").write_bytes(await catalog.read())
            if relationships is not None:
                (directory / "relationships.csv").write_bytes(
                    await relationships.read()
                )
            if classes is not None:
                (directory / "classes.csv").write_bytes(await classes.read())
            for upload in rows or []:
                name = Path(upload.filename or "").name
                if not _ROW_FILE_RE.match(name):
                    raise ApiError(
                        400, "bad_request", f"row file name not TABLE.csv: {name!r}"
                    )
                (rows_dir / name).write_bytes(await upload.read())
            bundle = load_dataset(directory, row_cap=settings.row_cap)
        except Exception:
            shutil.rmtree(directory, ignore_errors=True)
            raise
        state.activate(dataset_id, bundle)
        total_rows = sum(d.row_count for d in bundle.datasets.values())
        return {
            "dataset": dataset_id,
            "tables": len(bundle.catalog.names()),
            "rows": total_rows,
        }

    @app.get("/classes")
    async def list_classes():
        bundle = state.require_bundle()
        records = [bundle.classes[class_id] for class_id in bundle.class_order]
        return {
            "dataset": state.dataset_id,
            "hubLimitDefault": state.hub_limit_for(bundle),
            "classes": [
                {
                    "id": record.class_id,
                    "label": record.label,
                    "tables": list(record.member_tables),
                    "changeTracked": record.change_tracked,
                    "seedable": not record.reserved,
                }
                for record in records
            ],
        }

    # --- graph ------------------------------------------------------------------

    @app.get("/graph/neighborhood")
    async def neighborhood(
        node: Optional[str] = None,
        depth: Optional[str] = None,
        hubLimit: Optional[str] = None,
    ):
        bundle = state.require_bundle()
        if not node:
            raise ApiError(400, "bad_request", "node parameter is required")
        depth_value = 1 if depth is None else _parse_int(depth, "depth", 0)
        limit = (
            state.hub_limit_for(bundle)
            if hubLimit is None
            else _parse_hub_limit(hubLimit)
        )
        graph = bundle.graph
        found = graph.node(node)
        if found.kind == "document_class":
            starts = list(graph.neighbors(node, kinds={"class_member"}))
        else:
            starts = [node]
        depths = expansion_depths(
            graph, starts, depth=depth_value, hub_degree_limit=limit
        )
        ids = set(depths)
        if found.kind == "document_class":
            ids.add(node)
        sub = induced_subgraph(graph, ids)
        placed = layout(sub, seed=0)
        document = subgraph_export(sub, ids, placed)
        return {
            "node": node,
            "depth": depth_value,
            "hubLimit": limit,
            "depths": depths,
            "graph": document,
        }

    # --- sessions and selections --------------------------------------------------

    @app.post("/sessions", status_code=201)
    async def create_session():
        token = secrets.token_urlsafe(24)
        with state.lock:
            session = Session(
                token=token, dataset=state.dataset_id, created=_utcnow()
            )
            state.sessions[token] = session
        return {
            "session": token,
            "dataset": session.dataset,
            "created": session.created.isoformat(),
        }

    @app.post("/selections", status_code=201)
    async def create_selection(request: Request):
        bundle = state.require_bundle()
        payload = await _json_body(request)
        class_id = payload.get("class")
        if not isinstance(class_id, str) or not class_id:
            raise ApiError(400, "bad_request", "class is required")
        with state.lock:
            session = state.require_session(payload.get("session"))
            seed = resolve_seed(bundle.classes, class_id)
            selection = selection_from_seed(seed)
            selection_id = state.store.save(selection)
            session.selection_id = selection_id
        return selection_to_document(selection, id=selection_id)

    @app.get("/selections/{selection_id}")
    async def get_selection(selection_id: str):
        selection = state.store.load(selection_id)
        return selection_to_document(selection, id=selection_id)

    @app.patch("/selections/{selection_id}")
    async def patch_selection(selection_id: str, request: Request):
        bundle = state.require_bundle()
        payload = await _json_body(request)
        table = payload.get("table")
        included = payload.get("included")
        if not isinstance(table, str) or not isinstance(included, bool):
            raise ApiError(
                400, "bad_request", "body must carry table (string) and included (bool)"
            )
        with state.lock:
            selection = state.store.load(selection_id)
            updated = toggle_table(selection, table, included, graph=bundle.graph)
            if updated is not selection:
                state.store.put(selection_id, updated)
        return selection_to_document(updated, id=selection_id)

    @app.post("/selections/{selection_id}/expand")
    async def expand(selection_id: str, request: Request):
        bundle = state.require_bundle()
        payload = await _json_body(request)
        depth_value = _parse_int(payload.get("depth", 1), "depth", 0)
        if "hubLimit" in payload:
            limit = _parse_hub_limit(payload["hubLimit"])
        else:
            limit = state.hub_limit_for(bundle)
        with state.lock:
            selection = state.store.load(selection_id)
            updated = expand_selection(
                selection, bundle.graph, depth=depth_value, hub_degree_limit=limit
            )
            if updated is not selection:
                state.store.put(selection_id, updated)
        return selection_to_document(updated, id=selection_id)

    @app.get("/selections/{selection_id}/ranking")
    async def ranking(selection_id: str):
        bundle = state.require_bundle()
        selection = state.store.load(selection_id)
        ranked = rank_candidates(selection, bundle.graph)
        return {
            "selection": selection_id,
            "candidates": [
                {
                    "table": candidate.table,
                    "score": candidate.score,
                    "connectors": list(candidate.connecting_tables),
                }
                for candidate in ranked.candidates
            ],
        }

    # --- extraction jobs -----------------------------------------------------------

    def _run_job(job: Job, bundle: DatasetBundle, selection, config) -> None:
        with state.lock:
            job.state = "running"

        def progress(done: int, total: int) -> None:
            with state.lock:
                job.done = done
                job.total = total

        try:
            log = run_extraction(bundle, selection, config, progress)
            data = serialize_ocel(log)
            path = settings.data_dir / "results" / f"{job.id}.json"
            path.write_bytes(data)
            with state.lock:
                job.result_path = path
                job.state = "done"
                state.persist_job(job)
        except Exception as exc:
            with state.lock:
                job.state = "failed"
                job.error = str(exc)
                state.persist_job(job)

    @app.post("/extractions", status_code=201)
    async def start_extraction(request: Request):
        bundle = state.require_bundle()
        payload = await _json_body(request)
        raw_config = payload.get("config")
        if not isinstance(raw_config, dict):
            raise ApiError(400, "bad_request", "config must be a JSON object")
        config = parse_extraction_config(raw_config)
        with state.lock:
            session = state.require_session(payload.get("session"))
            if session.selection_id is None:
                raise ApiError(400, "bad_request", "session has no selection")
            selection = state.store.load(session.selection_id)
            validate_config(config, selection, bundle.catalog)
            for job in state.jobs.values():
                if job.session == session.token and job.state in ("queued", "running"):
                    raise ApiError(
                        409, "job_running", f"job {job.id} is already {job.state}"
                    )
            job = Job(id=secrets.token_hex(8), session=session.token)
            state.jobs[job.id] = job
        worker = threading.Thread(
            target=_run_job, args=(job, bundle, selection, config), daemon=True
        )
        worker.start()
        return {"job": job.id, "state": "queued"}

    @app.get("/jobs/{job_id}")
    async def job_status(job_id: str):
        job = state.find_job(job_id)
        with state.lock:
            return job.to_document()

    @app.get("/jobs/{job_id}/result")
    async def job_result(job_id: str):
        job = state.find_job(job_id)
        with state.lock:
            ready = job.state == "done" and job.result_path is not None
            path = job.result_path
        if not ready:
            raise ApiError(409, "not_done", f"job {job_id} is {job.state}")
        assert path is not None
        return Response(content=path.read_bytes(), media_type="application/json")

    if settings.frontend_dir is not None and Path(settings.frontend_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount(
            "/app",
            StaticFiles(directory=str(settings.frontend_dir), html=True),
            name="app",
        )

    return app
