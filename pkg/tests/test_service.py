"""HTTP service: endpoint contracts, error mapping, jobs, persistence."""

import json
import time

import pytest
from fastapi.testclient import TestClient

from ocelmill.extraction.ocel import validate_ocel
from ocelmill.graph.traverse import hub_degree_default
from ocelmill.service import Settings, create_app


@pytest.fixture(scope="module")
def service(tmp_path_factory, bundled_root):
    settings = Settings(
        data_dir=tmp_path_factory.mktemp("service-data"),
        dataset_dir=bundled_root,
    )
    with TestClient(create_app(settings)) as client:
        yield client


@pytest.fixture(scope="module")
def extraction_config(bundled_root):
    return json.loads((bundled_root / "config.json").read_text(encoding="utf-8"))


def new_session(client):
    response = client.post("/sessions")
    assert response.status_code == 201
    return response.json()["session"]


def new_selection(client, session, class_id="purchase_orders"):
    response = client.post("/selections", json={"session": session, "class": class_id})
    assert response.status_code == 201
    return response.json()


def wait_for_job(client, job_id, timeout=30.0):
    """Poll until the job reaches a terminal state, collecting progress."""
    seen = []
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        document = client.get(f"/jobs/{job_id}").json()
        seen.append(document["progress"]["done"])
        if document["state"] in ("done", "failed"):
            return document, seen
        time.sleep(0.02)
    raise AssertionError(f"job {job_id} did not finish within {timeout}s")


class TestClasses:
    def test_listing(self, service, bundle):
        body = service.get("/classes").json()
        assert body["dataset"] == "p2p_mini"
        assert body["hubLimitDefault"] == hub_degree_default(bundle.graph)
        by_id = {entry["id"]: entry for entry in body["classes"]}
        po = by_id["purchase_orders"]
        assert po["seedable"] is True
        assert po["changeTracked"] is True
        assert set(po["tables"]) == {"EKKO", "EKPO", "EKPA", "EKET", "EKKN"}
        assert by_id["__change_documents__"]["seedable"] is False

    def test_no_dataset_is_409(self, tmp_path):
        with TestClient(create_app(Settings(data_dir=tmp_path))) as bare:
            response = bare.get("/classes")
            assert response.status_code == 409
            assert response.json()["error"] == "no_dataset"


class TestNeighborhood:
    def test_table_node(self, service):
        body = service.get("/graph/neighborhood", params={"node": "EKKO", "depth": 1}).json()
        assert body["node"] == "EKKO"
        assert body["depth"] == 1
        assert body["depths"]["EKKO"] == 0
        assert all(d <= 1 for d in body["depths"].values())
        nodes = body["graph"]["nodes"]
        ids = {n["id"] for n in nodes}
        assert ids == set(body["depths"])
        for n in nodes:
            assert isinstance(n["x"], float) and isinstance(n["y"], float)
        for edge in body["graph"]["edges"]:
            assert edge["a"] in ids and edge["b"] in ids

    def test_class_node_expands_members(self, service):
        body = service.get(
            "/graph/neighborhood", params={"node": "purchase_orders", "depth": 0}
        ).json()
        # member tables are the starting points; the class node itself is drawn too
        assert set(body["depths"]) == {"EKKO", "EKPO", "EKPA", "EKET", "EKKN"}
        ids = {n["id"] for n in body["graph"]["nodes"]}
        assert "purchase_orders" in ids

    def test_unlimited_hub_limit(self, service):
        body = service.get(
            "/graph/neighborhood", params={"node": "MARA", "depth": 1, "hubLimit": -1}
        ).json()
        assert body["hubLimit"] is None

    def test_missing_node_param(self, service):
        assert service.get("/graph/neighborhood").status_code == 400

    def test_unknown_node(self, service):
        response = service.get("/graph/neighborhood", params={"node": "NOPE"})
        assert response.status_code == 404
        assert response.json()["error"] == "unknown_node"

    def test_bad_depth(self, service):
        response = service.get("/graph/neighborhood", params={"node": "EKKO", "depth": "abc"})
        assert response.status_code == 400

    @pytest.mark.parametrize("bad", ["-2", "abc"])
    def test_bad_hub_limit(self, service, bad):
        response = service.get(
            "/graph/neighborhood", params={"node": "EKKO", "hubLimit": bad}
        )
        assert response.status_code == 400


class TestSelections:
    def test_create_from_seed(self, service):
        session = new_session(service)
        document = new_selection(service, session)
        assert document["class_id"] == "purchase_orders"
        assert len(document["id"]) == 16
        assert [e["table"] for e in document["entries"]] == [
            "EKKO", "EKPO", "EKPA", "EKET", "EKKN",
        ]
        assert all(e["provenance"] == "seed" and e["included"] for e in document["entries"])
        fetched = service.get(f"/selections/{document['id']}").json()
        assert fetched == document

    def test_requires_session(self, service):
        assert service.post("/selections", json={"class": "purchase_orders"}).status_code == 400
        response = service.post(
            "/selections", json={"session": "bogus", "class": "purchase_orders"}
        )
        assert response.status_code == 404
        assert response.json()["error"] == "unknown_session"

    def test_requires_class(self, service):
        session = new_session(service)
        assert service.post("/selections", json={"session": session}).status_code == 400

    def test_unknown_class(self, service):
        session = new_session(service)
        response = service.post(
            "/selections", json={"session": session, "class": "nonsense"}
        )
        assert response.status_code == 404
        assert response.json()["error"] == "unknown_class"

    def test_reserved_class_rejected(self, service):
        session = new_session(service)
        response = service.post(
            "/selections", json={"session": session, "class": "__change_documents__"}
        )
        assert response.status_code == 404

    def test_unknown_selection(self, service):
        assert service.get("/selections/feedfacefeedface").status_code == 404

    def test_toggle(self, service):
        session = new_session(service)
        selection_id = new_selection(service, session)["id"]
        body = service.patch(
            f"/selections/{selection_id}", json={"table": "EKKO", "included": False}
        ).json()
        entry = next(e for e in body["entries"] if e["table"] == "EKKO")
        assert entry["included"] is False
        # the change persisted
        fetched = service.get(f"/selections/{selection_id}").json()
        assert fetched == body

    def test_toggle_unknown_table(self, service):
        session = new_session(service)
        selection_id = new_selection(service, session)["id"]
        response = service.patch(
            f"/selections/{selection_id}", json={"table": "NOPE", "included": True}
        )
        assert response.status_code == 404
        assert response.json()["error"] == "unknown_table"

    def test_toggle_bad_body(self, service):
        session = new_session(service)
        selection_id = new_selection(service, session)["id"]
        assert (
            service.patch(f"/selections/{selection_id}", json={"table": "EKKO"}).status_code
            == 400
        )

    def test_expand_depth_one_default_limit(self, service):
        session = new_session(service)
        selection_id = new_selection(service, session)["id"]
        body = service.post(f"/selections/{selection_id}/expand", json={"depth": 1}).json()
        tables = [e["table"] for e in body["entries"]]
        assert len(tables) == 20
        for table in ("EBAN", "RBKP", "RSEG", "BKPF", "CDHDR", "CDPOS", "LFA1", "MARA"):
            assert table in tables
        # sales documents stay outside the procurement neighborhood
        assert "VBAK" not in tables

    def test_hub_suppression_guards_depth_two(self, service):
        session = new_session(service)
        first = new_selection(service, session)["id"]
        limited = service.post(f"/selections/{first}/expand", json={"depth": 2}).json()
        assert "VBAK" not in [e["table"] for e in limited["entries"]]

        second = new_selection(service, session)["id"]
        unlimited = service.post(
            f"/selections/{second}/expand", json={"depth": 2, "hubLimit": -1}
        ).json()
        assert "VBAK" in [e["table"] for e in unlimited["entries"]]

    def test_expand_depth_zero_is_noop(self, service):
        session = new_session(service)
        created = new_selection(service, session)
        body = service.post(f"/selections/{created['id']}/expand", json={"depth": 0}).json()
        assert body == created

    def test_ranking(self, service):
        session = new_session(service)
        selection_id = new_selection(service, session)["id"]
        service.post(f"/selections/{selection_id}/expand", json={"depth": 1})
        body = service.get(f"/selections/{selection_id}/ranking").json()
        assert body["selection"] == selection_id
        top = body["candidates"][:3]
        assert top == [
            {"table": "EINA", "score": 2, "connectors": ["LFA1", "MARA"]},
            {"table": "LFB1", "score": 2, "connectors": ["LFA1", "T001"]},
            {"table": "SKB1", "score": 2, "connectors": ["SKA1", "T001"]},
        ]
        included = {e["table"] for e in service.get(f"/selections/{selection_id}").json()["entries"]}
        for candidate in body["candidates"]:
            assert candidate["table"] not in included
            assert candidate["score"] >= 1


class TestExtractionJobs:
    def start(self, service, extraction_config):
        session = new_session(service)
        selection_id = new_selection(service, session)["id"]
        service.post(f"/selections/{selection_id}/expand", json={"depth": 1})
        response = service.post(
            "/extractions", json={"session": session, "config": extraction_config}
        )
        assert response.status_code == 201
        body = response.json()
        assert body["state"] == "queued"
        return session, body["job"]

    def test_full_job_lifecycle(self, service, extraction_config):
        session, job_id = self.start(service, extraction_config)
        document, progress = wait_for_job(service, job_id)
        assert document["state"] == "done"
        assert document["error"] is None
        assert document["progress"] == {"done": 19, "total": 19}
        assert document["result"] == f"/jobs/{job_id}/result"
        assert progress == sorted(progress)  # monotone

        result = service.get(f"/jobs/{job_id}/result")
        assert result.status_code == 200
        assert result.headers["content-type"].startswith("application/json")
        assert validate_ocel(result.content).ok

    def test_one_job_per_session(self, service, extraction_config):
        session, job_id = self.start(service, extraction_config)
        retry = service.post(
            "/extractions", json={"session": session, "config": extraction_config}
        )
        assert retry.status_code == 409
        assert retry.json()["error"] == "job_running"
        wait_for_job(service, job_id)
        # a finished job releases the slot
        again = service.post(
            "/extractions", json={"session": session, "config": extraction_config}
        )
        assert again.status_code == 201
        wait_for_job(service, again.json()["job"])

    def test_config_validated_synchronously(self, service, extraction_config):
        session = new_session(service)
        new_selection(service, session)  # seed only: config covers far more tables
        response = service.post(
            "/extractions", json={"session": session, "config": extraction_config}
        )
        assert response.status_code == 400
        assert response.json()["error"] == "config_error"

    def test_session_needs_selection(self, service, extraction_config):
        session = new_session(service)
        response = service.post(
            "/extractions", json={"session": session, "config": extraction_config}
        )
        assert response.status_code == 400

    def test_config_must_be_object(self, service):
        session = new_session(service)
        response = service.post("/extractions", json={"session": session, "config": "x"})
        assert response.status_code == 400

    def test_result_before_done_is_409(self, service, extraction_config):
        session, job_id = self.start(service, extraction_config)
        # the job may or may not have finished; only assert on the racing case
        response = service.get(f"/jobs/{job_id}/result")
        status = service.get(f"/jobs/{job_id}").json()["state"]
        if status != "done":
            assert response.status_code == 409
            assert response.json()["error"] == "not_done"
        wait_for_job(service, job_id)

    def test_unknown_job(self, service):
        assert service.get("/jobs/feedfacefeedface").status_code == 404
        assert service.get("/jobs/feedfacefeedface/result").status_code == 404

    def test_hostile_job_id(self, service):
        assert service.get("/jobs/..%2Fescape").status_code == 404


class TestBadBodies:
    def test_non_json_body(self, service):
        response = service.post(
            "/selections",
            content=b"not json",
            headers={"content-type": "application/json"},
        )
        assert response.status_code == 400
        body = response.json()
        assert set(body) == {"error", "detail"}

    def test_non_object_body(self, service):
        assert service.post("/selections", json=[1, 2]).status_code == 400


class TestPersistence:
    def test_selections_and_results_survive_restart(
        self, tmp_path, bundled_root, extraction_config
    ):
        settings = Settings(data_dir=tmp_path, dataset_dir=bundled_root)
        with TestClient(create_app(settings)) as first:
            session = new_session(first)
            selection_id = new_selection(first, session)["id"]
            first.post(f"/selections/{selection_id}/expand", json={"depth": 1})
            job_id = first.post(
                "/extractions", json={"session": session, "config": extraction_config}
            ).json()["job"]
            wait_for_job(first, job_id)

        with TestClient(create_app(Settings(data_dir=tmp_path, dataset_dir=bundled_root))) as second:
            assert second.get(f"/selections/{selection_id}").status_code == 200
            status = second.get(f"/jobs/{job_id}").json()
            assert status["state"] == "done"
            result = second.get(f"/jobs/{job_id}/result")
            assert result.status_code == 200
            assert validate_ocel(result.content).ok
            # sessions are memory-only
            response = second.post(
                "/selections", json={"session": session, "class": "purchase_orders"}
            )
            assert response.status_code == 404


class TestUpload:
    CATALOG = (
        b"name,description,columns,key_columns\n"
        b"EKKO,PO headers,MANDT:client|EBELN:document-number,MANDT|EBELN\n"
        b"EKPO,PO items,MANDT:client|EBELN:document-number|EBELP:item-number,MANDT|EBELN|EBELP\n"
    )
    EKKO_ROWS = b"MANDT,EBELN\n100,A1\n100,A2\n"
    EKPO_ROWS = b"MANDT,EBELN,EBELP\n100,A1,00010\n"

    def upload(self, client, rows_name="EKPO.csv"):
        return client.post(
            "/datasets",
            files=[
                ("catalog", ("catalog.csv", self.CATALOG, "text/csv")),
                ("rows", ("EKKO.csv", self.EKKO_ROWS, "text/csv")),
                ("rows", (rows_name, self.EKPO_ROWS, "text/csv")),
            ],
        )

    def test_upload_activates_dataset(self, tmp_path):
        with TestClient(create_app(Settings(data_dir=tmp_path))) as client:
            response = self.upload(client)
            assert response.status_code == 201
            body = response.json()
            assert body["tables"] == 2
            assert body["rows"] == 3
            listed = client.get("/classes").json()
            assert listed["dataset"] == body["dataset"]

        # the uploaded dataset is the startup dataset after a restart
        with TestClient(create_app(Settings(data_dir=tmp_path))) as again:
            assert again.get("/classes").json()["dataset"] == response.json()["dataset"]

    def test_catalog_required(self, tmp_path):
        with TestClient(create_app(Settings(data_dir=tmp_path))) as client:
            assert client.post("/datasets").status_code == 400

    def test_bad_row_filename(self, tmp_path):
        with TestClient(create_app(Settings(data_dir=tmp_path))) as client:
            assert self.upload(client, rows_name="../evil.csv").status_code == 400
            assert self.upload(client, rows_name="lower.csv").status_code == 400

    def test_broken_dataset_rejected_and_not_activated(self, tmp_path):
        with TestClient(create_app(Settings(data_dir=tmp_path))) as client:
            response = client.post(
                "/datasets",
                files=[("catalog", ("catalog.csv", self.CATALOG, "text/csv"))],
            )  # row files missing entirely
            assert response.status_code == 400
            assert client.get("/classes").status_code == 409


def test_frontend_mount(tmp_path, bundled_root):
    frontend = tmp_path / "dist"
    frontend.mkdir()
    (frontend / "index.html").write_text("<h1>explorer</h1>", encoding="utf-8")
    settings = Settings(
        data_dir=tmp_path / "data", dataset_dir=bundled_root, frontend_dir=frontend
    )
    with TestClient(create_app(settings)) as client:
        response = client.get("/app/")
        assert response.status_code == 200
        assert "explorer" in response.text
