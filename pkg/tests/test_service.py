import pytest
from fastapi.testclient import TestClient

from tanglekit.puzzle import encode_puzzle, run_pipeline
from tanglekit.service import create_app


@pytest.fixture(scope="module")
def puzzles(tmp_path_factory):
    directory = tmp_path_factory.mktemp("puzzles")
    store = {}
    for family, params, seed in [
        ("cycle", {"n": 9}, 1),
        ("matching", {"m": 5}, 2),
        ("gs", {"s": 2}, 0),
    ]:
        p = run_pipeline(family, params, seed)
        (directory / f"{p.id}.json").write_bytes(encode_puzzle(p))
        store[p.id] = p
    return directory, store


@pytest.fixture(scope="module")
def client(puzzles):
    directory, _ = puzzles
    return TestClient(create_app(directory))


class TestListEndpoint:
    def test_lists_all_with_summary_fields(self, client, puzzles):
        _, store = puzzles
        body = client.get("/api/puzzles").json()
        assert [item["id"] for item in body] == sorted(store)
        for item in body:
            p = store[item["id"]]
            assert item["name"] == p.id
            assert item["n"] == p.graph.n
            assert item["m"] == p.graph.m
            assert item["crossings"] == p.meta.crossings
            assert item["shift_lower"] == p.meta.shift_lower
            assert item["shift_upper"] == p.meta.shift_upper


class TestGetEndpoint:
    def test_full_document_bytes(self, client, puzzles):
        _, store = puzzles
        for pid, p in store.items():
            response = client.get(f"/api/puzzles/{pid}")
            assert response.status_code == 200
            assert response.content == encode_puzzle(p)

    def test_unknown_id_404(self, client):
        assert client.get("/api/puzzles/nope").status_code == 404


class TestVerifyEndpoint:
    def test_reference_layout_solves(self, client, puzzles):
        _, store = puzzles
        p = store["cycle-9-s1"]
        body = {
            "positions": [
                {"id": v, "x": pt.x, "y": pt.y}
                for v, pt in p.graph.reference_layout.items()
            ]
        }
        result = client.post(f"/api/puzzles/{p.id}/verify", json=body).json()
        assert result["crossing_free"] is True
        assert result["shifts_used"] <= p.graph.n

    def test_start_positions_report_meta_crossings(self, client, puzzles):
        _, store = puzzles
        p = store["gs-2-s0"]
        body = {
            "positions": [
                {"id": v, "x": pt.x, "y": pt.y}
                for v, pt in p.drawing.positions.items()
            ]
        }
        result = client.post(f"/api/puzzles/{p.id}/verify", json=body).json()
        assert result["crossings"] == p.meta.crossings
        assert result["shifts_used"] == 0

    def test_degenerate_attempt_422(self, client, puzzles):
        _, store = puzzles
        p = store["cycle-9-s1"]
        positions = [
            {"id": v, "x": pt.x, "y": pt.y} for v, pt in p.drawing.positions.items()
        ]
        positions[0]["x"] = positions[1]["x"]
        positions[0]["y"] = positions[1]["y"]
        response = client.post(f"/api/puzzles/{p.id}/verify", json={"positions": positions})
        assert response.status_code == 422

    def test_incomplete_coverage_422(self, client, puzzles):
        _, store = puzzles
        p = store["cycle-9-s1"]
        positions = [
            {"id": v, "x": pt.x, "y": pt.y} for v, pt in p.drawing.positions.items()
        ][:-1]
        response = client.post(f"/api/puzzles/{p.id}/verify", json={"positions": positions})
        assert response.status_code == 422

    def test_unknown_puzzle_404(self, client):
        response = client.post(
            "/api/puzzles/ghost/verify",
            json={"positions": [{"id": 0, "x": 0, "y": 0}]},
        )
        assert response.status_code == 404


class TestCors:
    def test_cross_origin_allowed(self, client):
        response = client.get(
            "/api/puzzles", headers={"Origin": "http://localhost:5173"}
        )
        assert response.headers.get("access-control-allow-origin") == "*"
