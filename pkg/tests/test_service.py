import pytest
from fastapi.testclient import TestClient

from trapeze import __version__
from trapeze.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok", "version": __version__}


def test_analyze_endpoint(client):
    r = client.post("/api/analyze", json={"words": ["aaabb", "ebbacbadf"]})
    assert r.status_code == 200
    recs = r.json()["records"]
    assert [x["word"] for x in recs] == ["aaabb", "ebbacbadf"]
    assert recs[0]["profile"] == [1, 2, 3, 3, 2, 1]
    assert recs[1]["R"] == 3 and recs[1]["K"] == 1
    assert recs[1]["heart"] == "bbacba"
    assert recs[1]["heart_R"] == 2 and recs[1]["heart_K"] == 3


def test_analyze_rejects_bad_word(client):
    r = client.post("/api/analyze", json={"words": ["ok", "NOT OK"]})
    assert r.status_code == 422
    assert "a-z" in r.json()["detail"]


def test_analyze_rejects_empty_list(client):
    r = client.post("/api/analyze", json={"words": []})
    assert r.status_code == 422


def test_graph_endpoint(client):
    r = client.post("/api/graph", json={"word": "abbcc"})
    assert r.status_code == 200
    assert r.json() == {"word": "abbcc", "profile": [1, 3, 4, 3, 2, 1]}


def test_census_endpoint(client):
    r = client.post("/api/census", json={"alphabet_size": 2, "max_length": 4})
    assert r.status_code == 200
    rows = r.json()["rows"]
    assert rows[-1] == {"length": 4, "total": 8, "gt": 8, "rich_gt": 8,
                        "triangular_gt": 4, "rk_condition": 8}


def test_census_bounds_rejected_by_model(client):
    r = client.post("/api/census", json={"alphabet_size": 9, "max_length": 4})
    assert r.status_code == 422


def test_verify_endpoint(client):
    r = client.post("/api/verify", json={"alphabet_size": 2, "max_length": 6})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is True
    assert body["words"] == 63
    assert all(x["status"] == "pass" for x in body["results"])
