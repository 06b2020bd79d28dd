from fastapi.testclient import TestClient

from weilcanon import __version__
from weilcanon.service import app

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "version": __version__}


def test_suites_listing():
    response = client.get("/suites")
    assert response.status_code == 200
    body = response.json()
    assert "gauss" in body["suites"]
    assert [3, 1] in body["supported_pn"]


def test_run_gauss():
    response = client.post("/run", json={"suite": "gauss"})
    assert response.status_code == 200
    body = response.json()
    assert body["ok"] is True
    assert body["summary"]["failed"] == 0
    assert len(body["checks"]) == body["summary"]["total"]


def test_run_rejects_bad_config():
    response = client.post("/run", json={"p": 9, "suite": "gauss"})
    assert response.status_code == 422
    response = client.post("/run", json={"suite": "bogus"})
    assert response.status_code == 422
