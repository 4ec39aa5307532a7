from fastapi.testclient import TestClient

from codetheta.service import app

client = TestClient(app)


def test_health_and_examples():
    assert client.get("/health").json() == {"status": "ok"}
    names = client.get("/examples").json()["examples"]
    assert "p2-n2" in names


def test_coset_theta_route():
    resp = client.post("/coset-theta", json={
        "p": 2, "ell": 7, "a": 0, "b": 1, "precision": 12})
    assert resp.status_code == 200
    body = resp.json()
    assert body["series"]["terms"] == [[2, 2], [4, 2], [8, 2]]
    # Klein-equal label gives the identical payload
    resp2 = client.post("/coset-theta", json={
        "p": 2, "ell": 7, "a": 1, "b": 1, "precision": 12})
    assert resp2.json()["series"] == body["series"]


def test_code_theta_route_with_oracle():
    resp = client.post("/code-theta", json={
        "p": 2, "ell": 7,
        "code": {"generators": "w;w+1;1,1", "span": "module"},
        "precision": 13, "oracle": True})
    assert resp.status_code == 200
    body = resp.json()
    assert body["oracle_matches"] is True
    assert body["series"]["terms"][0] == [0, 1]
    assert [2, 4] in body["series"]["terms"]


def test_swe_route():
    resp = client.post("/swe", json={
        "p": 2, "ell": 7,
        "code": {"generators": "w;w+1;0,1", "span": "module"}})
    body = resp.json()
    assert body["pretty"] == "X^2 + 2XZ + Z^2"
    assert body["swe"]["degree"] == 2


def test_nullity_route():
    resp = client.post("/nullity", json={
        "p": 2, "ell": 15, "n": 4, "truncation": 16})
    body = resp.json()
    assert body["report"]["rank"] == 15
    assert body["report"]["nullity"] == 0


def test_nullity_table_route():
    resp = client.post("/nullity-table", json={
        "p": 2, "ells": [3, 7], "ns": [1]})
    assert resp.json()["csv"].splitlines()[1] == "1,1,0"


def test_collide_route():
    resp = client.post("/collide", json={
        "p": 2, "ell": 7, "n": 2, "span": "module", "vectors": "all",
        "precision": 30})
    body = resp.json()
    assert len(body["report"]["classes"]) == 1


def test_verify_route():
    resp = client.post("/verify", json={"example": "p2-n2"})
    body = resp.json()
    assert body["passed"] is True


def test_validation_errors_are_422():
    resp = client.post("/coset-theta", json={
        "p": 2, "ell": 8, "a": 0, "b": 0})
    assert resp.status_code == 422
    resp = client.post("/verify", json={"example": "bogus"})
    assert resp.status_code == 422
