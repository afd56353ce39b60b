import json

import pytest
from fastapi.testclient import TestClient

from signed_tableaux.service import create_app
from signed_tableaux.tableaux import to_doc
from test_tableaux import PT5, BT8


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


class TestHealth:
    def test_ok(self, client):
        assert client.get("/health").json() == {"status": "ok"}


class TestMap:
    def test_perm_to_pt(self, client):
        r = client.post(
            "/map",
            json={"direction": "perm-to-pt", "perm": {"n": 5, "window": "-2,-4,5,3,1"}},
        )
        assert r.status_code == 200
        assert r.json()["tableau"] == to_doc(PT5)

    def test_perm_to_bt_cycles(self, client):
        r = client.post(
            "/map",
            json={"direction": "perm-to-bt", "perm": {"n": 4, "cycles": "(2,-3,-1,4)"}},
        )
        assert sorted(map(tuple, r.json()["tableau"]["ones"])) == [
            (-3, 3), (-3, 4), (-2, 2), (-2, 3), (1, 4),
        ]

    def test_pt_to_perm_roundtrip(self, client):
        r = client.post(
            "/map", json={"direction": "pt-to-perm", "tableau": to_doc(PT5)}
        )
        assert r.json()["perm"] == "-2,-4,5,3,1"

    def test_empty_tableau_maps_to_identity(self, client):
        doc = {"n": 3, "kind": "permutation", "positive_rows": [1, 2, 3], "ones": []}
        r = client.post("/map", json={"direction": "pt-to-perm", "tableau": doc})
        assert r.json()["perm"] == "1,2,3"

    def test_bt_to_perm(self, client):
        r = client.post(
            "/map", json={"direction": "bt-to-perm", "tableau": to_doc(BT8)}
        )
        assert r.json()["perm"] == "2,7,-5,6,-4,1,8,-3"

    def test_kind_mismatch_rejected(self, client):
        r = client.post(
            "/map", json={"direction": "bt-to-pt", "tableau": to_doc(PT5)}
        )
        assert r.status_code == 422

    def test_invalid_window_rejected(self, client):
        r = client.post(
            "/map",
            json={"direction": "perm-to-pt", "perm": {"n": 2, "window": "1,1"}},
        )
        assert r.status_code == 422
        assert "repeated" in r.json()["detail"]

    def test_invalid_filling_rejected(self, client):
        doc = {"n": 2, "kind": "permutation", "positive_rows": [], "ones": [[-1, 1]]}
        r = client.post("/map", json={"direction": "pt-to-perm", "tableau": doc})
        assert r.status_code == 422
        assert "column 2" in r.json()["detail"]


class TestStats:
    def test_permutation_side(self, client):
        r = client.post("/stats", json={"perm": {"n": 5, "window": "-2,-4,5,3,1"}})
        ps = r.json()["perm_stats"]
        assert ps["wex"] == 1
        assert sorted(map(tuple, ps["alignments_nest"])) == [(2, 1), (5, 4)]
        assert ps["crs"] == 2
        assert ps["inv"] == 10
        zt = r.json()["zero_types"]
        assert (zt["zero_EE"], zt["zero_NN"], zt["zero_EN"]) == (1, 1, 1)

    def test_tableau_side_with_trace(self, client):
        r = client.post("/stats", json={"tableau": to_doc(PT5), "trace_from": 3})
        body = r.json()
        assert body["tableau_stats"]["two"] == 2
        assert body["trace"].splitlines() == ["(3,5) east", "end=5"]

    def test_requires_exactly_one_object(self, client):
        assert client.post("/stats", json={}).status_code == 422


class TestVerify:
    def test_pass(self, client):
        r = client.post("/verify", json={"theorem": "cycles", "n": 1})
        body = r.json()
        assert body["passed"] is True
        assert body["instances"] == 2

    def test_unknown_theorem(self, client):
        r = client.post("/verify", json={"theorem": "zeta-everywhere", "n": 2})
        assert r.status_code == 422

    def test_bound(self, client):
        r = client.post("/verify", json={"theorem": "cycles", "n": 9})
        assert r.status_code == 422


class TestEnumerate:
    def test_bare_count(self, client):
        r = client.get("/enumerate", params={"n": 3, "kind": "bare", "limit": 0})
        body = r.json()
        assert body["count"] == 48
        assert body["items"] == []
        assert body["truncated"] is True

    def test_group(self, client):
        r = client.get("/enumerate", params={"n": 2, "kind": "group"})
        body = r.json()
        assert body["count"] == 8
        assert body["items"][0] == {"window": "-2,-1"}

    def test_bad_kind(self, client):
        assert client.get("/enumerate", params={"n": 2, "kind": "x"}).status_code == 422


class TestPoset:
    def test_json(self, client):
        r = client.get("/poset", params={"n": 2, "fmt": "json"})
        doc = json.loads(r.content)
        assert len(doc["nodes"]) == 8
        assert {"from", "to", "gen", "case"} == set(doc["edges"][0])

    def test_dot(self, client):
        r = client.get("/poset", params={"n": 1, "fmt": "dot"})
        assert r.text.startswith("digraph")
        assert 'label="WB1"' in r.text

    def test_bad_format(self, client):
        assert client.get("/poset", params={"n": 1, "fmt": "png"}).status_code == 422
