"""HTTP surface: schemas, worked examples, error paths, determinism."""

from fastapi.testclient import TestClient

from octospin.app import app
from octospin.linalg import matrix_from_json

client = TestClient(app)


def test_health():
    assert client.get("/health").json() == {"status": "ok"}


def test_dims_table():
    assert client.get("/dims").json() == {
        "spin8": 28,
        "spin9": 36,
        "spin10": 45,
        "spin101": 55,
        "spin102": 66,
        "spin91": 45,
    }


def test_multable():
    data = client.get("/multable").json()
    triples = data["triples"]
    assert len(triples) == 64
    assert all(t["c"] in (-1, 1) for t in triples)
    # closed quaternion subtable
    assert all(t["k"] < 4 for t in triples if t["i"] < 4 and t["j"] < 4)
    # e1 * e1 = -e0
    row = [t for t in triples if t["i"] == 1 and t["j"] == 1]
    assert row == [{"i": 1, "j": 1, "k": 0, "c": -1}]


def test_basis_spin8_triples():
    data = client.get("/basis/spin8").json()
    assert data["dimension"] == 28
    assert len(data["triples"]) == 28
    first = data["triples"][0]
    for key in ("a1", "a2", "a3"):
        m = matrix_from_json(first[key])
        assert m.shape == (8, 8)
        assert (m == -m.T).all()
    assert len(data["matrices"]) == 28
    assert data["matrices"][0]["rows"] == 16


def test_basis_with_structure_constants():
    data = client.get("/basis/spin9", params={"structure": True}).json()
    assert data["dimension"] == 36
    sc = data["structure_constants"]
    assert sc and all(set(e) == {"i", "j", "k", "c"} for e in sc)
    assert all(len(e["c"]) == 2 for e in sc)
    # brackets of the 28 triality triples never leave that block
    assert all(e["k"] < 28 for e in sc if e["i"] < 28 and e["j"] < 28)


def test_basis_unknown_family_404():
    assert client.get("/basis/so3").status_code == 404


def test_classify_base_point():
    resp = client.post(
        "/classify",
        json={"family": "spin10", "spinor": {"x1": [1, 0, 0, 0, 0, 0, 0, 0]}},
    )
    assert resp.status_code == 200
    assert resp.json() == {
        "family": "spin10",
        "q": 1,
        "p": 0,
        "theta": 0.0,
        "orbit": "M",
    }


def test_classify_scalar_encodings():
    spinor = {
        "x1": [[3, 2], 0, 0, 0, 0, 0, 0, 0],  # 3/2 as a pair
        "y1": ["1/2", 0, 0, 0, 0, 0, 0, 0],  # rational string
    }
    resp = client.post("/classify", json={"family": "spin8", "spinor": spinor})
    assert resp.status_code == 200
    data = resp.json()
    assert data["q1"] == "9/4" and data["q2"] == "1/4"
    assert data["a"] == "3/2" and data["b"] == "1/2"


def test_classify_rejects_bad_payloads():
    bad = {"family": "spin10", "spinor": {"x1": [1, 2, 3]}}
    assert client.post("/classify", json=bad).status_code == 422
    bad = {"family": "spin10", "spinor": {"x1": ["nope"] + [0] * 7}}
    assert client.post("/classify", json=bad).status_code == 422
    bad = {"family": "spin7", "spinor": {}}
    assert client.post("/classify", json=bad).status_code == 422


def test_stabilizer_endpoint():
    resp = client.post(
        "/stabilizer",
        json={
            "family": "spin8",
            "spinor": {
                "x1": [1, 0, 0, 0, 0, 0, 0, 0],
                "y1": [1, 0, 0, 0, 0, 0, 0, 0],
            },
        },
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["dimension"] == 14
    assert len(data["coefficients"]) == 14
    assert all(len(vec) == 28 for vec in data["coefficients"])


def test_stabilizer_rejects_misshaped_spinor():
    resp = client.post(
        "/stabilizer",
        json={
            "family": "spin9",
            "spinor": {"x2": [1, 0, 0, 0, 0, 0, 0, 0]},
        },
    )
    assert resp.status_code == 422


def test_verify_endpoint_and_determinism():
    req = {"family": "octonion", "trials": 3, "seed": 9, "mode": "exact"}
    a = client.post("/verify", json=req)
    b = client.post("/verify", json=req)
    assert a.status_code == 200
    assert a.json()["passed"] is True
    assert a.content == b.content
    names = [s["name"] for s in a.json()["suites"]]
    assert names == sorted(names)
    assert all(s["max_residual"] == "0" for s in a.json()["suites"])


def test_verify_rejects_unknown_family():
    resp = client.post("/verify", json={"family": "bogus"})
    assert resp.status_code == 422
