import json

import pytest

import psubgroup


def test_euler_values():
    assert psubgroup.euler("Alt(6)", 3) == 9
    assert psubgroup.euler("Sym(6)", 2, "B") == -16
    assert psubgroup.euler("PGL(2,9)", 2, "B") == -160
    assert psubgroup.order("PSL(3,2):graph") == 336


def test_verify_reports():
    st = psubgroup.verify("solomon-tits", "PSL(3,2)", 2)
    assert st["verdict"] == "pass"
    assert st["data"]["degree"] == 1 and st["data"]["rank"] == 8
    fc = psubgroup.verify("field-case", "PSigmaL(2,4)", 2)
    assert fc["data"]["dimension"] == 1 and fc["data"]["top_rank"] == 16
    cc = psubgroup.verify("cross-characteristic", "Sym(6)", 5, r=2)
    assert cc["data"]["chi"] == 35


def test_homology_and_group():
    h = psubgroup.homology("Sym(6)", 2, kind="B")
    assert h["summary"] == "H1=Z^16"
    assert h["spherical_degree"] == 1
    g = psubgroup.group("Sym(6)", p=2)
    assert g["order"] == 720 and g["tags"] == ["B2(2)"]


def test_errors_and_exit_codes():
    code, report = psubgroup.run("verify", group="Nope(1)", p=2, verifier="euler")
    assert code == 2 and report["verdict"] == "error"
    with pytest.raises(psubgroup.PqError):
        psubgroup.verify("euler", "Sym(5)", 4)
    with pytest.raises(psubgroup.PqError):
        psubgroup.euler("Sym(5)", 2, "Q")


def test_catalog_and_canonical_json():
    entries = {e["name"]: e for e in psubgroup.list_catalog()["entries"]}
    assert entries["2F4(2)"]["refused"]
    assert any(g["expected"] == -16 for g in entries["Sym6"]["goldens"])
    assert set(psubgroup.verifier_ids()) >= {"main", "euler", "field-case"}
    text = psubgroup.canonical_dump({"b": 1, "a": [2]})
    assert text == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'
    assert json.loads(text) == {"a": [2], "b": 1}


def test_cache_round_trip(tmp_path):
    kw = dict(group="Sym(5)", p=2, kind="A", cache_dir=str(tmp_path))
    _, cold = psubgroup.run("homology", **kw)
    _, warm = psubgroup.run("homology", **kw)
    cold.pop("timing_ms")
    warm.pop("timing_ms")
    assert psubgroup.canonical_dump(cold) == psubgroup.canonical_dump(warm)
    assert any(p.suffix == ".pqc" for p in tmp_path.iterdir())
