import json

import pytest

import liecohom


def test_catalog_lists_required_entries():
    names = liecohom.catalog_names()
    for n in ["iwasawa", "iwasawa_def", "h7", "torus", "dcx_solv", "sympl_n1"]:
        assert n in names


def test_betti_numbers():
    assert liecohom.betti_numbers("(0^4, 12, 34)")[2] == 8
    assert liecohom.betti_numbers("(0,0,0,0)") == [1, 4, 6, 4, 1]


def test_tables_document():
    doc = liecohom.command("tables", catalog="iwasawa")
    assert doc["schema_version"] == liecohom.SCHEMA_VERSION
    assert doc["algebra"]["name"] == "iwasawa"
    code, out, _ = liecohom.run("tables", catalog="iwasawa")
    assert code == 0
    assert json.loads(out) == doc


def test_markdown_and_params():
    code, out, err = liecohom.run("deldelbar", catalog="torus", params={"n": "2"}, format="md")
    assert code == 0, err
    assert "lemma: true" in out


def test_sweep():
    doc = liecohom.command("sweep", catalog="dcx_solv", param_name="t", values=["0", "1/2", "1"])
    dims = [
        (st["h_plus"], st["h_minus"])
        for p in doc["points"]
        for st in p["result"]["stages"]
        if st["k"] == 2
    ]
    assert dims == [(0, 2), (1, 1), (1, 1)]


def test_errors():
    with pytest.raises(liecohom.CommandError) as e:
        liecohom.command("betti", catalog="h7", params={"alpha": 1})
    assert e.value.code == 2
    assert liecohom.run("betti", catalog="nowhere")[0] == 3
    assert liecohom.run("betti", catalog="torus", params={"n": "x"})[0] == 1


def test_regression_passes():
    crit = liecohom.regression()
    assert [c["id"] for c in crit] == list(range(1, 11))
    assert all(c["passed"] for c in crit), [c["line"] for c in crit if not c["passed"]]
