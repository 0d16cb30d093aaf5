import json

import pytest

import sdalg

DIHEDRAL3 = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


def test_check_magma():
    report = sdalg.check_magma(DIHEDRAL3)
    assert report["label"] == "quandle"
    assert report["unit"] is None
    assert sdalg.check_magma([[0]])["unit"] == 0


def test_rack_counts():
    assert [len(sdalg.enumerate_racks(n, True)) for n in range(1, 5)] == [1, 2, 6, 19]


def test_rack_algebra_round_trip():
    structure = sdalg.construct("rack-algebra", "dihedral:3")
    assert structure["dim"] == 3
    rows = {r["axiom"]: r["pass"] for r in sdalg.check_bialgebra(structure)}
    assert rows["sd_bialgebra"] and rows["compat"]
    assert not rows["sd_plain"]
    assert sdalg.ybe(json.dumps(structure)) == {"braid": True, "inverse": True}


def test_ring_override():
    structure = sdalg.construct("rack-algebra", "trivial:3")
    assert not sdalg.check_bialgebra(structure, ["sd_plain"])[0]["pass"]
    assert sdalg.check_bialgebra(structure, ["sd_plain"], ring={"kind": "gfp", "p": 2})[0]["pass"]


def test_classify():
    code, report = sdalg.classify(1)
    assert code == 0
    assert len(report["representatives"]) == 13
    code, report = sdalg.classify(2)
    assert code == 1
    assert [r["found"] for r in report["reference"]] == [True, False, True, True]
    code, report = sdalg.classify(3, a="2")
    assert report["ring"] == {"kind": "quad", "d": 2}


def test_errors():
    with pytest.raises(ValueError):
        sdalg.construct("novikov", "A3")
    with pytest.raises(ValueError):
        sdalg.check_bialgebra({"ring": {"kind": "rational"}, "dim": 2, "mult": [[[1]]]})
    code, _, err = sdalg.run(["check-magma", "/nonexistent.json"])
    assert code == 2 and "cannot open" in err
