import pytest

import exsys


def test_wedge_canonical_form():
    assert exsys.wedge("x1^x3") == "x1^x3"
    assert exsys.wedge("x3^x1") == "x3^x1"
    assert exsys.wedge("x1^x1") == "0"


def test_contract():
    assert exsys.contract("x5^x3^x1", d=3) == "x1^x5"


def test_normal_form():
    assert exsys.normal_form("d1 * x1") == "1 + neg(x1*d1)"


def test_schubert_sigma():
    assert exsys.schubert(2, [2, 1], sigma=3) == "[1,1]x4^x3 + x5^x2 + x6^x1"


def test_pieri_and_conjugate():
    assert exsys.pieri([], 2, 2) == [[2]]
    assert exsys.conjugate([3, 1]) == [2, 1, 1]


def test_parse_error_position():
    with pytest.raises(exsys.ParseError, match="1:4"):
        exsys.wedge("x1^?")


def test_verify_report():
    report = exsys.verify(["nat"], rmax=1, weight=2, zmax=4, wmax=4, checks=["pieri", "quasi_inverse"])
    assert report["schema_version"] == 1
    summary = report["summary"]
    assert summary["fails"] == 0
    assert summary["holds"] == len(report["reports"]) > 0
