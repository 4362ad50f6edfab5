"""JSON serialization: canonical bytes, anchors, float encoding."""

import json

import pytest

from padelog.construction import ConstructionParams, build_system
from padelog.directed import DOWN, UP, DirectedFloat, Enclosure
from padelog.report import (
    AuditReport,
    CheckRecord,
    canonical_json_bytes,
    directed_float_dict,
    enclosure_dict,
    fraction_str,
    summarize_records,
    system_dict,
)


def test_canonical_json_is_sorted_and_ascii():
    data = canonical_json_bytes({"b": 1, "a": [2, {"z": "x", "y": "w"}]})
    assert data == b'{"a":[2,{"y":"w","z":"x"}],"b":1}\n'


def test_canonical_json_rejects_nan():
    with pytest.raises(ValueError):
        canonical_json_bytes({"x": float("nan")})


def test_unknown_anchor_rejected():
    with pytest.raises(ValueError, match="anchor"):
        CheckRecord(name="x", anchor="not-a-thing", status="pass")


def test_unknown_status_rejected():
    with pytest.raises(ValueError, match="status"):
        CheckRecord(name="x", anchor="degree-caps", status="maybe")


def test_record_dict_drops_empty_fields():
    r = CheckRecord(name="x", anchor="degree-caps", status="pass", lhs="3")
    d = r.as_dict()
    assert d == {"name": "x", "anchor": "degree-caps", "status": "pass",
                 "lhs": "3"}


def test_report_status_aggregation():
    rep = AuditReport(mode="verify", config={})
    rep.add(CheckRecord(name="a", anchor="degree-caps", status="pass"))
    rep.add(CheckRecord(name="b", anchor="degree-caps", status="info"))
    assert rep.passed and rep.status == "pass"
    rep.add(CheckRecord(name="c", anchor="degree-caps", status="fail"))
    assert not rep.passed and rep.status == "fail"
    assert rep.counts() == {"pass": 1, "info": 1, "fail": 1}


def test_report_roundtrips_through_json():
    rep = AuditReport(mode="dn", config={"n_max": 10})
    rep.add(CheckRecord(name="a", anchor="lcm-envelope", status="pass",
                        lhs="9 instances", rhs="bracketed"))
    rep.summary["checked"] = 9
    decoded = json.loads(rep.to_bytes())
    assert decoded["schema"] == "padelog-report/1"
    assert decoded["mode"] == "dn"
    assert decoded["status"] == "pass"
    assert decoded["records"][0]["anchor"] == "lcm-envelope"
    assert decoded["summary"]["checked"] == 9


def test_directed_float_dict_roundtrip():
    x = DirectedFloat.from_exact(355, UP, 128).scale_exact(1) \
        .div(DirectedFloat.from_exact(113, DOWN, 128))
    d = directed_float_dict(x)
    assert d["rounding"] == "up"
    assert d["precision_bits"] == 128
    mant = int(d["mantissa_hex"], 16)
    assert abs(mant * 2.0 ** d["exponent"] - 355 / 113) < 1e-12
    assert float(d["approx"]) == float(x)


def test_directed_float_dict_beyond_double_range():
    x = DirectedFloat.from_exact(10**400, UP, 64)
    d = directed_float_dict(x)
    assert "special" not in d
    assert d["approx"].endswith("e+400")
    assert d["approx"].startswith("1")


def test_directed_float_dict_negative_huge():
    x = DirectedFloat.from_exact(-(7 * 10**399), DOWN, 64)
    d = directed_float_dict(x)
    assert d["approx"].startswith("-7")
    assert d["approx"].endswith("e+399")


def test_directed_float_dict_infinite():
    x = DirectedFloat.from_exact(2**63, UP, 64).exp()
    assert not x.is_finite()
    d = directed_float_dict(x)
    assert d["special"] == "inf"
    assert "mantissa_hex" not in d


def test_enclosure_dict_sides():
    d = enclosure_dict(Enclosure.from_exact(3, 64))
    assert d["lo"]["rounding"] == "down"
    assert d["hi"]["rounding"] == "up"


def test_fraction_str():
    assert fraction_str(3) == "3/1"
    from fractions import Fraction
    assert fraction_str(Fraction(-1, 10)) == "-1/10"


def test_system_dict_shape():
    system = build_system(ConstructionParams(2, 1))
    d = system_dict(system)
    assert d["schema"] == "padelog-system/1"
    assert d["m"] == 2 and d["n"] == 1
    assert len(d["families"]) == 2
    fam = d["families"][0]
    assert fam["expected_order"] == 4
    assert fam["remainder_head"][0] == "1/24"
    assert len(fam["polys"]) == 2
    # rows h = 0..n+1
    assert len(fam["table"]) == 3
    canonical_json_bytes(d)  # must serialize


def test_summary_digest_lists_failures():
    records = [
        CheckRecord(name="good", anchor="degree-caps", status="pass"),
        CheckRecord(name="bad", anchor="degree-caps", status="fail",
                    lhs="1", rhs="2"),
        CheckRecord(name="worse", anchor="degree-caps", status="fail",
                    detail="exploded"),
    ]
    text = summarize_records(records)
    assert "FAIL bad: 1 vs 2" in text
    assert "FAIL worse: exploded" in text
    assert "good" not in text
