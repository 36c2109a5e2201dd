"""Check reports: serialization, schema validation, CLI behavior."""

import json
import os

import pytest
from click.testing import CliRunner

from qwh.cli import main, suite_names
from qwh.report import FAIL, PASS, CheckItem, CheckReport


SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "..", "docs", "check_report.schema.json")


def _validate(payload):
    import jsonschema

    with open(SCHEMA_PATH) as fh:
        schema = json.load(fh)
    jsonschema.validate(payload, schema)


def test_report_round_trip():
    rep = CheckReport.from_items(
        "demo",
        [CheckItem("ok", True), CheckItem("bad", False, residual="u - 1")],
        params={"u": "2"},
    )
    assert rep.status == FAIL
    clone = CheckReport.from_dict(json.loads(rep.to_json()))
    assert clone == rep


def test_status_aggregation():
    assert CheckReport.from_items("s", [CheckItem("a", True)]).status == PASS
    assert CheckReport.from_items("s", []).status == PASS
    assert CheckReport.error("s", "boom").status == "ERROR"


def run(args):
    return CliRunner().invoke(main, args)


def test_check_pass_exit_zero():
    res = run(["check", "--suite", "ybe"])
    assert res.exit_code == 0
    assert "PASS" in res.output


def test_check_fail_exit_one():
    res = run(["check", "--suite", "rtt-7", "--generic-q"])
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_unknown_suite_exit_two_lists_registry():
    res = run(["check", "--suite", "nope"])
    assert res.exit_code == 2
    for name in ("ybe", "rtt-7", "all"):
        assert name in res.output


def test_bad_params_exit_two():
    assert run(["check", "--suite", "ybe", "--params", "zz=1"]).exit_code == 2
    assert run(["check", "--suite", "ybe", "--params", "u"]).exit_code == 2


def test_json_output_validates_and_is_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    for out in (out1, out2):
        res = run(["check", "--suite", "involution", "--format", "json", "--out", str(out)])
        assert res.exit_code == 0
    assert out1.read_text() == out2.read_text()
    payload = json.loads(out1.read_text())
    _validate(payload)
    assert payload["suite"] == "involution"
    assert payload["status"] == PASS


def test_text_and_json_carry_identical_item_sets():
    text = run(["check", "--suite", "eigen"]).output
    blob = json.loads(run(["check", "--suite", "eigen", "--format", "json"]).output)
    for item in blob["items"]:
        assert item["label"] in text


def test_params_flag_reaches_report():
    blob = json.loads(
        run(["check", "--suite", "ybe", "--params", "u=2,s=3", "--format", "json"]).output
    )
    assert blob["params"] == {"u": "2", "s": "3"}
    _validate(blob)


def test_normalize_examples():
    assert run(["normalize", "-a", "xspace", "-e", "x1*x2"]).output.strip() == \
        "u^2*x2*x1 + s*x3*x3"
    assert run(["normalize", "-a", "xispace", "-e", "xi1*xi1"]).output.strip() == "0"
    assert run(["normalize", "-a", "TT7", "-e", "T12*T21"]).output.strip() == \
        "u^4*T21*T12"


def test_normalize_parse_error_exit_two():
    res = run(["normalize", "-a", "xspace", "-e", "x1*("])
    assert res.exit_code == 2
    assert "1:5" in res.output  # span points at the offending column


def test_normalize_accepts_dsl_file(tmp_path):
    f = tmp_path / "toy.alg"
    f.write_text("algebra toy\nparams u\ngenerators a > b\nrel a*b = u*b*a\n")
    res = run(["normalize", "-a", str(f), "-e", "a*b", "--params", "u=3"])
    assert res.exit_code == 0
    assert res.output.strip() == "3*b*a"


def test_derivative_command():
    res = run(["d", "-i", "3", "-e", "x3*x3"])
    assert res.exit_code == 0
    assert "x3" in res.output


def test_derive_command_prints_pins():
    res = run(["derive", "--ansatz", "xi"])
    assert res.exit_code == 0
    for frag in ("k = 0", "lam12 = 0", "mu12 = 0"):
        assert frag in res.output


def test_derive_variant_reports_inconsistency():
    res = run(["derive", "--ansatz", "xi3sq-variant"])
    assert res.exit_code == 1
    assert "witness" in res.output


def test_suite_registry_is_stable():
    names = suite_names()
    assert names[-1] == "all"
    assert len(names) == len(set(names))
