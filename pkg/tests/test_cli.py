import json

import pytest

from gl2diagrams.cli import run_command
from gl2diagrams.family import family_from_document

BASE = ["--p", "5", "--e", "2", "--m", "0", "--r0", "3", "--r1", "2"]
WALK = ["--walk", "0,0;1,0;1,1;0,1"]


def test_weights_table():
    code, out = run_command(["weights", *BASE])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 16
    assert lines[0].startswith("((0,0),{}): det^0*(3,2)")


def test_walk_count():
    assert run_command(["walks", "--e", "2", "--count-only"]) == (0, "4\n")


def test_verify_reference_suite():
    code, out = run_command(["verify", "--suite", "example4", *BASE, *WALK])
    assert code == 0, out
    assert out.startswith("[PASS] criterion 1")


def test_export_dot():
    code, out = run_command(["export", "--format", "dot", *BASE, *WALK])
    assert code == 0
    assert out.count("style=solid") == 3 and out.count("style=dotted") == 1


def test_export_json_round_trip():
    code, out = run_command(["export", "--format", "json", *BASE, *WALK])
    assert code == 0
    docs = json.loads(out)
    fam = family_from_document(docs[0])
    assert fam.is_transitive


def test_unknown_format_is_usage_error():
    code, out = run_command(["export", "--format", "xml", *BASE])
    assert code == 1 and "invalid choice" in out


def test_non_generic_names_the_bound():
    code, out = run_command(["family", "--p", "5", "--e", "2", "--r0", "4", "--r1", "2"])
    assert code == 1 and "r0 = 4 > p-2 = 3" in out


def test_bad_walk_is_usage_error():
    code, out = run_command(["family", *BASE, "--walk", "0,0;1,1;1,0;0,1"])
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["family", *BASE, *WALK],
    ["beta", *BASE, "--walk", "all"],
    ["phigamma", *BASE, "--walk", "all", "--polynomial"],
    ["export", "--format", "json", *BASE, "--object", "beta"],
    ["weights", *BASE, "--format", "json"],
])
def test_byte_stable(argv):
    first = run_command(argv)
    assert first[0] == 0
    assert run_command(argv) == first


def test_family_table_layout():
    code, out = run_command(["family", *BASE, *WALK])
    assert "((0,0),{0})  (r0-1, p-r1-2)^-_1 --- (p-r0-1, p-r1-1)^-_0" in out


def test_beta_all_adjacent():
    code, out = run_command(["beta", *BASE, "--variant", "all-adjacent"])
    assert code == 0 and "cycle type [12, 4]" in out


def test_phigamma_report():
    code, out = run_command(["phigamma", *BASE, *WALK])
    rep = json.loads(out)[0]
    assert rep["A_decimal"] == "26712331464" and rep["level"] == 16


def test_verify_reports_failure_code():
    # the exponent display check does not hold (see README); the suite must say so
    code, out = run_command(["verify", "--suite", "phigamma", *BASE, *WALK])
    assert code == 2
    assert "[FAIL] criterion 6" in out
