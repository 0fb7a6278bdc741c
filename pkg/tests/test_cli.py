"""The command-line surface: report shape, exit codes, and JSON handling."""

import json

import pytest

from listchrom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    report = json.loads(out.splitlines()[-1]) if out else None
    return code, report


def check_report_shape(report, command):
    assert report["command"] == command
    assert report["outcome"] in ("ok", "violation")
    assert isinstance(report["inputDigest"], str) and len(report["inputDigest"]) == 16
    assert isinstance(report["elapsed"], int) and report["elapsed"] >= 0
    assert isinstance(report["payload"], dict)


def test_classify(capsys):
    code, report = run(capsys, "classify", "--spec", '{"theta": [2, 4, 4]}')
    assert code == 0
    check_report_shape(report, "classify")
    assert report["payload"]["case"] == 4
    assert report["payload"]["known42Choosable"]


def test_classify_from_file(capsys, tmp_path):
    spec_file = tmp_path / "spec.json"
    spec_file.write_text('{"oddCycle": 5}')
    code, report = run(capsys, "classify", "--spec", f"@{spec_file}")
    assert code == 0
    assert report["payload"]["case"] == 1


def test_classify_bad_json_is_usage_error(capsys):
    code, _ = run(capsys, "classify", "--spec", "not json")
    assert code == 2


def test_path_check(capsys):
    instance = json.dumps(
        {"m": 1, "lists": [[1, 2, 3, 4], [3, 4, 5, 6], [5, 6, 7, 8]]}
    )
    code, report = run(capsys, "path-check", "--json", instance, "--colour")
    assert code == 0
    payload = report["payload"]
    assert payload["S_L"] == 8 and payload["colourable"]
    assert payload["X1hat"] == [1, 2] and payload["Xnhat"] == [7, 8]
    assert payload["colouring"]["b"] == 2


def test_path_check_uncolourable(capsys):
    instance = json.dumps({"m": 1, "lists": [[3, 4], [3, 4, 5, 6], [5, 6]]})
    code, report = run(capsys, "path-check", "--json", instance)
    assert code == 0
    assert not report["payload"]["colourable"]


def test_dam(capsys):
    instance = json.dumps(
        {"m": 1, "lists": [[1, 2, 3, 4], [3, 4, 5, 6], [5, 6, 7, 8]]}
    )
    code, report = run(capsys, "dam", "--json", instance, "--s", "[1, 2]", "--t", "[7, 8]")
    assert code == 0
    assert report["payload"] == {"damage": 4, "closedForm": 4}


def test_bad_sets(capsys):
    instance = json.dumps({"m": 1, "lists": [[1, 2, 3, 4]] * 3})
    code, report = run(capsys, "bad-sets", "--json", instance, "--w", "[1, 2, 3, 4]")
    assert code == 0
    assert report["payload"]["count"] == 0 and report["payload"]["bound"] == 3


def test_colour_random(capsys):
    code, report = run(
        capsys, "colour", "--spec", '{"theta": [2, 4, 4]}', "--m", "1", "--seed", "3"
    )
    assert code == 0
    check_report_shape(report, "colour")
    chosen = report["payload"]["colouring"]["chosen"]
    assert all(len(v) == 2 for v in chosen.values())


def test_colour_from_instance_file(capsys, tmp_path):
    inst = {"a": 4, "lists": {str(v): [1, 2, 3, 4] for v in range(6)}}
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(inst))
    code, report = run(
        capsys, "colour", "--spec", '{"theta": [1, 3, 3]}', "--instance", str(path)
    )
    assert code == 0


def test_verify_subcommands_small(capsys):
    for statement, extra in [
        ("lemma4", ["--trials", "40"]),
        ("lemma7", ["--trials", "200"]),
        ("lemma8", ["--trials", "100"]),
        ("lemma11", ["--trials", "20"]),
        ("lemma9", ["--max-m", "2"]),
        ("monotonicity", ["--max-m", "2"]),
        ("ctx", ["--max-m", "2"]),
        ("theorem2", ["--trials", "5"]),
    ]:
        code, report = run(capsys, "verify", statement, *extra)
        assert code == 0, statement
        check_report_shape(report, f"verify {statement}")
        assert report["outcome"] == "ok"


def test_verify_reports_are_deterministic(capsys):
    _, a = run(capsys, "verify", "lemma8", "--trials", "50", "--seed", "9")
    _, b = run(capsys, "verify", "lemma8", "--trials", "50", "--seed", "9")
    assert a["payload"] == b["payload"]
    assert a["inputDigest"] == b["inputDigest"]


def test_unknown_command_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_missing_required_argument(capsys):
    assert main(["classify"]) == 2
