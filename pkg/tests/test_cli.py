import json
import subprocess
import sys

import pytest

from insep.catalog import load_default_catalog
from insep.cli import JobValidationError, main, run_catalog, run_job, strip_timing
from insep.fieldarith import FunctionField, parse_expr


def canonical(report):
    return json.dumps(strip_timing(report), sort_keys=True)


def test_run_job_classify():
    job = {"field": {"p": 2, "vars": ["x", "y"]},
           "tasks": [{"kind": "classify", "lambda": ["x", "y", "1"]}]}
    report = run_job(job)
    assert report["ok"]
    result = report["tasks"][0]["result"]
    assert result["d"] == 2
    assert result["verdict"] == "Regular"
    assert result["rational_point"] is None


def test_empty_task_list():
    report = run_job({"field": {"p": 2, "vars": ["t"]}, "tasks": []})
    assert report["ok"]
    assert report["tasks"] == []


def test_malformed_expression_fails_validation():
    job = {"field": {"p": 2, "vars": ["t"]},
           "tasks": [{"kind": "classify", "lambda": ["t", "s+", "1"]}]}
    with pytest.raises(JobValidationError):
        run_job(job)


def test_unknown_task_kind_rejected():
    job = {"field": {"p": 2, "vars": ["t"]}, "tasks": [{"kind": "frobnicate"}]}
    with pytest.raises(JobValidationError):
        run_job(job)


def test_task_failure_is_isolated():
    job = {"field": {"p": 2, "vars": ["s", "t"]},
           "tasks": [
               {"kind": "curve-normalize", "lambda": ["s^2", "t^2", "1"]},  # d = 0
               {"kind": "pdegree", "exprs": ["s", "t"]},
           ]}
    report = run_job(job)
    assert not report["ok"]
    assert not report["tasks"][0]["ok"]
    assert report["tasks"][0]["error"]["type"] == "WrongInvariantError"
    assert report["tasks"][1]["ok"]
    assert report["tasks"][1]["result"]["d"] == 2


def test_fail_fast_stops():
    job = {"field": {"p": 2, "vars": ["s", "t"]},
           "tasks": [
               {"kind": "curve-normalize", "lambda": ["s^2", "t^2", "1"]},
               {"kind": "pdegree", "exprs": ["s", "t"]},
           ]}
    report = run_job(job, fail_fast=True)
    assert len(report["tasks"]) == 1


def test_reports_deterministic_across_runs_and_jobs():
    job = {"field": {"p": 3, "vars": ["s", "t"]},
           "tasks": [
               {"kind": "classify", "lambda": ["t", "s^3*t", "1"]},
               {"kind": "curve-conductor", "lambda": ["t", "s^3*t", "1"]},
               {"kind": "pdegree", "exprs": ["s", "t", "s*t"]},
               {"kind": "verify-codim", "lambda": ["t", "t^2", "1"]},
           ]}
    a = canonical(run_job(job, jobs=1))
    b = canonical(run_job(job, jobs=1))
    c = canonical(run_job(job, jobs=4))
    assert a == b == c


def test_report_expressions_reparse():
    job = {"field": {"p": 3, "vars": ["s", "t"]},
           "tasks": [{"kind": "classify", "lambda": ["t", "s^3*t", "1"]},
                     {"kind": "pdegree", "exprs": ["s^2/(s+t)", "t"]}]}
    report = run_job(job)
    K = FunctionField(3, ["s", "t"])
    point = report["tasks"][0]["result"]["rational_point"]
    value = K.zero()
    for lam, xs in zip(["t", "s^3*t", "1"], point):
        value = value + parse_expr(lam, K) * (parse_expr(xs, K) ** 3)
    assert value.is_zero()
    for expr in report["tasks"][1]["result"]["selected"]:
        parse_expr(expr, K)


def test_verify_all_catalog_passes():
    entries = load_default_catalog()
    report = run_catalog(entries)
    assert report["ok"]
    assert report["count"] >= 12


def test_verify_all_negative_control():
    entries = load_default_catalog()
    entries[0] = dict(entries[0])
    entries[0]["expect"] = dict(entries[0]["expect"], d=1)
    report = run_catalog(entries)
    assert not report["ok"]
    assert not report["entries"][0]["ok"]
    assert report["entries"][0]["name"] == entries[0]["name"]


def test_cli_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"field": {"p": 2, "vars": ["t"]},
                                "tasks": [{"kind": "pdegree", "exprs": ["t"]}]}))
    assert main(["run", str(good)]) == 0
    capsys.readouterr()

    bad_expr = tmp_path / "bad.json"
    bad_expr.write_text(json.dumps({"field": {"p": 2, "vars": ["t"]},
                                    "tasks": [{"kind": "pdegree", "exprs": ["t+*1"]}]}))
    assert main(["run", str(bad_expr)]) == 2
    err = capsys.readouterr().err
    assert "position" in err

    failing = tmp_path / "fail.json"
    failing.write_text(json.dumps({"field": {"p": 2, "vars": ["s", "t"]},
                                   "tasks": [{"kind": "curve-normalize",
                                              "lambda": ["s^2", "t^2", "1"]}]}))
    assert main(["run", str(failing)]) == 1
    capsys.readouterr()


def test_cli_stdin_and_subprocess():
    job = json.dumps({"field": {"p": 2, "vars": ["s", "t"]},
                      "tasks": [{"kind": "rational-point", "lambda": ["t", "t", "1"]}]})
    proc = subprocess.run([sys.executable, "-m", "insep.cli", "run", "-"],
                          input=job, capture_output=True, text=True)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["tasks"][0]["result"]["point"] == ["1", "1", "0"]


def test_cli_classify_command(capsys):
    code = main(["classify", "--field", '{"p":2,"vars":["x","y"]}',
                 "--lambda", "x", "y", "1"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["tasks"][0]["result"]["d"] == 2


def test_cli_pdegree_command(capsys):
    code = main(["pdegree", "--field", '{"p":2,"vars":["s","t"]}', "t", "s^2*t"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["tasks"][0]["result"]["d"] == 1


def test_remaining_task_kinds():
    job = {"field": {"p": 3, "vars": ["t"]},
           "tasks": [
               {"kind": "curve-singular", "lambda": ["t", "t^2", "1"]},
               {"kind": "curve-cohomology", "lambda": ["t", "t^2", "1"]},
               {"kind": "verify-all"},
           ]}
    report = run_job(job)
    assert report["ok"]
    singular = report["tasks"][0]["result"]
    assert singular["residue_degree"] == 3
    assert singular["point_on_line"][0] == {"coeffs": ["0", "1", "0"]}
    cohomology = report["tasks"][1]["result"]
    assert cohomology == {"h0": 1, "h1": 1, "admissible": True,
                          "operations": ["conductor_profile", "glueing_cohomology"]}
    assert report["tasks"][2]["result"]["ok"]


def test_verify_all_cli_exit_codes(tmp_path, capsys):
    assert main(["verify-all"]) == 0
    capsys.readouterr()
    broken = list(load_default_catalog())
    broken[3] = dict(broken[3])
    broken[3]["expect"] = dict(broken[3]["expect"], codim=7)
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(broken))
    assert main(["verify-all", "--catalog", str(path)]) == 1
    err = capsys.readouterr().err
    assert broken[3]["name"] in err
