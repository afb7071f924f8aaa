"""Command line behavior: reports, exit codes, determinism."""

import json
import subprocess
import sys

KZ2_DOC = {
    "field": {"kind": "rationals"},
    "hopf": {
        "dim": 2,
        "basis": ["e", "g"],
        "mult": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]],
        "unit": [1, 0],
        "comult": [[0, 0, 0, 1], [1, 1, 1, 1]],
        "counit": [1, 1],
        "antipode": [[1, 0], [0, 1]],
    },
    "algebra": {"dim": 1, "basis": ["a"], "mult": [[0, 0, 0, 1]], "unit": [1]},
    "partial_action": {"act": [[0, 0, 0, 1]]},
}


def run(*args, **kw):
    return subprocess.run([sys.executable, "-m", "partialhopf", *args],
                          capture_output=True, text=True, **kw)


def report(proc):
    return json.loads(proc.stdout)


def test_validate_catalog_passes():
    p = run("validate", "catalog:sweedler-h4", "hopf")
    assert p.returncode == 0
    rep = report(p)
    assert rep["status"] == "pass"
    assert rep["command"] == "validate"
    assert all(c["status"] == "pass" for c in rep["checks"])


def test_validate_file(tmp_path):
    f = tmp_path / "kz2.json"
    f.write_text(json.dumps(KZ2_DOC))
    p = run("validate", str(f), "partial-action")
    assert p.returncode == 0
    assert report(p)["status"] == "pass"


def test_failing_check_exits_one(tmp_path):
    doc = json.loads(json.dumps(KZ2_DOC))
    doc["hopf"]["antipode"] = [[1, 0], [1, 1]]
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    p = run("validate", str(f), "hopf")
    assert p.returncode == 1
    rep = report(p)
    assert rep["status"] == "fail"
    failing = [c for c in rep["checks"] if c["status"] == "fail"]
    assert failing
    inst = failing[0]["failing_instances"][0]
    assert set(inst) == {"at", "lhs", "rhs"}


def test_parse_errors_exit_two(tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text('{"field":')
    assert run("validate", str(bad), "hopf").returncode == 2
    assert run("validate", str(tmp_path / "missing.json"), "hopf").returncode == 2
    assert run("validate", "catalog:no-such", "hopf").returncode == 2
    assert run("validate", "catalog:sweedler-h4", "hopf", "--field", "nonsense").returncode == 2
    # catalog entries carry no representation data
    assert run("validate", "catalog:kZ2-swap", "hopf-rep").returncode == 2


def test_preconditions_exit_three(tmp_path):
    p = run("morita", "catalog:kZ2-corner")
    assert p.returncode == 3
    rep = report(p)
    assert rep["status"] == "error"
    assert rep["error"]["type"] == "PreconditionViolated"
    # partial action on an algebra without a unit
    doc = json.loads(json.dumps(KZ2_DOC))
    del doc["algebra"]["unit"]
    f = tmp_path / "nounit.json"
    f.write_text(json.dumps(doc))
    assert run("validate", str(f), "partial-action").returncode == 3


def test_reports_are_deterministic():
    a = run("globalize", "catalog:kZ2-trivial-partial", "--check-minimal", "--bilateral")
    b = run("globalize", "catalog:kZ2-trivial-partial", "--check-minimal", "--bilateral")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    rep = report(a)
    assert rep["derived_objects"]["minimal"] is True
    assert rep["derived_objects"]["bilateral"] is True
    assert rep["derived_objects"]["envelope"]["dim"] == 2


def test_output_flag(tmp_path):
    out = tmp_path / "report.json"
    p = run("morita", "catalog:kZ2-trivial-partial", "--output", str(out))
    assert p.returncode == 0
    assert p.stdout == ""
    rep = json.loads(out.read_text())
    assert rep["derived_objects"]["dims"] == {
        "carrier": 1, "smash": 4, "M": 2, "N": 2, "MN": 1, "NM": 4}


def test_catalog_flag_matches_prefix_form():
    a = run("validate", "catalog:kZ2-swap", "action")
    b = run("validate", "--catalog", "kZ2-swap", "action")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode == 0


def test_dualize_round_trip_reported():
    p = run("dualize", "catalog:kZ2-trivial-partial", "to-coaction", "--envelope")
    assert p.returncode == 0
    rep = report(p)
    byname = {c["name"]: c["status"] for c in rep["checks"]}
    assert byname["round-trip"] == "pass"
    assert byname["intertwining"] == "pass"
    assert rep["derived_objects"]["partial"] is True


def test_dualize_to_action(tmp_path):
    doc = json.loads(json.dumps(KZ2_DOC))
    doc["coaction"] = {"rho": [[0, 0, 0, 1]], "partial": True}
    f = tmp_path / "co.json"
    f.write_text(json.dumps(doc))
    p = run("dualize", str(f), "to-action")
    assert p.returncode == 0
    rep = report(p)
    assert {c["name"]: c["status"] for c in rep["checks"]}["round-trip"] == "pass"


def test_rep_check_canonical():
    assert run("rep-check", "catalog:h4-partial", "hopf", "--canonical", "end").returncode == 0
    assert run("rep-check", "catalog:kZ2-corner", "group", "--canonical", "smash").returncode == 0


def test_rep_check_supplied_pi(tmp_path):
    doc = json.loads(json.dumps(KZ2_DOC))
    doc["pi"] = {"matrices": [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]]}
    f = tmp_path / "rep.json"
    f.write_text(json.dumps(doc))
    assert run("rep-check", str(f), "hopf").returncode == 0
    doc["pi"] = {"matrices": [[[1, 0], [0, 1]], [[2, 0], [0, 2]]]}
    f.write_text(json.dumps(doc))
    p = run("rep-check", str(f), "hopf")
    assert p.returncode == 1
    failing = [c for c in report(p)["checks"] if c["status"] == "fail"]
    assert failing and failing[0]["failing_instances"]


def test_globalize_reports_failing_partial_action(tmp_path):
    doc = json.loads(json.dumps(KZ2_DOC))
    doc["partial_action"] = {"act": [[0, 0, 0, 1], [1, 0, 0, 2]]}  # g scales
    f = tmp_path / "badact.json"
    f.write_text(json.dumps(doc))
    p = run("globalize", str(f))
    assert p.returncode == 1
    rep = report(p)
    assert rep["status"] == "fail"
    assert "derived_objects" not in rep
