import json
import subprocess
import sys
from fractions import Fraction

import pytest

from tetraquartic import cli
from tetraquartic.quartic import REFERENCE_SAMPLE
from tetraquartic.report import FAIL, PASS, manifest, render, run_report


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "tetraquartic.cli", *args], capture_output=True, text=True,
                          timeout=600)


def all_strings(obj):
    if isinstance(obj, dict):
        return all(all_strings(v) for v in obj.values())
    if isinstance(obj, list):
        return all(all_strings(v) for v in obj)
    return isinstance(obj, str)


def test_render_is_exact():
    assert render(Fraction(-3, 8)) == "-3/8"
    assert render(Fraction(4, 2)) == "2"
    assert render(True) == "true"
    assert render([Fraction(1, 2), 3]) == "[1/2, 3]"


def test_jobs_resolution():
    assert cli.resolve_jobs(None, {}) == 1
    assert cli.resolve_jobs(None, {"TETRAQUARTIC_JOBS": "3"}) == 3
    assert cli.resolve_jobs(2, {"TETRAQUARTIC_JOBS": "3"}) == 2
    with pytest.raises(SystemExit):
        cli.resolve_jobs(None, {"TETRAQUARTIC_JOBS": "many"})
    with pytest.raises(SystemExit):
        cli.resolve_jobs(0, {})


def test_every_claim_is_in_the_manifest():
    records = run_report("lattice") + run_report("discform") + run_report("isometry")
    ids = [r.claim_id for r in records]
    assert len(ids) == len(set(ids))
    assert set(ids) <= set(manifest())
    assert all(r.location == manifest()[r.claim_id]["location"] for r in records)


def test_algebraic_sections_pass_except_cyclotomic_evidence():
    records = run_report("lattice") + run_report("discform")
    assert all(r.status == PASS for r in records)
    failing = [r.claim_id for r in run_report("isometry") if r.status == FAIL]
    assert failing == ["isometry.product-noncyclotomic-factor"]


def test_json_output_is_deterministic_and_stringly():
    first = run_cli("discform", "--format", "json")
    second = run_cli("discform", "--format", "json")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    assert all_strings(doc)
    ids = [c["claim_id"] for c in doc["claims"]]
    assert ids == sorted(ids)
    assert doc["generators"]["q(lam23)"] == {"canonical": "3/2", "signed": "-1/2"}


def test_text_output_uses_fractions():
    out = run_cli("discform")
    assert "3/8" in out.stdout and "0.375" not in out.stdout
    assert "signed = -1/2" in out.stdout


def test_lattice_subcommand_dumps_registry():
    out = run_cli("lattice", "--format", "json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["lattice"]["lattice"]["gram"][0][0] == "-2"
    assert doc["summary"]["fail"] == "0"


def test_isometry_subcommand_exits_nonzero_on_failed_claim():
    out = run_cli("isometry", "--format", "json")
    assert out.returncode == 1
    doc = json.loads(out.stdout)
    assert doc["alpha_beta"]["verdict"] == "infinite"


def test_bad_input_file(tmp_path):
    path = tmp_path / "in.json"
    path.write_text('{"a0": "1"}')
    out = run_cli("quartic", "--input", str(path))
    assert out.returncode == 2 and "missing field" in out.stderr
    out = run_cli("quartic", "--input", str(tmp_path / "absent.json"))
    assert out.returncode == 2


def test_degenerate_input_fails_with_degenerate_coefficient(tmp_path):
    doc = REFERENCE_SAMPLE.to_json()
    doc["a0"] = "0"
    path = tmp_path / "degenerate.json"
    path.write_text(json.dumps(doc))
    out = run_cli("quartic", "--input", str(path), "--format", "json")
    assert out.returncode == 1
    claims = {c["claim_id"]: c for c in json.loads(out.stdout)["claims"]}
    assert claims["crossratio.relation"]["status"] == "fail"
    assert "DegenerateCoefficient" in claims["crossratio.relation"]["computed"]
    assert "DegenerateCoefficient" in claims["quartic.singular-count"]["computed"]
    assert claims["fibration.six-nodal-model"]["status"] == "unverified"


def test_unknown_subcommand():
    with pytest.raises(SystemExit):
        cli.main(["nonsense"])
