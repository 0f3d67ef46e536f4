import json

import pytest

from palg.cli import main
from palg.corpus import (
    heisenberg_zero_dot,
    serialize_document,
    serialize_manifest,
    two_dim_nonabelian,
    xyz_algebra,
    zero_algebra,
)
from palg.fields import FieldSpec

GF2 = FieldSpec.prime(2)
GF5 = FieldSpec.prime(5)


@pytest.fixture()
def heis_file(tmp_path):
    path = tmp_path / "heis.palg"
    path.write_text(serialize_document(heisenberg_zero_dot(GF2)), encoding="utf-8")
    return path


@pytest.fixture()
def bad_file(tmp_path):
    path = tmp_path / "bad.palg"
    path.write_text(serialize_document(xyz_algebra(GF5, allow_invalid=True)),
                    encoding="utf-8")
    return path


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_valid_file(capsys, heis_file):
    code, out, _ = run_cli(capsys, "validate", str(heis_file))
    assert code == 0 and "VALID" in out


def test_validate_violating_file(capsys, bad_file):
    code, out, _ = run_cli(capsys, "validate", str(bad_file))
    assert code == 1
    assert "INVALID leibniz" in out and "(0, 1, 0)" in out


def test_validate_missing_file(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "validate", str(tmp_path / "nope.palg"))
    assert code == 2 and "ERROR" in out


def test_validate_mixed_files(capsys, heis_file, bad_file, tmp_path):
    code, out, _ = run_cli(capsys, "validate", str(heis_file), str(bad_file))
    assert code == 1


def test_analyze_heisenberg(capsys, heis_file):
    code, out, _ = run_cli(capsys, "analyze", str(heis_file))
    assert code == 0
    assert "classification       nilpotent" in out
    assert "frattini_ideal       span(z)" in out


def test_analyze_json_envelope(capsys, heis_file):
    code, out, _ = run_cli(capsys, "analyze", str(heis_file), "--format", "json")
    assert code == 0
    envelope = json.loads(out)
    assert envelope["command"] == "analyze"
    assert envelope["inputs"][0]["sha256"]
    assert envelope["result"]["classification"] == "nilpotent"
    assert envelope["result"]["phi_free"] is False


def test_analyze_respects_budget(capsys, heis_file):
    code, _, err = run_cli(capsys, "analyze", str(heis_file), "--budget-dim", "2")
    assert code == 3 and "max_dim" in err


def test_analyze_rejects_invalid_without_flag(capsys, bad_file):
    code, _, err = run_cli(capsys, "analyze", str(bad_file))
    assert code == 1 and "leibniz" in err


def test_analyze_allow_invalid(capsys, bad_file):
    code, out, _ = run_cli(capsys, "analyze", str(bad_file),
                           "--allow-invalid", "--budget-q", "5")
    assert code == 0
    assert "radical              span(x, y, z)" in out


def test_series_command(capsys, heis_file):
    code, out, _ = run_cli(capsys, "series", str(heis_file), "--kind", "derived")
    assert code == 0
    assert "terminates at zero, step 2" in out
    code, out, _ = run_cli(capsys, "series", str(heis_file), "--kind", "assoc-lower",
                           "--format", "json")
    payload = json.loads(out)["result"]
    assert payload["terminates"] and payload["step"] == 1


def _write_corpus(tmp_path, algebras):
    names = []
    for alg in algebras:
        filename = f"{alg.name}.palg"
        (tmp_path / filename).write_text(serialize_document(alg), encoding="utf-8")
        names.append(filename)
    manifest = tmp_path / "manifest.json"
    manifest.write_text(serialize_manifest(names), encoding="utf-8")
    return manifest


def test_check_command_all_pass(capsys, tmp_path):
    manifest = _write_corpus(tmp_path, [zero_algebra(GF2, 2), heisenberg_zero_dot(GF2)])
    code, out, _ = run_cli(capsys, "check", str(manifest))
    assert code == 0
    assert "0 fail" in out


def test_check_command_filter_and_exit_code(capsys, tmp_path, bad_file):
    manifest = _write_corpus(tmp_path, [xyz_algebra(GF5, allow_invalid=True)])
    code, out, _ = run_cli(capsys, "check", str(manifest), "--allow-invalid",
                           "--budget-q", "5", "--theorem", "Def-1.1")
    assert code == 1
    assert "FAIL" in out and "witness" in out


def test_check_rejects_invalid_corpus_without_flag(capsys, tmp_path):
    manifest = _write_corpus(tmp_path, [xyz_algebra(GF5, allow_invalid=True)])
    code, _, err = run_cli(capsys, "check", str(manifest))
    assert code == 1 and "leibniz" in err


def test_check_list(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "check", "unused", "--list")
    assert code == 0
    assert "Thm-4.11" in out and "Def-1.1" in out


def test_check_determinism_across_jobs(capsys, tmp_path):
    manifest = _write_corpus(tmp_path, [zero_algebra(GF2, 2), two_dim_nonabelian(GF2),
                                        heisenberg_zero_dot(GF2)])
    _, out1, _ = run_cli(capsys, "check", str(manifest), "--format", "json", "--jobs", "1")
    _, out4, _ = run_cli(capsys, "check", str(manifest), "--format", "json", "--jobs", "4")
    a, b = json.loads(out1), json.loads(out4)
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_enumerate_writes_files_and_manifest(capsys, tmp_path):
    outdir = tmp_path / "corpus"
    code, out, _ = run_cli(capsys, "enumerate", "1", "2", str(outdir))
    assert code == 0 and "wrote 2 algebras" in out
    files = sorted(p.name for p in outdir.iterdir())
    assert files == ["gf2-d1-00000.palg", "gf2-d1-00001.palg", "manifest.json"]
    code, out, _ = run_cli(capsys, "validate", str(outdir / "gf2-d1-00001.palg"))
    assert code == 0
    code, out, _ = run_cli(capsys, "check", str(outdir / "manifest.json"))
    assert code == 0


def test_check_on_exhaustive_dim2_manifest(capsys, tmp_path):
    outdir = tmp_path / "exh"
    code, _, _ = run_cli(capsys, "enumerate", "2", "2", str(outdir))
    assert code == 0
    code, out, _ = run_cli(capsys, "check", str(outdir / "manifest.json"), "--jobs", "2")
    assert code == 0
    assert "0 fail" in out


def test_enumerate_budget_exit(capsys, tmp_path):
    code, _, err = run_cli(capsys, "enumerate", "3", "5", str(tmp_path / "x"))
    assert code == 3


def test_usage_errors_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["series"]) == 2


def test_out_flag_writes_file(capsys, heis_file, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "analyze", str(heis_file), "--format", "json",
                           "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "analyze"
