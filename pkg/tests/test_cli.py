import json
import subprocess
import sys

import pytest

from laplace_spectra import __version__
from laplace_spectra.cli import main


def run(argv, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(argv + ["--out", str(out)])
    return code, out.read_bytes()


def test_spectrum_report_fields(tmp_path):
    csv_path = tmp_path / "t.csv"
    code, raw = run(["spectrum", "--system", "A1", "--cutoff", "200", "--csv", str(csv_path)], tmp_path)
    assert code == 0
    report = json.loads(raw)
    for key in ("system", "lattice", "cutoff", "records", "collision_classes",
                "config", "conventions", "version"):
        assert key in report
    assert report["version"] == __version__
    assert {"root_length", "delta_mode", "resultant"} <= set(report["conventions"])
    assert all(c["size"] == 1 for c in report["collision_classes"])
    assert csv_path.read_text().startswith("mu,a2,lambda,dim,type\n")


def test_collisions_contains_a2_pair(tmp_path):
    code, raw = run(["collisions", "--system", "A2", "--cutoff", "200/3"], tmp_path)
    report = json.loads(raw)
    hit = [c for c in report["collision_classes"] if c["a2"] == "182/3"]
    assert hit and hit[0]["nondual_pair_exists"]
    assert ["0/1", "8/1"] in hit[0]["members"] and ["4/1", "5/1"] in hit[0]["members"]


def test_sphere_sym_report(tmp_path):
    code, raw = run(["sphere-sym", "--system", "A2", "--a2", "2"], tmp_path)
    report = json.loads(raw)
    assert code == 0
    assert report["group_order"] == 12 and report["transitive"] and report["weyl_containment"]
    code, raw = run(["sphere-sym", "--system", "B2", "--a2-max", "13"], tmp_path)
    report = json.loads(raw)
    assert not report["all_transitive"] and report["all_weyl_contained"]


def test_types_and_assemble(tmp_path):
    code, raw = run(["types", "--system", "A1", "--weight", "3;4"], tmp_path)
    rows = json.loads(raw)["types"]
    assert [r["type"] for r in rows] == ["quaternionic", "real"]
    assert [r["oracle_type"] for r in rows] == ["quaternionic", "real"]
    code, raw = run(["assemble", "--type", "quaternionic", "--m", "2"], tmp_path)
    assert json.loads(raw)["assembly"]["complex"] == "(ℍ⊗V)^{⊕1}"


def test_certify_then_verdict(tmp_path):
    code, _ = run(["certify", "--mmax", "4"], tmp_path, "cert.json")
    assert code == 0
    code, raw = run(["verdict", "--input", str(tmp_path / "cert.json")], tmp_path)
    report = json.loads(raw)
    assert code == 0 and report["real_G_simple"] and report["complex_Q8xG_simple"]
    code, raw = run(["assemble", "--input", str(tmp_path / "cert.json")], tmp_path)
    assert code == 0 and len(json.loads(raw)["per_rep"]) == 5


def test_verdict_on_spectrum_report(tmp_path):
    run(["spectrum", "--system", "A1", "--lattice", "even", "--cutoff", "40"], tmp_path, "s.json")
    code, raw = run(["verdict", "--input", str(tmp_path / "s.json")], tmp_path)
    assert code == 0 and json.loads(raw)["real_G_simple"]
    # below 182/3 every A2 collision is a dual pair, which shares one real block
    run(["spectrum", "--system", "A2", "--cutoff", "60"], tmp_path, "s2.json")
    code, raw = run(["verdict", "--input", str(tmp_path / "s2.json")], tmp_path)
    assert code == 0 and json.loads(raw)["real_G_simple"]
    run(["spectrum", "--system", "A2", "--cutoff", "182/3"], tmp_path, "s3.json")
    code, raw = run(["verdict", "--input", str(tmp_path / "s3.json")], tmp_path)
    assert code == 0 and not json.loads(raw)["real_G_simple"]


def test_operator_output(tmp_path):
    code, raw = run(["operator", "--m", "1", "--kappa", "1,0,0;0,2,0;0,0,3"], tmp_path)
    assert json.loads(raw)["operator"]["char_poly_text"] == "t^2 - 12*t + 36"


def test_config_mirror(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"system": "A2", "cutoff": "20"}))
    code, a = run(["spectrum", "--config", str(cfg)], tmp_path, "a.json")
    code, b = run(["spectrum", "--system", "A2", "--cutoff", "20"], tmp_path, "b.json")
    assert a == b
    cfg.write_text(json.dumps({"nonsense": 1}))
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--config", str(cfg)])
    assert exc.value.code == 64


@pytest.mark.parametrize("argv,code", [
    (["frobnicate"], 64),
    (["spectrum", "--system", "A2", "--bogus", "1"], 64),
])
def test_usage_errors(argv, code):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == code


@pytest.mark.parametrize("argv,code", [
    (["spectrum", "--system", "E8", "--cutoff", "5"], 64),
    (["spectrum", "--system", "A2"], 64),
    (["spectrum", "--system", "A2", "--cutoff", "1/0"], 64),
    (["assemble", "--type", "quaternionic", "--m", "3"], 2),
    (["sphere-sym", "--system", "A1", "--lattice", "root", "--a2", "2"], 2),
    (["certify", "--mmax", "40"], 3),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code


def test_selfcheck_passes(capsys):
    assert main(["selfcheck"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"]


def test_entry_point_module():
    proc = subprocess.run([sys.executable, "-m", "laplace_spectra.cli", "roots", "--system", "G2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["weyl_group_order"] == 12


@pytest.mark.parametrize("argv", [
    ["roots", "--system", "B3"],
    ["spectrum", "--system", "G2", "--cutoff", "60"],
    ["collisions", "--system", "B2", "--cutoff", "40"],
    ["sphere-sym", "--system", "G2", "--a2", "14"],
    ["types", "--system", "A2", "--cutoff", "20"],
    ["certify", "--mmax", "3"],
    ["operator", "--m", "2"],
])
def test_byte_identical_runs(argv, tmp_path):
    assert run(argv, tmp_path, "a.json") == run(argv, tmp_path, "b.json")
