"""CLI surface: formats, exit codes, and reproducibility."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from wavesets.cli import main
from wavesets.congruence import LITTLEWOOD_PALEY
from wavesets.families import journe, journe_path
from wavesets.interpolation import CoefficientFamily, build_sigma
from wavesets.jsonio import matrix_from_json, matrix_to_json
from wavesets.pisets import pi_mult
from wavesets.symbols import dpf_constant
from wavesets.unitary_lab import cyclic_group_table


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_verify_roundtrip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "family", "--name", "journe-path", "--param", "0")
    assert code == 0
    jpath = write_json(tmp_path / "j.json", json.loads(out))
    code, out, _ = run_cli(capsys, "verify", "--set", jpath)
    assert code == 0
    verdict = json.loads(out)
    assert verdict["is_wavelet_set"] is True
    assert [p["shift"] for p in verdict["translation"]["pieces"]] == [3, 1, 0, -2]


def test_verify_negative_exit_code(tmp_path, capsys):
    half = write_json(
        tmp_path / "half.json",
        {"unit": "pi", "intervals": [{"a": {"num": 2, "den": 1}, "b": {"num": 4, "den": 1}}]},
    )
    code, out, _ = run_cli(capsys, "verify", "--set", half)
    assert code == 1
    assert json.loads(out)["failure_reason"] == "NotDilationCongruent"


def test_family_variants(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "family", "--name", "shannon")
    assert code == 0 and len(json.loads(out)["intervals"]) == 2
    code, out, _ = run_cli(capsys, "family", "--name", "shannon-path", "--param", "1/2")
    assert code == 0
    code, out, _ = run_cli(capsys, "family", "--name", "d-dilation", "--param", "5/2")
    assert code == 0
    a = write_json(
        tmp_path / "a.json",
        {"unit": "pi", "intervals": [{"a": {"num": 1, "den": 1}, "b": {"num": 5, "den": 4}}]},
    )
    code, out, _ = run_cli(capsys, "family", "--name", "subset-ext", "--set", a)
    assert code == 0
    # missing parameter is an input error
    code, _, err = run_cli(capsys, "family", "--name", "journe-path")
    assert code == 2 and json.loads(err)["error"]["code"] == "missing-flag"


def test_family_out_of_range_param(capsys):
    code, _, err = run_cli(capsys, "family", "--name", "shannon-path", "--param", "1")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "invalid-input"


def test_interp_reports_torsion(tmp_path, capsys):
    e = write_json(tmp_path / "e.json", journe().to_json())
    f = write_json(tmp_path / "f.json", journe_path(pi_mult(1, 14)).to_json())
    code, out, _ = run_cli(capsys, "interp", "-e", e, "-f", f, "--kmax", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["torsion_order"] == 2
    assert payload["is_involution"] is True
    assert payload["measure_preserving"] is True


def test_interp_criterion(tmp_path, capsys):
    sigma = build_sigma(journe(), journe_path(pi_mult(1, 14)))
    theta = 0.6
    fam = CoefficientFamily(
        2,
        [dpf_constant(complex(math.cos(theta))), dpf_constant(1j * math.sin(theta))],
        sigma,
    )
    good = write_json(tmp_path / "fam.json", fam.to_json())
    code, out, _ = run_cli(capsys, "interp", "--criterion", good)
    assert code == 0 and json.loads(out)["passes"] is True

    bad = CoefficientFamily(2, [dpf_constant(1 + 0j), dpf_constant(1 + 0j)], sigma)
    bad_path = write_json(tmp_path / "bad.json", bad.to_json())
    code, out, _ = run_cli(capsys, "interp", "--criterion", bad_path)
    assert code == 1 and json.loads(out)["passes"] is False


def test_gram_promotes_sets_and_reports_deviation(tmp_path, capsys):
    spath = write_json(tmp_path / "s.json", journe().to_json())
    code, out, _ = run_cli(capsys, "gram", "--symbol", spath, "--n", "1", "--l", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 15
    assert payload["max_deviation_from_identity"] < 1e-12
    m = matrix_from_json(payload["matrix"])
    assert m.shape == (15, 15)


def test_sample_csv(tmp_path, capsys):
    spath = write_json(tmp_path / "s.json", {"unit": "pi", "intervals": [
        {"a": {"num": -2, "den": 1}, "b": {"num": -1, "den": 1}},
        {"a": {"num": 1, "den": 1}, "b": {"num": 2, "den": 1}},
    ]})
    grid = tmp_path / "grid.csv"
    grid.write_text("0\n0.5\n")
    out_csv = tmp_path / "samples.csv"
    code = main(["sample", "--symbol", spath, "--grid", str(grid), "--out", str(out_csv)])
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "t,re,im"
    t0 = [float(x) for x in lines[1].split(",")]
    assert t0[1] == pytest.approx(1.0)


def test_lab_subcommands(tmp_path, capsys):
    table = write_json(tmp_path / "t.json", {"table": cyclic_group_table(2)})
    code, out, _ = run_cli(capsys, "lab", "regular-rep", "--table", table)
    assert code == 0
    system = json.loads(out)
    syspath = write_json(tmp_path / "sys.json", system)
    e1 = write_json(tmp_path / "e1.json", matrix_to_json(np.array([1.0, 0.0])))
    e2 = write_json(tmp_path / "e2.json", matrix_to_json(np.array([0.0, 1.0])))
    code, out, _ = run_cli(capsys, "lab", "wandering", "--system", syspath, "--vector", e1, "--complete")
    assert code == 0 and json.loads(out)["wandering"] is True
    code, out, _ = run_cli(capsys, "lab", "local-commutant", "--system", syspath, "--vector", e1)
    assert code == 0 and json.loads(out)["dimension"] == 2
    code, out, _ = run_cli(capsys, "lab", "interp-unitary", "--system", syspath, "--psi", e1, "--eta", e2)
    assert code == 0
    v = matrix_from_json(json.loads(out)["unitary"])
    assert np.allclose(v, [[0, 1], [1, 0]])
    code, out, _ = run_cli(capsys, "lab", "pair-test", "--system", syspath, "--psi", e1, "--eta", e2, "--alpha", "0.5")
    assert code == 0 and json.loads(out) == {"rho_is_wandering": True, "v_squared_is_identity": True}
    code, out, _ = run_cli(capsys, "lab", "riesz", "--system", syspath, "--psi", e1, "--eta", e2, "--lam=-1,0")
    assert code == 1 and json.loads(out)["riesz"] is False
    code, out, _ = run_cli(capsys, "lab", "frame-vector", "--system", syspath, "--vector", e2, "--psi", e1)
    assert code == 0 and json.loads(out)["classification"] == "wandering"


def test_frames_subcommands(tmp_path, capsys):
    p = np.array([[1, 0, 0], [0, 1 / np.sqrt(2), 1 / np.sqrt(2)]], dtype=complex)
    fpath = write_json(tmp_path / "p.json", matrix_to_json(p))
    code, out, _ = run_cli(capsys, "frames", "bounds", "--frame", fpath)
    assert code == 0
    payload = json.loads(out)
    assert payload["lower"] == pytest.approx(1.0) and payload["is_frame"]
    code, out, _ = run_cli(capsys, "frames", "parseval", "--frame", fpath)
    assert code == 0 and json.loads(out)["parseval"] is True

    code, out, _ = run_cli(capsys, "frames", "naimark", "--frame", fpath)
    assert code == 0
    g = matrix_from_json(json.loads(out)["complement"])
    gpath = write_json(tmp_path / "g.json", matrix_to_json(g))
    code, out, _ = run_cli(capsys, "frames", "disjoint", "--frame", fpath, "--g", gpath)
    assert code == 0 and json.loads(out)["strongly_disjoint"] is True

    x = write_json(tmp_path / "x.json", matrix_to_json(np.array([0.3, -0.7j])))
    y = write_json(tmp_path / "y.json", matrix_to_json(np.array([1.1 + 0.2j])))
    code, out, _ = run_cli(capsys, "frames", "multiplex", "--frame", fpath, "--g", gpath, "--x", x, "--y", y)
    assert code == 0 and json.loads(out)["max_error"] < 1e-10

    notp = write_json(tmp_path / "np.json", matrix_to_json(np.eye(2) * 2))
    code, out, _ = run_cli(capsys, "frames", "parseval", "--frame", notp)
    assert code == 1


def test_decompose_subcommands(tmp_path, capsys):
    b = write_json(tmp_path / "b.json", matrix_to_json(np.diag([1.5, 0.5]).astype(complex)))
    code, out, _ = run_cli(capsys, "decompose", "--matrix", b, "--weights", "1,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["residual"] < 1e-10

    code, out, _ = run_cli(capsys, "decompose", "--matrix", b, "--projections", "2")
    assert code == 0

    t = write_json(tmp_path / "t.json", matrix_to_json(np.diag([1.0, 2.0]).astype(complex)))
    code, out, _ = run_cli(capsys, "decompose", "--matrix", t, "--etf", "3")
    assert code == 0
    assert json.loads(out)["frame_bound"] == pytest.approx(2.4)

    code, _, err = run_cli(capsys, "decompose", "--matrix", b, "--weights", "1.9,0.1")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "infeasible-weights"

    code, _, err = run_cli(capsys, "decompose", "--matrix", b)
    assert code == 2 and json.loads(err)["error"]["code"] == "missing-flag"


def test_malformed_json_is_input_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "verify", "--set", str(bad))
    assert code == 2
    assert json.loads(err)["error"]["code"] == "malformed-json"
    code, _, err = run_cli(capsys, "verify", "--set", str(tmp_path / "nope.json"))
    assert code == 2
    assert json.loads(err)["error"]["code"] == "missing-file"


def test_outputs_byte_identical_across_runs(tmp_path, capsys):
    jpath = write_json(tmp_path / "j.json", journe().to_json())
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "verify", "--set", jpath)
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_console_script_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "wavesets.cli", "family", "--name", "shannon"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["intervals"][0]["a"]["num"] == -2
