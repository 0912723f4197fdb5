import csv
import io
import json
import os
import subprocess
import sys

import pytest

from klrcell import cli

SMALL = ["--e", "2", "--n", "2", "--theta", "0,1/2", "--kappa", "0,1"]
LARGE = ["--e", "2", "--n", "2", "--theta", "0,3/2", "--kappa", "0,1"]


def run(argv, capsys):
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_uglov_example(capsys):
    code, out, _ = run(["uglov"] + SMALL, capsys)
    assert code == 0
    assert set(json.loads(out)) == {"((1,1),∅)", "(∅,(1,1))"}


def test_decompose_csv(capsys):
    code, out, _ = run(["decompose"] + SMALL + ["--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 6
    assert all(len(r) == 3 for r in rows)
    body = {r[0]: r[1:] for r in rows[1:]}
    assert json.loads(body["[[1], [1]]"][0]) == {"1": "1"}


def test_csv_rejected_for_non_matrix_command(capsys):
    code, _, err = run(["uglov"] + SMALL + ["--format", "csv"], capsys)
    assert code == 1
    assert json.loads(err)["error"] == "invalid-config"


@pytest.mark.parametrize("cmd", ["tableaux", "dominance", "uglov", "branch-check", "cyclic-check"])
def test_zero_size(cmd, capsys):
    code, out, _ = run([cmd, "--e", "2", "--n", "0", "--theta", "0,1/2", "--kappa", "0,1"], capsys)
    assert code == 0
    json.loads(out)


def test_tableaux_empty_list_at_zero(capsys):
    _, out, _ = run(["tableaux", "--n", "0"], capsys)
    assert json.loads(out) == []


@pytest.mark.parametrize(
    "argv",
    [
        ["tableaux", "--e", "2", "--n", "2", "--theta", "0,1", "--kappa", "0,1"],
        ["tableaux", "--e", "2", "--n", "2", "--theta", "0,1/2", "--kappa", "0,5"],
        ["quotient", "--e", "4", "--n", "2", "--kappa", "0,1", "--h", "1"],
        ["gram"] + SMALL + ["--field", "Fp:4"],
        ["basis"] + SMALL + ["--word", "psi1, psi1"],
        ["bogus"],
    ],
)
def test_invalid_config_exit_one(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1
    if argv[0] != "bogus":
        assert json.loads(err)["error"] == "invalid-config"


def test_resource_limit_exit_two(capsys):
    code, _, err = run(["decompose", "--e", "2", "--n", str(cli.MAX_N_ENGINE + 1), "--theta", "0,1/2", "--kappa", "0,1"], capsys)
    assert code == 2
    assert json.loads(err)["error"] == "resource-limit"
    code, _, _ = run(["tableaux", "--n", str(cli.MAX_N_COMBINATORIAL + 1)], capsys)
    assert code == 2


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# small case\ne = 2\nn = 2\ntheta = 0,3/2\nkappa = 0,1\n")
    _, from_file, _ = run(["uglov", "--config", str(cfg)], capsys)
    _, from_flags, _ = run(["uglov"] + LARGE, capsys)
    assert from_file == from_flags
    _, overridden, _ = run(["uglov", "--config", str(cfg), "--theta", "0,1/2"], capsys)
    _, small, _ = run(["uglov"] + SMALL, capsys)
    assert overridden == small
    cfg.write_text("colour = blue\n")
    code, _, _ = run(["uglov", "--config", str(cfg)], capsys)
    assert code == 1


def test_out_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(["dominance"] + SMALL + ["--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert "order" in json.loads(target.read_text())


def test_basis_word(capsys):
    code, out, _ = run(["basis"] + SMALL + ["--word", "psi1 psi1 e(0,1) - 2 y2 e(0,1)"], capsys)
    assert code == 0
    terms = json.loads(out)
    assert {t["coeff"] for t in terms} == {"-2", "-1"}


def test_quotient_and_gram(capsys):
    code, out, _ = run(["quotient", "--e", "4", "--n", "2", "--kappa", "0,2", "--h", "1"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["basis_size"] == 6
    code, out, _ = run(["gram"] + LARGE + ["--shape", "1|1"], capsys)
    assert json.loads(out)[0]["rank"] == 1


def test_verify_paper_reports_mismatches(capsys):
    code, out, _ = run(["verify-paper"], capsys)
    data = json.loads(out)
    assert data["failed"] == sum(not r["passed"] for r in data["results"])
    assert code == (1 if data["failed"] else 0)
    assert set(data["sign_diagonal"].values()) == {1}


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "klrcell.cli", "decompose"] + SMALL
    runs = [
        subprocess.run(argv, capture_output=True, check=True, env={**os.environ, "PYTHONHASHSEED": seed}).stdout
        for seed in ("1", "2")
    ]
    assert runs[0] == runs[1] and runs[0]
