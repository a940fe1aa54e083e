import json

import pytest

from ncmac.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_macdonald_schur_json(tmp_path, capsys):
    out_file = tmp_path / "h21.json"
    code, _ = run(["macdonald", "--mu", "2,1", "--format", "json",
                   "--out", str(out_file)], capsys)
    assert code == 0
    data = json.loads(out_file.read_text())
    keys = {tuple(map(int, k.split(","))) for k in data["f"]["coeffs"]}
    assert keys == {(3,), (2, 1), (1, 1, 1)}


def test_macdonald_latex_text(capsys):
    code, out = run(["macdonald", "--mu", "1,1", "--format", "latex"], capsys)
    assert code == 0
    assert "s_{2}" in out and "s_{11}" in out
    code, out = run(["macdonald", "--mu", "2,1,1", "--multi-t",
                     "--format", "text"], capsys)
    assert code == 0
    assert "t1" in out and "t2" in out


def test_trace_text(capsys):
    code, out = run(["trace", "--perm", "3241", "--interval",
                     "--format", "text"], capsys)
    assert code == 0
    assert "(q + 3) Theta_211" in out
    assert "s[3,1]" in out


def test_yb_single(capsys):
    code, out = run(["yb", "--mu", "2,1", "--format", "text"], capsys)
    assert code == 0
    assert "s[2,1]" in out


def test_yb_sweep_small(tmp_path, capsys):
    out_file = tmp_path / "sweep3.json"
    code, _ = run(["yb", "--sweep", "--n", "3", "--out", str(out_file)],
                  capsys)
    assert code == 0
    data = json.loads(out_file.read_text())
    by_mu = {entry["mu"]: entry for entry in data["mus"]}
    assert "231" in by_mu["2,1"]["matches"]
    assert len(by_mu["1,1,1"]["matches"]) >= 1


def test_table_json(capsys):
    code, out = run(["table", "--mu", "2,1,1", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert "3,1" in data["f"]["coeffs"]


def test_verify_annex(capsys):
    code, out = run(["verify", "--suite", "annex", "--max-n", "4"], capsys)
    assert code == 0
    assert "pass" in out


def test_verify_unknown_suite(capsys):
    code, _ = run(["verify", "--suite", "nonsense"], capsys)
    assert code == 2


def test_bad_partition(capsys):
    code, _ = run(["macdonald", "--mu", "1,2"], capsys)
    assert code == 2
    code, _ = run(["macdonald", "--mu", ""], capsys)
    assert code == 2


def test_sweep_requires_n(capsys):
    code, _ = run(["yb", "--sweep"], capsys)
    assert code == 2


def test_bad_perm(capsys):
    code, _ = run(["trace", "--perm", "1325"], capsys)
    assert code == 2


def test_max_n_env_gate(capsys, monkeypatch):
    monkeypatch.setenv("NCMAC_MAX_N", "3")
    code, _ = run(["yb", "--sweep", "--n", "5"], capsys)
    assert code == 2
