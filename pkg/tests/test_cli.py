"""The command line surface: exit codes, JSON report round-trips,
deterministic reruns, and input validation."""

import json

import pytest

from reflect3.cli import FAIL_EXIT, INPUT_EXIT, PASS_EXIT, main
from reflect3.report import parse_report


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rep_prints_summary(capsys):
    code, out, _ = run(capsys, "rep", "--pqr", "3,3,3")
    assert code == PASS_EXIT
    assert "reducible" in out
    assert "delta" in out


def test_rep_explicit_l(capsys):
    code, out, _ = run(capsys, "rep", "--pqr", "4,3,4", "--l", "-1")
    assert code == PASS_EXIT
    assert "delta" in out and "2" in out


def test_rep_rejects_small_order(capsys):
    code, _, err = run(capsys, "rep", "--pqr", "2,3,3")
    assert code == INPUT_EXIT
    assert "error" in err


def test_rep_rejects_garbled_pqr(capsys):
    code, _, err = run(capsys, "rep", "--pqr", "3,3")
    assert code == INPUT_EXIT


def test_verify_json_roundtrip(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, err = run(capsys, "verify", "--suite", "prop9-dual",
                         "--pqr", "3,3,3", "--seed", "4",
                         "--out", str(out_file))
    assert code == PASS_EXIT
    data = json.loads(out_file.read_text())
    assert isinstance(data, list) and data
    for block in data:
        rep = parse_report(json.dumps(block))
        assert not rep.failures


def test_verify_stdout_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "coro4",
                       "--pqr", "4,4,4", "--mode", "reducible")
    assert code == PASS_EXIT
    data = json.loads(out)
    assert data[0]["suite"] == "coro4"
    names = [c["name"] for c in data[0]["checks"]]
    assert any(n.startswith("swap-") for n in names)


def test_verify_deterministic_with_seed(capsys):
    def scrub(blocks):
        return [{k: v for k, v in b.items() if k != "elapsed_ms"}
                for b in blocks]
    code1, out1, _ = run(capsys, "verify", "--suite", "thm2",
                         "--pqr", "4,4,4", "--mode", "reducible",
                         "--seed", "7")
    code2, out2, _ = run(capsys, "verify", "--suite", "thm2",
                         "--pqr", "4,4,4", "--mode", "reducible",
                         "--seed", "7")
    assert code1 == code2 == PASS_EXIT
    assert scrub(json.loads(out1)) == scrub(json.loads(out2))


def test_verify_markdown_format(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "prop9-dual",
                       "--pqr", "6,3,6", "--format", "md")
    assert code == PASS_EXIT
    assert "| check | status |" in out


def test_verify_rejects_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope",
                       "--pqr", "3,3,3")
    assert code == INPUT_EXIT


def test_verify_params_file(capsys, tmp_path):
    cfg = tmp_path / "systems.json"
    cfg.write_text(json.dumps([
        {"p": 3, "q": 3, "r": 3, "mode": "reducible", "name": "a"},
        {"p": 4, "q": 3, "r": 4, "mode": "explicit", "l": "-1", "name": "b"},
    ]))
    code, out, _ = run(capsys, "verify", "--suite", "thm1",
                       "--params", str(cfg), "--radius", "6")
    assert code == PASS_EXIT
    data = json.loads(out)
    assert [b["params"]["label"] for b in data] == ["a", "b"]


def test_verify_params_file_rejects_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"p": 3, "q": 3, "r": 3, "weird": 1}))
    code, _, err = run(capsys, "verify", "--suite", "thm1",
                       "--params", str(cfg))
    assert code == INPUT_EXIT


def test_enumerate_finite_group(capsys):
    code, out, _ = run(capsys, "enumerate", "--pqr", "4,3,4", "--l", "-1",
                       "--radius", "12")
    assert code == PASS_EXIT
    assert "order 48" in out


def test_enumerate_open_group(capsys):
    code, out, _ = run(capsys, "enumerate", "--pqr", "3,3,3",
                       "--radius", "4", "--cap", "3000")
    assert code == PASS_EXIT
    assert "no-certificate" in out


def test_field_literal_with_extension(capsys, tmp_path):
    cfg = tmp_path / "g.json"
    cfg.write_text(json.dumps({
        "p": 3, "q": 3, "r": 4, "mode": "explicit", "ext_square": -1,
        "l": [[-1], [1]], "name": "gauss",
    }))
    code, out, _ = run(capsys, "enumerate", "--params", str(cfg),
                       "--radius", "16")
    assert code == PASS_EXIT
    assert "order 96" in out
