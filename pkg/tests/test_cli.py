import io
import json
import subprocess
import sys

import pytest

from tvbraid.cli import main
from tvbraid.suite import CheckReport


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


FROZEN = [
    (("normalize", "-n", "3", "g2 g2 s1"), "s1"),
    (("image", "--hom", "phiP", "-n", "3", "s1"), "[2,1,3]"),
    (("image", "--hom", "psiP", "-n", "3", "l1,3 g2"), "[0,1,0]"),
    (("kernel", "--hom", "phiH", "-n", "3", "s2"), "true"),
    (("kernel", "--hom", "phiPT", "-n", "2", "g1"), "false"),
    (("rewrite", "--into", "tvp", "-n", "3", "s1 g3 s1^-1 g3"), "l1,2^-1 g3 l1,2 g3"),
    (("rewrite", "--into", "tvp", "-n", "2", "g1 g1"), "g1 g1"),
    (("rewrite", "--into", "pl", "-n", "3", "g1 l1,2 g1"), "l1,2:1"),
    (("abelianize", "--group", "tvhn", "-n", "4"), "Z^1 + Z_2^4"),
]


def test_frozen_examples(capsys):
    for argv, expected in FROZEN:
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0, argv
        assert out.strip() == expected, argv


def test_present_output(capsys):
    code, out, _ = run_cli(capsys, "present", "--group", "tvpn", "-n", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "tvpn n=2"
    assert sum(1 for l in lines if l.startswith("gen ")) == 4
    assert sum(1 for l in lines if l.startswith("rel ")) == 4


def test_present_json(capsys):
    code, out, _ = run_cli(capsys, "present", "--group", "tvpn", "-n", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "tvpn"
    assert len(data["generators"]) == 4


def test_stdin_batch(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("s1 s1^-1\ng1 g2 g1\n"))
    code, out, _ = run_cli(capsys, "normalize", "-n", "3")
    assert code == 0
    assert out.splitlines() == ["", "g1 g2 g1"]


def test_batch_is_all_or_nothing(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("g1\nbogus\n"))
    code, out, err = run_cli(capsys, "normalize", "-n", "3")
    assert code == 2
    assert out == ""
    assert "bogus" in err


def test_json_batch(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("g1\ng2\n"))
    code, out, _ = run_cli(capsys, "image", "--hom", "psiP", "-n", "2", "--json")
    assert code == 0
    assert json.loads(out) == ["[1,0]", "[0,1]"]


def test_parse_error_exit(capsys):
    code, _, err = run_cli(capsys, "normalize", "-n", "3", "q1")
    assert code == 2
    assert "error:" in err


def test_domain_error_exit(capsys):
    code, _, err = run_cli(capsys, "rewrite", "--into", "tvp", "-n", "3", "s1")
    assert code == 3
    assert "[2,1,3]" in err
    code, _, err = run_cli(capsys, "kernel", "--hom", "plToVp", "-n", "3", "l1,2")
    assert code == 3


def test_usage_error_exit(capsys):
    assert main(["image", "-n", "3", "s1"]) == 2  # missing --hom
    capsys.readouterr()
    assert main(["normalize", "-n", "0", "s1"]) == 2
    capsys.readouterr()
    assert main(["normalize", "-n", "2..4", "s1"]) == 2
    capsys.readouterr()


def test_verify_single_check(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--check", "abelian-invariants", "-n", "2"
    )
    assert code == 0
    assert "abelian-invariants" in out
    assert out.strip().endswith("1/1 checks passed")


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--check", "relators-vanish", "-n", "2", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data[0]["check"] == "relators-vanish"
    assert data[0]["status"] == "pass"


def test_verify_reports_failure(capsys, monkeypatch):
    def fake_run_suite(checks=None, n_range=None, seed=0):
        return [CheckReport("relators-vanish", 2, "fail", "forced", 0.0)]

    monkeypatch.setattr("tvbraid.cli.run_suite", fake_run_suite)
    code, out, _ = run_cli(capsys, "verify", "--all", "-n", "2")
    assert code == 1
    assert "FAIL" in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tvbraid.cli", "normalize", "-n", "2", "g1 g1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == ""


def test_rank_range_only_for_verify(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "relators-vanish", "-n", "2..3")
    assert code == 0
    assert out.count("relators-vanish") == 2
