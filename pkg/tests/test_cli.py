import io
import json
import subprocess
import sys

import pytest

from powerfree.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "kind,length,expected",
    [("tm", 24, "011010011001011010010110"), ("tm", 0, ""), ("gw", 9, "001101011")],
)
def test_generate(capsys, kind, length, expected):
    assert run(capsys, "generate", "--word", kind, "--length", str(length))[:2] == (0, expected + "\n")


def test_generate_every_kind(capsys):
    for kind in ("tm", "w", "gw", "y", "fy"):
        code, out, _ = run(capsys, "generate", "--word", kind, "--length", "50")
        assert code == 0 and len(out.strip()) == 50


def test_generate_unknown_kind(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--word", "zz", "--length", "3"])
    assert exc.value.code == 2


@pytest.mark.parametrize("half,expected", [(1, "00"), (5, "1001010010"), (10, "10011011001001101100")])
def test_square(capsys, half, expected):
    assert run(capsys, "square", "--half", str(half))[:2] == (0, expected + "\n")


def test_square_rejects_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["square", "--half", "0"])
    assert exc.value.code == 2


def test_check_cubefree_witness(capsys):
    assert run(capsys, "check", "--property", "cubefree", "010101")[:2] == (1, "false pos=0, period=2, len=6\n")
    assert run(capsys, "check", "--property", "cubefree", "010010")[:2] == (0, "true\n")


def test_check_overlap_and_powerfree(capsys):
    assert run(capsys, "check", "--property", "overlapfree", "01010")[0] == 1
    code, out, _ = run(capsys, "check", "--property", "powerfree", "--exponent", "7/3", "--mode", "ge", "0010010")
    assert (code, out) == (1, "false pos=0, period=3, len=7\n")
    code, out, _ = run(capsys, "check", "--property", "powerfree", "--exponent", "7/3", "--mode", "gt", "0010010")
    assert (code, out) == (0, "true\n")


def test_check_square_and_squarefree(capsys):
    assert run(capsys, "check", "--property", "square", "0101")[:2] == (0, "true\n")
    assert run(capsys, "check", "--property", "square", "0110")[:2] == (1, "false\n")
    assert run(capsys, "check", "--property", "squarefree", "0120")[:2] == (0, "true\n")


def test_check_input_errors(capsys):
    assert run(capsys, "check", "--property", "cubefree", "01x")[0] == 2
    assert run(capsys, "check", "--property", "powerfree", "0101")[0] == 2
    assert run(capsys, "check", "--property", "powerfree", "--exponent", "1/2", "0101")[0] == 2


def test_check_file(tmp_path, capsys):
    f = tmp_path / "corpus.txt"
    f.write_text("010010\n000\n\n1001010010\n")
    code, out, _ = run(capsys, "check", "--property", "cubefree", "--file", str(f))
    assert code == 1
    assert out.splitlines() == ["true", "false pos=0, period=1, len=3", "true"]
    assert run(capsys, "check", "--property", "cubefree", "--file", str(tmp_path / "missing"))[0] == 2


def test_check_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0110\n"))
    assert run(capsys, "check", "--property", "overlapfree")[:2] == (0, "true\n")


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--max", "12", "--exhaustive-cap", "12", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["length"] for r in records] == [2, 4, 6, 8, 10, 12]
    assert [r["exact_count"] for r in records[:2]] == [2, 2]
    assert records[-1]["family_lower_bound"] == 2
    for r in records:
        assert set(r) == {"length", "exact_count", "family_lower_bound", "witnesses"}
        assert all(len(w) == r["length"] for w in r["witnesses"])


def test_census_table(capsys):
    code, out, _ = run(capsys, "census", "--max", "4")
    lines = out.splitlines()
    assert code == 0 and lines[0].split() == ["length", "exact_count", "family_lower_bound", "witness"]
    assert lines[1].split() == ["2", "2", "-", "00"]


def test_census_errors(capsys):
    assert run(capsys, "census", "--max", "40", "--exhaustive-cap", "30")[0] == 2
    assert run(capsys, "census", "--max", "7")[0] == 2


@pytest.mark.parametrize(
    "suite,limit,checks",
    [("thm1", 64, 64), ("tm-squares", 24, None), ("oracles", 6, None), ("lemma3", 40, None), ("prop8", 3, None)],
)
def test_verify(capsys, suite, limit, checks):
    code, out, err = run(capsys, "verify", "--suite", suite, "--limit", str(limit))
    assert code == 0
    first = out.splitlines()[0]
    assert first.endswith(", 0 failures")
    if checks is not None:
        assert first == f"suite {suite}: {checks} checks, 0 failures"
    assert "elapsed" in err


def test_verify_oracle_mode(capsys):
    for suite, limit in (("thm6", 40), ("thm8", 40), ("thm2", 2000), ("prop10", 600)):
        code, out, _ = run(capsys, "verify", "--suite", suite, "--limit", str(limit), "--oracle")
        assert code == 0, out


def test_verify_reports_failures(capsys, monkeypatch):
    from powerfree import constructions, verify

    monkeypatch.setattr(verify, "cubefree_square", lambda h: constructions.Word("000") * h)
    code, out, _ = run(capsys, "verify", "--suite", "thm1", "--limit", "3")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "suite thm1: 3 checks, 3 failures"
    assert lines[1].startswith("  FAIL thm1/half=00001:")
    assert lines[1:] == sorted(lines[1:])


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_byte_identical_output():
    cmd = [sys.executable, "-m", "powerfree", "verify", "--suite", "tm-squares", "--limit", "16"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
    gen = [sys.executable, "-m", "powerfree", "generate", "--word", "fy", "--length", "5000"]
    assert subprocess.run(gen, capture_output=True).stdout == subprocess.run(gen, capture_output=True).stdout
