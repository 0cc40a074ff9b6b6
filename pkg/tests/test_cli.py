import io
import json
import subprocess
import sys

import pytest

from lahkit.cli import main


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


def run_proc(*argv):
    return subprocess.run([sys.executable, "-m", "lahkit", *argv], capture_output=True, text=True)


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["value", "--kind", "hlah", "--s", "2", "--n", "4", "--k", "3"], "56\n"),
        (
            ["value", "--kind", "olah", "--s", "25", "--n", "6", "--k", "2"],
            "19080000046878387911728136488155674014369724428110000\n",
        ),
        (["value", "--kind", "hlah", "--s", "3", "--n", "0", "--k", "0"], "1\n"),
        (["value", "--kind", "lrlah", "--r", "2", "--s", "1", "--n", "3", "--k", "2"], "4\n"),
    ],
)
def test_value(argv, expected):
    assert run(*argv) == (0, expected)


def test_table_tsv():
    _, text = run("table", "--kind", "olah", "--s", "2", "--nmax", "6", "--format", "tsv")
    assert text.splitlines()[5] == "0\t1700\t2900\t840\t60\t1"
    _, text = run("table", "--kind", "hlah", "--s", "4", "--nmax", "2", "--format", "tsv")
    assert text == "1\n0\t1\n0\t16\t1\n"
    assert run("table", "--kind", "stirling2", "--s", "2", "--nmax", "0", "--format", "tsv") == (0, "1\n")


def test_table_json():
    _, text = run("table", "--kind", "hlah", "--s", "25", "--nmax", "6", "--format", "json")
    doc = json.loads(text)
    assert doc["kind"] == "hlah" and doc["s"] == 25
    assert all(isinstance(v, str) for row in doc["rows"] for v in row)
    assert int(doc["rows"][6][2]) == 12793287638873373780319124433790833727169139966926481069803446896427008000
    _, text = run("table", "--kind", "stirling1", "--s", "1", "--nmax", "1", "--format", "json")
    assert text == '{"kind":"stirling1","s":1,"rows":[["1"],["0","1"]]}\n'


def test_table_pretty():
    _, text = run("table", "--kind", "olah", "--s", "2", "--nmax", "3", "--format", "pretty")
    lines = text.splitlines()
    assert lines[-1].split("|")[1].split() == ["0", "10", "10", "1"]
    assert len({len(line.split("|")[0]) for line in lines[1:]}) == 1


def test_bfile():
    _, text = run("bfile", "--kind", "olah", "--s", "2", "--nmax", "2", "--offset", "1")
    assert text == "1 1\n2 0\n3 1\n4 0\n5 2\n6 1\n"
    assert run("bfile", "--kind", "hlah", "--s", "2", "--nmax", "0") == (0, "0 1\n")
    _, text = run("bfile", "--kind", "hlah", "--s", "2", "--nmax", "3")
    # (3, 1) is the 8th entry read by rows: 1 + 2 + 3 + 1
    assert text.splitlines()[7] == "7 36"
    assert run("table", "--kind", "hlah", "--s", "2", "--nmax", "3", "--format", "bfile")[1] == text


def test_poly():
    assert run("poly", "expand", "--rising", "--n", "4", "--s", "2") == (0, "basis=standard coeffs=[0,36,49,14,1]\n")
    _, text = run("poly", "convert", "--from", "rising:2", "--to", "falling:2", "--n", "4")
    assert "coeffs=[0,100,140,28,1]" in text
    assert run("poly", "row", "--kind", "olah", "--n", "1", "--s", "7") == (0, "basis=standard coeffs=[0,1]\n")
    _, text = run("poly", "convert", "--from", "standard", "--to", "falling:2", "--coeffs", "0,0,0,1", "--format", "json")
    assert json.loads(text) == {"basis": "falling", "level": 2, "coeffs": ["0", "1", "5", "1"]}


def test_poly_step():
    _, text = run("poly", "step", "--kind", "hlah", "--n", "2", "--s", "2")
    assert text.splitlines() == ["before n=2: basis=standard coeffs=[0,4,1]", "after n=3: basis=standard coeffs=[0,36,20,1]"]
    _, text = run("poly", "step", "--kind", "lrlah", "--r", "2", "--n", "2", "--s", "1")
    assert text.splitlines()[1].endswith("coeffs=[0,0,4,1]")


def test_verify():
    status, text = run("verify", "--suite", "oracle", "--nmax", "6", "--smax", "3")
    assert status == 0
    assert all(line.startswith("PASS ") for line in text.splitlines())
    status, text = run("verify", "--suite", "inequalities", "--nmax", "10", "--smax", "5")
    assert status == 0
    status, text = run("verify", "--suite", "identities", "--nmax", "0", "--smax", "1")
    assert status == 0 and text
    names = [line.split()[1] for line in run("verify", "--suite", "all", "--nmax", "4", "--smax", "2")[1].splitlines()]
    assert names == sorted(names)


def test_verify_failure_exit(monkeypatch):
    from lahkit import verify

    def broken(nmax, smax):
        yield "n=1: planted"

    monkeypatch.setitem(verify.SUITES["inequalities"], "inequalities.planted", broken)
    status, text = run("verify", "--suite", "inequalities", "--nmax", "3", "--smax", "1")
    assert status == 1
    assert "FAIL inequalities.planted: n=1: planted" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["value", "--kind", "lrlah", "--s", "2", "--n", "3", "--k", "1"],
        ["value", "--kind", "hlah", "--s", "0", "--n", "3", "--k", "1"],
        ["value", "--kind", "bogus", "--s", "1", "--n", "3", "--k", "1"],
        ["table", "--kind", "olah", "--s", "2", "--nmax", "-1"],
        ["poly", "convert", "--from", "rising:2", "--to", "falling:3", "--n", "2"],
        ["poly", "convert", "--from", "upward:2", "--to", "falling:2", "--n", "2"],
        ["verify", "--suite", "oracle", "--nmax", "13"],
    ],
)
def test_usage_errors(argv):
    proc = run_proc(*argv)
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert proc.stderr


def test_deterministic_output():
    argv = ("table", "--kind", "hlah", "--s", "3", "--nmax", "8", "--format", "json")
    assert run_proc(*argv).stdout == run_proc(*argv).stdout


def test_value_agrees_with_table():
    for kind in ("hlah", "olah", "stirling1", "stirling2"):
        for s in (1, 2, 3):
            _, text = run("table", "--kind", kind, "--s", str(s), "--nmax", "6")
            rows = [line.split("\t") for line in text.splitlines()]
            for n in range(7):
                for k in range(n + 1):
                    _, v = run("value", "--kind", kind, "--s", str(s), "--n", str(n), "--k", str(k))
                    assert v.strip() == rows[n][k]
