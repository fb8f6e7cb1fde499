import json
import subprocess
import sys

import pytest

from mubkit.cli import main
from golden import GF8_TABLE


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_dim4_text(capsys):
    code, out, _ = run(["generate", "--dim", "4"], capsys)
    assert code == 0
    assert "basis 2 [a=1]:\n  v0 = (1, -1, -z4, -z4)/sqrt(4)" in out
    assert out.rstrip().endswith("PASS")


def test_generate_dim6_and_dim1(capsys):
    code, out, _ = run(["generate", "--dim", "6", "--format", "records"], capsys)
    assert code == 0 and len(json.loads(out)["bases"]) == 3
    code, out, _ = run(["generate", "--dim", "1", "--format", "records"], capsys)
    assert code == 0 and len(json.loads(out)["bases"]) == 1


def test_generate_is_deterministic(capsys):
    _, a, _ = run(["generate", "--dim", "8", "--format", "records"], capsys)
    _, b, _ = run(["generate", "--dim", "8", "--format", "records"], capsys)
    assert a == b


def test_generate_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "five.json"
    assert run(["generate", "--dim", "5", "--format", "records", "--out", str(path)], capsys)[0] == 0
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 0 and out.rstrip().endswith("PASS")


def test_verify_flipped_coefficient(tmp_path, capsys):
    _, out, _ = run(["generate", "--dim", "5", "--format", "records"], capsys)
    rec = json.loads(out)
    rec["bases"][3][0][2][1] -= 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(rec))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1
    assert "pair (0,3)" in out and "FAIL" in out
    code, out, _ = run(["verify", "--format", "records", str(path)], capsys)
    assert code == 1 and json.loads(out)["passed"] is False


def test_verify_stdin_and_empty(capsys, monkeypatch):
    empty = '{"kind":"mub","dim":3,"order":1,"scale_sq":[],"bases":[]}'
    code, out, err = run(["verify"], capsys, stdin=empty, monkeypatch=monkeypatch)
    assert code == 0 and "warning" in err


def test_verify_parse_error(capsys, monkeypatch):
    code, _, err = run(["verify", "-"], capsys, stdin="nope", monkeypatch=monkeypatch)
    assert code == 2 and "invalid JSON" in err
    code, _, err = run(["verify", "/nonexistent/file.json"], capsys)
    assert code == 2


def test_invalid_inputs(capsys):
    assert run(["generate", "--dim", "0"], capsys)[0] == 2
    assert run(["generate", "--dim", "6", "--construction", "ring"], capsys)[0] == 2
    assert run(["generate", "--dim", "200"], capsys)[0] == 2
    assert run(["generate", "--dim", "20", "--cap", "10"], capsys)[0] == 2
    assert run(["generate"], capsys)[0] == 2
    assert run(["bogus"], capsys)[0] == 2
    assert run(["--help"], capsys)[0] == 0


def test_tables(capsys):
    code, out, _ = run(["tables", "gf8"], capsys)
    assert code == 0
    body = [line.split(" | ") for line in out.splitlines()[2:]]
    got = [(c[0].strip(), c[1].strip(), tuple(int(x) for x in c[2].strip("()").split(","))) for c in body]
    assert got == GF8_TABLE
    code, out, _ = run(["tables", "gr43"], capsys)
    assert code == 0 and "ξ^4   | 2+3x+3x^2  | (3,3,2)       | (1,1,0)" in out
    code, out, _ = run(["tables", "gf", "--p", "3", "--m", "2", "--format", "records"], capsys)
    assert code == 0 and len(out.splitlines()) == 9
    assert run(["tables", "gf", "--p", "4"], capsys)[0] == 2


def test_geometry(capsys):
    code, out, _ = run(["geometry", "fano"], capsys)
    assert code == 0
    assert out.startswith("Fano(GF(8)): 7 points, 7 lines")
    assert out.count("on 3 lines") == 7 and "axioms: PASS, order 2" in out
    code, out, _ = run(["geometry", "plane", "--order", "3", "--format", "records"], capsys)
    assert code == 0 and len(out.splitlines()) == 27
    assert run(["geometry", "plane"], capsys)[0] == 2
    assert run(["geometry", "plane", "--order", "6"], capsys)[0] == 2
    assert run(["geometry", "lifted"], capsys)[0] == 0
    code, out, _ = run(["geometry", "compare"], capsys)
    assert code == 0 and "||" in out


def test_bell(capsys):
    code, out, _ = run(["bell", "--dim", "2"], capsys)
    assert code == 0
    assert "h=0 a=1 (scale 1/sqrt(2)):\n  b=0: |00> + z4|11>\n  b=1: |00> - z4|11>" in out
    code, out, _ = run(["bell", "--dim", "6"], capsys)
    assert code == 0 and "b=0: |00> + (-1 + z12^2)|11>" in out
    code, out, _ = run(["bell", "--dim", "9", "--root", "d"], capsys)
    assert code == 1
    code, out, _ = run(["bell", "--dim", "3", "--construction", "fourier", "--format", "records"], capsys)
    assert code == 0 and json.loads(out)["kind"] == "bell"
    assert run(["bell", "--dim", "1"], capsys)[0] == 2


def test_bell_record_verifies(tmp_path, capsys):
    path = tmp_path / "b.json"
    run(["bell", "--dim", "4", "--format", "records", "--out", str(path)], capsys)
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 0 and out.rstrip().endswith("PASS")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mubkit", "generate", "--dim", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
