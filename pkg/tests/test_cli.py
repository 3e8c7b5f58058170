import json
import subprocess
import sys

import pytest

from k3lattice.cli import main
from k3lattice.cycles import FORM
from k3lattice.linalg import Matrix, format_matrix, parse_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_forms(capsys):
    code, out, _ = run(capsys, "forms", "h")
    assert code == 0 and out == "2 2\n0 1\n1 0\n"
    code, out, _ = run(capsys, "forms", "k3")
    m = parse_matrix(out)
    assert code == 0 and m.shape == (22, 22)
    code, out, _ = run(capsys, "forms", "e8", "--json")
    assert json.loads(out)["entries"][0][0] == "-2"
    assert run(capsys, "forms", "x")[0] == 2


def test_unknown_flag(capsys):
    assert run(capsys, "forms", "h", "--bogus")[0] == 2
    assert run(capsys)[0] == 2


def test_snf(tmp_path, capsys):
    lt = tmp_path / "lt.txt"
    lt.write_text(format_matrix(FORM.gram_lt))
    code, out, _ = run(capsys, "snf", str(lt))
    assert code == 0 and out.split() == ["2"] * 22

    ident = tmp_path / "id.txt"
    ident.write_text(format_matrix(Matrix.identity(3)))
    code, out, _ = run(capsys, "snf", str(ident))
    assert out.strip() == "1 1 1"
    code, out, _ = run(capsys, "snf", str(ident), "--json")
    doc = json.loads(out)
    assert set(doc) >= {"U", "V", "D", "elementary_divisors"}

    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n1 2\n")
    assert run(capsys, "snf", str(bad))[0] == 2
    assert run(capsys, "snf", str(tmp_path / "missing.txt"))[0] == 2
    frac = tmp_path / "frac.txt"
    frac.write_text("1 1\n1/2\n")
    assert run(capsys, "snf", str(frac))[0] == 2


@pytest.mark.parametrize("rank, tau, code, text", [
    ("22", "-16", 0, "2E8(-1) + 3H"),
    ("8", "-8", 3, "definite"),
    ("22", "-12", 3, "divisible by 8"),
])
def test_classify(capsys, rank, tau, code, text):
    c, out, err = run(capsys, "classify", "--rank", rank, "--signature", tau)
    assert c == code
    assert text in out + err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--rank", "22", "--signature", "-16", "--json")
    doc = json.loads(out)
    assert (doc["e8_copies"], doc["h_copies"]) == ("2", "3")


def test_k3_verify(capsys):
    code, out, _ = run(capsys, "k3", "verify")
    assert code == 0
    assert out.rstrip().endswith("CANONICAL: yes")
    assert '"index 2^{22}"' in out


def test_k3_verify_json_roundtrip(capsys):
    code, out, _ = run(capsys, "k3", "verify", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["det_lt"] == "-4194304" and doc["det_w"] == "-1" and doc["index"] == "2048"
    assert doc["matches_canonical"] is True
    assert len(doc["gram_w"]) == 22
    assert any('"index 2^{22}"' in n for n in doc["notes"])
    assert json.loads(json.dumps(doc)) == doc
    assert json.dumps(doc, indent=2, sort_keys=True) == out.rstrip("\n")


def test_k3_gram_and_basis(capsys):
    code, out, _ = run(capsys, "k3", "gram", "lambda2")
    assert parse_matrix(out)[1, 1] == -2
    code, out, _ = run(capsys, "k3", "basis")
    assert code == 0 and "w4 = -L6" in out


def test_kummer_fixed_points(capsys):
    code, out, _ = run(capsys, "kummer", "fixed-points")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 16 and lines[0] == "L1 (0,0,0,0)"


def test_kummer_torus(capsys):
    code, out, _ = run(capsys, "kummer", "torus", "--through", "1,3,5,7")
    assert code == 0
    assert "coplanar" in out and "directions: e1,e2" in out and "class: T12" in out
    code, out, _ = run(capsys, "kummer", "torus", "--through", "1,2,3,5")
    assert code == 1 and "not coplanar" in out
    for bad in ("1,1,3,5", "0,1,2,3", "a,b,c,d", "1,2,3"):
        assert run(capsys, "kummer", "torus", "--through", bad)[0] == 2


def test_output_deterministic(capsys):
    outs = {run(capsys, "k3", "verify", "--json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "k3lattice.cli", "forms", "h"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "2 2\n0 1\n1 0\n"
