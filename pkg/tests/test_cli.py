import io
import json
import subprocess
import sys

import pytest

from conftest import MIXED_OCTAGON
from ptolemy_cc.cli import main
from ptolemy_cc.fixtures import FIXTURES


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def write(tmp_path, N, pairs, name="d.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"N": N, "diagonals": [list(x) for x in pairs]}))
    return str(p)


@pytest.fixture
def final_path(tmp_path):
    return write(tmp_path, 8, MIXED_OCTAGON, "mixed_octagon.json")


def test_rho(final_path):
    assert run(["rho", "--input", final_path, "--diagonal", "5,8"]) == (0, "9\n")
    assert run(["rho", "--input", final_path, "--diagonal", "8,5"]) == (0, "9\n")


def test_rho_bad_diagonal(final_path, capsys):
    for bad in ("1,2", "5", "x,y", "1,9"):
        code, _ = run(["rho", "--input", final_path, "--diagonal", bad])
        assert code == 2
    assert "--diagonal" in capsys.readouterr().err


def test_validate(tmp_path, final_path):
    assert run(["validate", "--input", final_path]) == (0, "Ok\n")
    # {1,4} and {2,5} cross, hull chord {2,4} is absent
    bad = write(tmp_path, 8, [(1, 4), (2, 5), (1, 5)], "bad.json")
    code, text = run(["validate", "--input", bad])
    assert code == 1
    assert text.startswith("ClosureViolation:") and "{2,4}" in text


def test_rho_on_invalid_diagram_fails(tmp_path, capsys):
    bad = write(tmp_path, 6, [(1, 4), (2, 5)])
    assert run(["rho", "--input", bad, "--diagonal", "1,3"])[0] == 1
    assert "ClosureViolation" in capsys.readouterr().err


def test_parse_errors(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{"N": 8,\n  "diagonals": [[1, 3],, ]}')
    assert run(["validate", "--input", str(p)])[0] == 2
    assert f"{p}:2:" in capsys.readouterr().err
    p.write_text('{"N": 8, "diagonals": [[1, 2]]}')
    assert run(["validate", "--input", str(p)])[0] == 2
    p.write_text('{"N": 2}')
    assert run(["validate", "--input", str(p)])[0] == 2
    assert run(["validate", "--input", str(tmp_path / "missing.json")])[0] == 2


def test_table_formats(final_path):
    code, text = run(["table", "--input", final_path])
    lines = text.splitlines()
    assert code == 0 and len(lines) == 20
    assert lines[0].startswith("1,3 ") and "5,8 9" in lines
    code, text = run(["table", "--input", final_path, "--format", "csv"])
    assert text.splitlines()[0] == "a,b,value" and "4,8,6" in text.splitlines()
    code, text = run(["table", "--input", final_path, "--format", "json"])
    obj = json.loads(text)
    assert obj["N"] == 8 and [5, 8, 9] in obj["values"]


def test_frieze(final_path):
    code, text = run(["frieze", "--input", final_path, "--periods", "2"])
    assert code == 0 and len(text.splitlines()) == 7
    code, text = run(["frieze", "--input", final_path, "--format", "json"])
    assert {r["determinant"] for r in json.loads(text)["determinants"]} <= {0, 1, 6}
    assert run(["frieze", "--input", final_path, "--periods", "0"])[0] == 2


def test_oracle(final_path):
    code, text = run(["oracle", "--input", final_path])
    assert code == 0 and "MISMATCH" not in text
    assert "5,8 9 9" in text.splitlines()


def test_oracle_guard(tmp_path, capsys):
    big = write(tmp_path, 14, [(a, b) for a in range(1, 15) for b in range(a + 2, 15)
                               if b - a <= 12])
    assert run(["oracle", "--input", big])[0] == 3
    assert "support" in capsys.readouterr().err


@pytest.mark.parametrize("fx", FIXTURES, ids=lambda f: f.name)
def test_oracle_agrees_with_table_on_fixtures(tmp_path, fx):
    path = write(tmp_path, fx.N, fx.pairs)
    code, text = run(["oracle", "--input", path])
    assert code == 0
    for line in text.splitlines():
        _, v, o = line.split()
        assert v == o


def test_examples():
    code, text = run(["examples"])
    assert code == 0
    assert "FAIL" not in text and text.splitlines()[-1].startswith("all fixtures pass")


def test_enumerate():
    code, text = run(["enumerate", "--n", "6"])
    assert code == 0 and len(text.splitlines()) == 82
    assert json.loads(text.splitlines()[0]) == {"N": 6, "diagonals": []}
    assert run(["enumerate", "--n", "10"])[0] == 3
    assert run(["enumerate", "--n", "2"])[0] == 2


def test_stdin(monkeypatch):
    doc = json.dumps({"N": 8, "diagonals": [list(x) for x in MIXED_OCTAGON]})
    assert run(["rho", "--input", "-", "--diagonal", "4,8"], doc, monkeypatch) == (0, "6\n")


def test_deterministic(final_path):
    for argv in (["table", "--format", "json"], ["frieze", "--format", "csv"], ["oracle"]):
        full = [argv[0], "--input", final_path] + argv[1:]
        assert run(full) == run(full)


def test_module_entry_point(final_path):
    out = subprocess.run([sys.executable, "-m", "ptolemy_cc", "rho", "--input", final_path,
                          "--diagonal", "2,7"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "3\n"
