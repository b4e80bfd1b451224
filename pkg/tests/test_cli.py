import json
import os
import pathlib
import subprocess
import sys

import pytest

from symf.cli import run_command

GOLDEN = pathlib.Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text(encoding="utf-8"))


def test_golden_suite_is_large_enough():
    assert len(CASES) >= 25
    assert {c["exit"] for c in CASES} == {0, 1, 2, 3, 4}


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case):
    code, out, err = run_command(case["argv"])
    expected = (GOLDEN / (case["name"] + ".out")).read_bytes()
    assert code == case["exit"], err
    assert out.encode("utf-8") == expected
    if code in (2, 3, 4):
        assert err.startswith("symf: ") and err.endswith("\n")
        assert out == ""
    else:
        assert out.endswith("\n")


def test_parse_error_reports_offset():
    code, _, err = run_command(["eval", "e[2,]"])
    assert code == 2
    assert "offset 4" in err


def test_expand_example():
    code, out, _ = run_command(["expand", "s[2,1]", "-N", "2", "--json"])
    assert code == 0
    assert json.loads(out) == {"nvars": 2, "terms": [{"exps": [2, 1], "coeff": "1"},
                                                      {"exps": [1, 2], "coeff": "1"}]}


def test_verbose_schur_weyl_includes_basis():
    code, out, _ = run_command(["verify", "schur-weyl", "-N", "2", "-n", "2", "--json", "--verbose"])
    data = json.loads(out)
    assert code == 0 and len(data["basis"]) == data["dimension"] == 2


def test_env_degree_cap(monkeypatch):
    monkeypatch.setenv("SYMF_DEGREE_CAP", "3")
    assert run_command(["eval", "e[4]"])[0] == 4
    assert run_command(["eval", "e[4]", "--cap", "5"])[0] == 0
    monkeypatch.delenv("SYMF_DEGREE_CAP")
    assert run_command(["eval", "e[4]"])[0] == 0


def test_json_from_file_and_stdin(tmp_path, monkeypatch):
    import io
    path = tmp_path / "f.json"
    path.write_text('{"basis":"s","terms":[{"partition":[1,1],"num":"1","den":"1"}]}')
    code, out, _ = run_command(["omega", str(path), "--json"])
    assert code == 0 and json.loads(out)["terms"][0]["partition"] == [2]
    monkeypatch.setattr("sys.stdin", io.StringIO(path.read_text()))
    code, out, _ = run_command(["convert", "-", "--basis", "e", "--json"])
    assert code == 0 and json.loads(out)["terms"] == [{"partition": [2], "num": "1", "den": "1"}]


def test_version():
    code, out, _ = run_command(["--version"])
    assert code == 0 and out.startswith("symf ")


def test_module_entry_point():
    env = dict(os.environ, PYTHONIOENCODING="utf-8")
    proc = subprocess.run([sys.executable, "-m", "symf", "eval", "lambda(3, h[1])", "--basis", "e"],
                          capture_output=True, env=env, check=False)
    assert proc.returncode == 0
    assert proc.stdout == b"1  e[3]\n"
    proc = subprocess.run([sys.executable, "-m", "symf", "eval", "e[2,]"],
                          capture_output=True, env=env, check=False)
    assert proc.returncode == 2
