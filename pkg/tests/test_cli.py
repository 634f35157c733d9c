import json
import os
import subprocess
import sys

import pytest


def run(*args, env=None, check=False):
    full_env = dict(os.environ)
    full_env.update(env or {})
    proc = subprocess.run(
        [sys.executable, "-m", "qnarayana", *args], capture_output=True, text=True, env=full_env
    )
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def test_eval_examples():
    assert run("eval", "--family", "qfib", "--n", "4", "--format", "text", check=True).stdout == (
        "x^4 - (1+q+q^2) x^2 + q\n"
    )
    assert run("eval", "--moment", "q_narayana", "--n", "2", check=True).stdout == "1 + q^2 t\n"
    assert run("eval", "--family", "fib_tq", "--n", "0", check=True).stdout == "1\n"


def test_eval_upto_and_json():
    out = run("eval", "--family", "fib", "--n", "2", "--upto", "--format", "json", check=True).stdout
    data = json.loads(out)
    assert [v["n"] for v in data["values"]] == [0, 1, 2]


def test_eval_errors():
    proc = run("eval", "--family", "bogus", "--n", "1")
    assert proc.returncode != 0
    assert "valid names" in proc.stderr and "fib_tq" in proc.stderr
    assert run("eval", "--n", "1").returncode != 0
    assert run("eval", "--family", "qfib", "--n", "-1").returncode != 0


def test_table_examples():
    latex = run("table", "--name", "a_qfib", "--N", "5", "--format", "latex", check=True).stdout
    assert r"0 & 1 + q + q^{2} + q^{3} + q^{4} & 0 & 1 + q + q^{2} + q^{3} & 0 & 1 \\" in latex
    text = run("table", "--name", "A", "--N", "3", check=True).stdout.splitlines()
    assert text[3].startswith("1 + q^2 t + q^3 t + q^4 t + q^6 t^2 | ")
    assert run("table", "--name", "D", "--N", "0", check=True).stdout == "1\n"
    bad = run("table", "--name", "Z")
    assert bad.returncode != 0 and "valid names" in bad.stderr


def test_verify_single_identity():
    proc = run("verify", "--only", "eq2.7", "--N", "12", check=True)
    data = json.loads(proc.stdout)
    assert data["passed"] is True
    assert [r["identity"] for r in data["results"]] == ["eq2.7"]
    assert data["results"][0]["range"] == "2<=n<=12"


def test_verify_mutation_exits_nonzero():
    proc = run("verify", "--only", "eq2.7", "--mutate")
    assert proc.returncode == 1
    data = json.loads(proc.stdout)
    failing = [r for r in data["results"] if r["status"] == "fail"]
    assert len(failing) >= 3
    assert all("counterexample" in r for r in failing)


def test_verify_unknown_id():
    proc = run("verify", "--only", "eq0.0")
    assert proc.returncode != 0 and "valid ids" in proc.stderr


def test_verify_default_bounds_pass_and_deterministic():
    a = run("verify", check=True).stdout
    b = run("verify", "--jobs", "2", check=True).stdout
    assert a == b
    assert json.loads(a)["passed"] is True


def test_conjecture_grid():
    proc = run("conjecture", "--n-max", "6", "--m-max", "2", check=True)
    data = json.loads(proc.stdout)
    assert data["all_pass"] is True
    assert len(data["cells"]) == 6 * (4 * 2 + 3)
    assert "seconds" not in data["cells"][0]
    timed = json.loads(run("conjecture", "--id", "3.47", "--n-max", "8", "--timing", check=True).stdout)
    assert [c["range"] for c in timed["cells"]] == [f"n={n}, m=1" for n in range(1, 9)]
    assert "seconds" in timed["cells"][0]
    empty = json.loads(run("conjecture", "--n-max", "0", check=True).stdout)
    assert empty["cells"] == []


def test_conjecture_output_is_deterministic():
    a = run("conjecture", "--n-max", "4", "--m-max", "2", check=True).stdout
    b = run("conjecture", "--n-max", "4", "--m-max", "2", "--jobs", "3", check=True).stdout
    assert a == b


def test_output_file(tmp_path):
    target = tmp_path / "out.txt"
    run("eval", "--family", "qfib", "--n", "3", "--output", str(target), check=True)
    assert target.read_text() == "x^3 - (1+q) x\n"


def test_golden_round_trip(tmp_path):
    env = {"QMOMENTS_GOLDEN_DIR": str(tmp_path / "g")}
    assert run("golden", "check", env=env).returncode == 1
    run("golden", "write", env=env, check=True)
    files = sorted(p.name for p in (tmp_path / "g").iterdir())
    assert "table_a_qfib.json" in files
    proc = run("golden", "check", env=env, check=True)
    assert proc.stdout.count("OK ") == len(files)
    victim = tmp_path / "g" / "family_qfib.json"
    victim.write_text(victim.read_text().replace('"1"', '"2"', 1))
    assert run("golden", "check", env=env).returncode == 1


def test_golden_reemit_is_fixed_point():
    from qnarayana.cli import _golden_objects, _reemit

    for name, text in _golden_objects().items():
        assert _reemit(name, text) == text


@pytest.mark.parametrize("cmd", ["eval", "table", "verify", "conjecture", "golden"])
def test_help(cmd):
    assert run(cmd, "--help").returncode == 0
