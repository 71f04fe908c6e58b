import csv
import io
import json
import os
import subprocess
import sys

import pytest

from smallpart import harness
from smallpart.cli import main


def run_cli(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


# ---- harness ------------------------------------------------------------------

def test_schema_and_pass():
    chk = harness.run("s2_corrections", {"Lmin": 3, "Lmax": 8, "T": 300})
    doc = json.loads(chk.to_json())
    assert set(doc) == {"check", "params", "verdict", "evidence", "anchors"}
    assert doc["verdict"] == "pass" and doc["anchors"]
    assert chk.passed


def test_counterexample_gives_fail():
    chk = harness.run("GLthree_corrections", {"L": 5, "T": 400})
    assert chk.verdict == "fail"
    (item,) = chk.evidence
    assert item["counterexample"] and item["diff"] == {"28": [0, 1]}
    assert item["expected_is_sufficient"] is True


def test_unknown_check():
    with pytest.raises(ValueError):
        harness.run("no_such_check")


def test_output_is_deterministic():
    a = harness.run("semigroup_suite", {"nmax": 60}).to_json()
    b = harness.run("semigroup_suite", {"nmax": 60}).to_json()
    assert a == b


def test_workers_do_not_change_output(monkeypatch):
    one = harness.run("dual_oracle", {"smax": 2, "Nmax": 25}).to_json()
    monkeypatch.setenv("SMALLPART_WORKERS", "2")
    assert harness.worker_count() == 2
    assert harness.run("dual_oracle", {"smax": 2, "Nmax": 25}).to_json() == one


def test_explore_corrections():
    t3 = harness.explore_corrections(3, 4, 14, 400)
    assert t3["stabilization_candidate"] == 10
    assert t3["rows"][-1]["correction"] == "q^4 + q^5 + q^8 + q^10 + q^12 + q^14 + q^16"
    t2 = harness.explore_corrections(2, 3, 9, 300)
    assert t2["stabilization_candidate"] == 5
    assert harness.explore_corrections(1, 1, 6, 200)["rows"][0]["degree"] is None
    with pytest.raises(ValueError):
        harness.explore_corrections(0, 1, 3, 50)


# ---- command line ------------------------------------------------------------------

def test_cli_coeffs_csv():
    code, text = run_cli("coeffs", "--L", "10", "--s", "3", "--order", "8")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and rows[5] == ["4", "-1", "-1"]


def test_cli_verify_exit_codes():
    code, text = run_cli("verify", "--check", "s2_corrections", "--param", "Lmax=6",
                         "--param", "T=200")
    assert code == 0 and json.loads(text)["verdict"] == "pass"
    code, text = run_cli("verify", "--check", "GLthree_corrections", "--param", "L=5",
                         "--param", "T=200")
    assert code == 1 and json.loads(text)["verdict"] == "fail"


def test_cli_usage_errors():
    assert run_cli("injection", "--L", "7", "--N", "100")[0] == 2
    assert run_cli("injection", "--L", "3", "--N", "100")[0] == 2
    assert run_cli("corrections", "--s", "3", "--Lmin", "9", "--Lmax", "4")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run_cli("verify", "--check", "nope")
    assert exc.value.code == 2


def test_cli_injection_and_semigroup():
    code, text = run_cli("injection", "--L", "22", "--N", "21", "--Nmax", "23")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and [r["passed"] for r in rows] == ["True"] * 3
    code, text = run_cli("semigroup", "--gens", "4,5,6", "--n", "169")
    assert code == 0 and text.splitlines()[1].endswith("0 5 24")
    code, text = run_cli("semigroup", "--gens", "4,7", "--n", "17")
    assert text.splitlines()[1] == '"4,7",17,0,'


def test_cli_bounds():
    code, text = run_cli("bounds", "--L", "5", "--s", "1", "--digit-cap", "1000")
    doc = json.loads(text)
    assert code == 0 and doc["P"] == "720" and doc["Gamma"]["exact_available"] is False


def test_cli_plots(tmp_path):
    paths = [tmp_path / n for n in ("c.png", "r.png", "i.png")]
    assert run_cli("coeffs", "--L", "6", "--s", "3", "--order", "60", "--plot", str(paths[0]))[0] == 0
    assert run_cli("corrections", "--s", "3", "--Lmin", "4", "--Lmax", "8", "--order", "200",
                   "--plot", str(paths[1]))[0] == 0
    assert run_cli("injection", "--L", "22", "--N", "21", "--Nmax", "24",
                   "--plot", str(paths[2]))[0] == 0
    assert all(p.stat().st_size > 0 for p in paths)


def test_module_entry_point_is_byte_stable():
    cmd = [sys.executable, "-m", "smallpart", "verify", "--check", "table1_rows"]
    env = dict(os.environ, SMALLPART_WORKERS="1")
    a = subprocess.run(cmd, capture_output=True, env=env)
    b = subprocess.run(cmd, capture_output=True, env=env)
    assert a.returncode == 0 and a.stdout == b.stdout
