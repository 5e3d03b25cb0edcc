import json
import subprocess
import sys


def run(*args):
    return subprocess.run([sys.executable, "-m", "pfafftoda", *args], capture_output=True, text=True)


def test_classify_command():
    p = run("classify", "--M", "4", "--intertwining", "--mod-symmetry")
    assert p.returncode == 0
    assert "(1,1|1,1)" in p.stdout and "count: 8" in p.stdout


def test_show_relation_command():
    p = run("show-relation", "--label", "eq5even-4a", "--variant", "emended")
    assert p.returncode == 0 and "tau(" in p.stdout
    assert run("show-relation", "--label", "nope").returncode == 2


def test_verify_and_report(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suites": ["tau"], "seeds": [0], "D": 3}))
    out = tmp_path / "r.json"
    p = run("verify", "--config", str(cfg), "--N", "1", "--output", str(out))
    assert p.returncode == 0 and "failed: 0" in p.stdout
    rep = json.loads(out.read_text())
    assert rep["config"]["N"] == 1 and rep["schema_version"] == "1"
    t = run("report", "--input", str(out), "--format", "text")
    assert t.returncode == 0 and t.stdout.rstrip().endswith("failed: 0")


def test_empty_suite_rejected():
    p = run("verify", "--suites", "")
    assert p.returncode == 2 and "error" in p.stderr


def test_mutation_run_lists_failures(tmp_path):
    out = tmp_path / "m.json"
    p = run("verify", "--suites", "fourpoint", "--seeds", "0", "--D", "3", "--mutate", "--output", str(out))
    assert p.returncode == 1
    rep = json.loads(out.read_text())
    muts = [f for f in rep["summary"]["failures"] if "/mutation/" in f["relation_label"]]
    assert len(muts) == 120
    assert all(f["first_nonzero_monomial"] for f in muts)
