import pytest

from pfafftoda.suites import ConfigError, SuiteConfig, emit_report, exit_code, run_suite


def test_empty_suite_list_rejected():
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict({"suites": []})


def test_unknown_key_rejected():
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict({"suites": ["tau"], "bogus": 1})


def test_inline_clifford_config():
    cfg = SuiteConfig.from_dict({"suites": ["fourpoint"], "seeds": [0], "N": 2, "g_spec": {"inline": [
        {"kind": "AA", "component1": 1, "momentum1": 0, "component2": 2, "momentum2": -1, "lambda": "2"},
        {"kind": "BB", "component1": 1, "momentum1": 1, "component2": 2, "momentum2": 0, "lambda": "-1/3"}]}})
    assert len(cfg.g_for(0).factors) == 2


def test_passing_run_summary_and_determinism():
    cfg = SuiteConfig(suites=("tau", "classify"), seeds=(0,))
    a = emit_report(run_suite(cfg))
    b = emit_report(run_suite(cfg))
    assert a == b
    assert "runtime_ms" not in a
    text = emit_report(run_suite(cfg), "text")
    assert text.rstrip().endswith("failed: 0")


def test_parallel_matches_serial():
    cfg = SuiteConfig(suites=("classify", "equivalence"), seeds=(0,))
    par = SuiteConfig(suites=("classify", "equivalence"), seeds=(0,), jobs=2)
    assert emit_report(run_suite(cfg)) == emit_report(run_suite(par))


def test_window_override_too_small_is_reported():
    cfg = SuiteConfig(suites=("twopoint",), seeds=(0,), window=(-1, 1), D=3)
    rep = run_suite(cfg)
    errs = [r for r in rep["records"] if "error" in r]
    assert errs and "needed by tau(" in errs[0]["error"]
    assert exit_code(rep) == 1


def test_printed_misprints_are_flagged_not_failed():
    rep = run_suite(SuiteConfig(suites=("fourpoint",), seeds=(0,), D=3))
    assert rep["summary"]["failed"] == 0
    assert any(f["relation_label"] == "2020" for f in rep["summary"]["flagged"])
