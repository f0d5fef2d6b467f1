import pytest

from weakjordan.report import dumps, suite_report
from weakjordan.suites import SUITES, case_rng, run_suite


@pytest.mark.parametrize("name", SUITES)
def test_small_suite_passes(name):
    [result] = run_suite(name, seed=7, cases=12)
    assert result.passed, result.failures[:3]
    assert all(stats.total > 0 for stats in result.laws.values())


def test_fixed_dimension():
    [result] = run_suite("lattice", seed=1, cases=5, dim=4)
    assert result.passed


def test_fixed_dimension_reaches_inputs():
    [result] = run_suite("lattice", seed=1, cases=5, dim=3, inject_fault=True)
    assert all(len(f["inputs"]["x"]) == 3 for f in result.failures if "z" in f["inputs"])


def test_fault_injection_is_caught():
    [result] = run_suite("lattice", seed=3, cases=10, inject_fault=True)
    assert not result.passed
    failure = result.failures[0]
    assert failure["seed"] == 3 and failure["suite"] == "lattice"
    assert set(failure["inputs"]) >= {"x", "y", "z"}
    # the patch is undone afterwards
    [clean] = run_suite("lattice", seed=3, cases=10)
    assert clean.passed


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_case_streams_are_independent():
    a = case_rng(42, "cone", 5).random(3)
    b = case_rng(42, "cone", 5).random(3)
    c = case_rng(42, "bv", 5).random(3)
    assert a.tolist() == b.tolist() != c.tolist()


def test_reports_are_deterministic():
    config = {"seed": 11}
    one = dumps(suite_report(config, "bv", run_suite("bv", seed=11, cases=20)))
    two = dumps(suite_report(config, "bv", run_suite("bv", seed=11, cases=20)))
    assert one == two


def test_base_zero_flagged():
    [result] = run_suite("relations", seed=42, cases=300)
    assert result.notes.get("base_zero", 0) > 0
