"""Verification suite plumbing: selection, reporting, failure payloads."""

import pytest

from cubeforge import GraphError
from cubeforge.verify import SUITE_ORDER, SUITES, SuiteResult, run_suites


def test_all_suites_registered():
    assert set(SUITE_ORDER) == set(SUITES)
    assert len(SUITE_ORDER) == 11


def test_run_selected_suites():
    report = run_suites(["fig1", "prop4.5"], n=5)
    assert report.all_passed
    lines = report.lines()
    assert lines[0].startswith("fig1: pass")
    assert lines[1].startswith("prop4.5: pass")


def test_unknown_suite_rejected():
    with pytest.raises(GraphError):
        run_suites(["nope"])


def test_failures_render_with_reproducers():
    r = SuiteResult("demo")
    r.check(True, {"x": 1})
    r.check(False, {"graph": {"n": 1, "edges": []}})
    assert not r.ok
    assert r.line() == "demo: FAIL 1/2"
    from cubeforge.verify import VerifyReport

    report = VerifyReport(results=[r])
    assert not report.all_passed
    assert any("failure[demo]" in line for line in report.lines())


def test_budget_parameters_reach_suites():
    report = run_suites(["lemma4.4"], n=4)
    assert report.all_passed
    # 4 Fibonacci checks + Lucas checks for n in {3, 4}: tau shape + refusal
    assert report.results[0].instances == 4 + 2 * 2
