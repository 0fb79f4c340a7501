"""
Test suite for the differential self-check
"""
import pytest

from src.selfcheck import CheckResult, SelfCheck


def test_small_suite_passes():
    suite = SelfCheck(max_n=3, max_b=2, max_lambda=5)
    results = suite.run()
    assert suite.all_passed, [r for r in results if not r.ok]
    assert all(r.instances > 0 for r in results)

    table = suite.report()
    assert list(table.columns) == ['check', 'instances', 'passed', 'failed', 'skipped', 'status', 'first failure']
    assert len(table) == len(results)
    assert set(table['status']) == {"[OK]"}


def test_default_settings_pass():
    """max_n=4, max_b=3, λ up to 8: the 5-cycle and b-fold chromatic numbers at b=3 included"""
    suite = SelfCheck()
    suite.run()
    assert suite.all_passed, [r for r in suite.results if not r.ok]
    chromatic = next(r for r in suite.results if r.name == "b-fold chromatic number")
    assert chromatic.passed > 0


def test_budget_skips_instead_of_failing():
    suite = SelfCheck(max_n=2, max_b=2, max_lambda=5, budget=100)
    suite.run()
    oracle = next(r for r in suite.results if r.name == "pipeline vs oracle")
    assert oracle.skipped > 0
    assert oracle.failed == 0


def test_check_result_tally():
    result = CheckResult("demo")
    result.record(True, "a")
    result.record(None, "b")
    result.record(False, "c")
    result.record(False, "d")
    assert (result.instances, result.passed, result.skipped, result.failed) == (4, 1, 1, 2)
    assert result.first_failure == "c"
    assert not result.ok


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
