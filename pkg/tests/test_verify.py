"""The verification harness: passing runs, report shape, determinism, and
sensitivity to deliberately broken involutions."""

import pytest

import partinv.verify as verify
from partinv import (
    ALL_CHECKS,
    check_avoiders_match_v,
    check_equidistribution,
    check_involution,
    check_nonoverlapping,
    check_spans,
    check_y_matches_v,
    run_all,
)
from oracles import skip_transfer_mutant


ALL_AT_SIX = [
    check_involution,
    check_spans,
    check_nonoverlapping,
    check_equidistribution,
    check_y_matches_v,
    check_avoiders_match_v,
]


@pytest.mark.parametrize("check", ALL_AT_SIX)
def test_passes_at_small_depth(check):
    report = check(6)
    assert report.ok
    assert report.status == "pass"
    assert report.counterexample is None
    assert report.n_range == (1, 6)
    assert report.elapsed >= 0


def test_equidistribution_trivial_depth():
    assert check_equidistribution(1).ok


def test_summary_format():
    report = check_involution(4)
    assert report.summary() == f"PASS involution n=1..4 ({report.elapsed:.2f}s)"


def test_to_json_deterministic_modulo_elapsed():
    first = check_spans(5).to_json()
    second = check_spans(5).to_json()
    first.pop("elapsed_seconds")
    second.pop("elapsed_seconds")
    assert first == second
    assert first == {
        "check": "spans",
        "n_range": [1, 5],
        "status": "pass",
        "counterexample": None,
    }


def test_run_all_names_and_order():
    reports = run_all(4)
    assert [r.check_name for r in reports] == [name for name, _ in ALL_CHECKS]
    assert all(r.ok for r in reports)


def test_run_all_uses_per_check_defaults(monkeypatch):
    monkeypatch.setattr(verify, "DEFAULT_LIMITS", {
        "involution": 3,
        "spans": 4,
        "nonoverlapping": 5,
        "equidistribution": 3,
        "y_matches_v": 4,
        "avoiders_match_v": 5,
    })
    reports = verify.run_all()
    assert [r.n_range[1] for r in reports] == [3, 4, 5, 3, 4, 5]


class TestMutationSensitivity:
    def test_identity_map_is_caught(self):
        report = check_involution(5, sigma_fn=lambda p: p)
        assert not report.ok
        assert report.status == "fail"
        assert report.counterexample is not None
        assert report.counterexample.n <= 5

    def test_skipped_transfer_is_caught(self):
        report = check_involution(5, sigma_fn=skip_transfer_mutant)
        assert not report.ok
        c = report.counterexample
        assert c is not None
        assert c.n <= 5
        # deterministic: first offender in enumeration order
        again = check_involution(5, sigma_fn=skip_transfer_mutant).counterexample
        assert (again.n, again.item, again.claim) == (c.n, c.item, c.claim)

    def test_failure_is_reported_not_raised(self):
        report = check_involution(5, sigma_fn=lambda p: p)
        payload = report.to_json()
        assert payload["status"] == "fail"
        assert payload["counterexample"]["n"] == report.counterexample.n
        assert "FAIL" in report.summary()
        assert "counterexample" in report.summary()
