"""The law-checking registry and its report format."""

import pytest

from noncross.verify import DEFAULT_SEED, SUITES, VerifyReport, run_suite, run_verify
from noncross.verify import _scan


EXPECTED_SUITES = {
    "enumeration",
    "lattice",
    "relative-lattice",
    "powers",
    "admissibility",
    "shuffle-order",
    "partial-monoid",
    "compose-identities",
    "kreweras",
    "relative-complements",
    "bijections",
    "coalgebras",
    "reduction-morphism",
    "reduced-algebra",
    "moebius",
    "decalage",
    "two-segal",
    "ulf",
    "moment-cumulant",
    "kernels",
}


class TestRegistry:
    def test_registered_names(self):
        assert set(SUITES) == EXPECTED_SUITES

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suite("no-such-suite")

    def test_run_verify_selects_suites(self):
        reports = run_verify(["enumeration"], n=4, oracle_n=3)
        assert {r.suite for r in reports} == {"enumeration"}
        assert all(r.passed for r in reports)

    def test_irrelevant_overrides_are_ignored(self):
        # Each suite only receives the parameters its signature names, so a
        # global override like seed never breaks parameterless suites.
        reports = run_suite("enumeration", n=4, oracle_n=3, seed=DEFAULT_SEED, depth=2)
        assert all(r.passed for r in reports)

    @pytest.mark.parametrize("name", sorted(EXPECTED_SUITES - {"kernels"}))
    def test_every_suite_passes_at_reduced_size(self, name):
        small = dict(
            n=3, oracle_n=3, bound_n=3, tuple_n=2, pair_n=3, k=2, length=2,
            bound=12, depth=3, trials=5, pairs_n=4, seed=DEFAULT_SEED,
        )
        reports = run_suite(name, **small)
        assert reports, "suite produced no reports"
        for r in reports:
            assert r.passed, r.line()
            assert r.checked > 0

    def test_kernels_suite(self):
        for r in run_suite("kernels", n=4, trials=10, seed=DEFAULT_SEED):
            assert r.passed, r.line()


class TestReports:
    def test_line_format(self):
        (r, *_) = run_suite("enumeration", n=3, oracle_n=3)
        assert r.line().startswith("PASS enumeration:")
        assert r.passed

    def test_json_round_trip_fields(self):
        (r, *_) = run_suite("enumeration", n=3, oracle_n=3)
        data = r.to_json()
        assert data["suite"] == "enumeration"
        assert data["passed"] is True
        assert data["checked"] == r.checked
        assert "law" in data and "params" in data

    def test_scan_collects_the_first_counterexample(self):
        def cases():
            yield None
            yield None
            yield "third case went wrong"
            yield None  # never reached

        report = _scan("demo", "demo law", {}, cases())
        assert not report.passed
        assert report.checked == 3
        assert report.counterexample == "third case went wrong"
        assert report.line().startswith("FAIL demo:")
        assert "third case went wrong" in report.line()

    def test_scan_counts_clean_cases(self):
        report = _scan("demo", "demo law", {"n": 2}, iter([None] * 7))
        assert report.passed and report.checked == 7 and report.counterexample is None

    def test_failing_report_json(self):
        report = VerifyReport(
            suite="demo", law="demo law", params={}, checked=1,
            counterexample="boom",
        )
        assert report.to_json()["counterexample"] == "boom"
        assert report.to_json()["passed"] is False
