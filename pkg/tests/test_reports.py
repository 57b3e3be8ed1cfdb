"""Tests for claim reports and the campaign ledger."""

from __future__ import annotations

import json
import logging

import pytest

from springstack.claims import OUT_OF_SCOPE, get_anchor
from springstack.errors import ConfigError
from springstack.reports import ClaimReport, ReportLedger


class TestClaimReport:
    def test_pass(self):
        r = ClaimReport("lem-codim", "exhaustive", instances=12)
        assert r.passed
        assert r.status == "pass"
        assert r.anchor == get_anchor("lem-codim")

    def test_fail(self):
        r = ClaimReport("thm-stack", "random", instances=5, counterexamples=[{"got": 1}], violations=1)
        assert not r.passed
        assert r.status == "fail"

    def test_out_of_scope(self):
        r = ClaimReport("lem-closure", "out-of-scope")
        assert not r.passed
        assert r.status == OUT_OF_SCOPE

    def test_skips_do_not_fail(self):
        r = ClaimReport("fibre-classes", "exhaustive", instances=3, skipped=[{"shape": [1, 1, 1, 1]}])
        assert r.status == "pass"

    def test_to_json(self):
        r = ClaimReport("lem-codim", "exhaustive", instances=12, wall_time_s=0.1234567)
        data = r.to_json()
        assert data["claim"] == "lem-codim"
        assert data["status"] == "pass"
        assert "wall_time_s" not in data
        assert r.to_json(timings=True)["wall_time_s"] == 0.123457

    def test_from_json(self):
        r = ClaimReport("thm-stack", "random", instances=9, counterexamples=[{"got": 2}],
                        violations=3, notes=["n"], wall_time_s=1.5)
        back = ClaimReport.from_json(r.to_json(timings=True))
        assert back == r

    def test_from_json_defaults_violations(self):
        back = ClaimReport.from_json(
            {"claim": "thm-stack", "mode": "random", "instances": 2, "counterexamples": [{}, {}]}
        )
        assert back.violations == 2


class TestReportLedger:
    def test_sorted_by_claim(self):
        ledger = ReportLedger()
        ledger.record(ClaimReport("thm-stack", "exhaustive", instances=1))
        ledger.record(ClaimReport("cor-partitionsigma", "exhaustive", instances=1))
        assert [r.claim_id for r in ledger.reports()] == ["cor-partitionsigma", "thm-stack"]

    def test_record_replaces(self):
        ledger = ReportLedger()
        ledger.record(ClaimReport("thm-stack", "exhaustive", instances=1))
        ledger.record(ClaimReport("thm-stack", "exhaustive", instances=7))
        (only,) = ledger.reports()
        assert only.instances == 7

    def test_summary(self):
        ledger = ReportLedger()
        ledger.record(ClaimReport("lem-codim", "exhaustive", instances=1))
        ledger.record(ClaimReport("lem-closure", "out-of-scope"))
        ledger.record(ClaimReport("thm-stack", "random", counterexamples=[{}], violations=1))
        assert ledger.summary() == {"claims": 3, "passed": 1, "failed": 1, "out_of_scope": 1}
        assert not ledger.all_passed()
        assert [r.claim_id for r in ledger.failed()] == ["thm-stack"]

    def test_out_of_scope_is_not_a_failure(self):
        ledger = ReportLedger()
        ledger.record(ClaimReport("lem-closure", "out-of-scope"))
        assert ledger.all_passed()

    def test_reset(self):
        ledger = ReportLedger()
        ledger.record(ClaimReport("lem-codim", "exhaustive"))
        ledger.reset()
        assert ledger.reports() == []

    def test_hook_failure_is_logged(self, caplog):
        ledger = ReportLedger()
        seen: list[str] = []

        def broken(report: ClaimReport) -> None:
            raise RuntimeError("boom")

        ledger.add_hook(broken)
        ledger.add_hook(lambda r: seen.append(r.claim_id))
        with caplog.at_level(logging.ERROR, logger="springstack.reports"):
            ledger.record(ClaimReport("lem-codim", "exhaustive"))
        assert seen == ["lem-codim"]
        assert "report hook failed for lem-codim" in caplog.text

    def test_to_json(self):
        ledger = ReportLedger(config={"max_n": 3}, version="0.1.0")
        ledger.record(ClaimReport("lem-codim", "exhaustive", instances=4))
        data = ledger.to_json()
        assert data["tool"] == "springstack"
        assert data["version"] == "0.1.0"
        assert data["config"] == {"max_n": 3}
        assert data["anchors"] == {"lem-codim": get_anchor("lem-codim")}

    def test_save_and_load(self, tmp_path):
        ledger = ReportLedger(config={"max_n": 2, "primes": [2]}, version="0.1.0")
        ledger.record(ClaimReport("lem-codim", "exhaustive", instances=4, wall_time_s=0.5))
        ledger.record(ClaimReport("lem-closure", "out-of-scope", notes=["not checked"]))
        path = tmp_path / "out" / "campaign.json"
        ledger.save(path, timings=True)
        loaded = ReportLedger.load(path)
        assert loaded.to_json(timings=True) == ledger.to_json(timings=True)
        assert json.loads(path.read_text(encoding="utf-8"))["summary"]["claims"] == 2

    def test_load_rejects_other_files(self, tmp_path):
        path = tmp_path / "other.json"
        path.write_text(json.dumps({"tool": "something-else"}), encoding="utf-8")
        with pytest.raises(ConfigError, match="not a springstack campaign report"):
            ReportLedger.load(path)
