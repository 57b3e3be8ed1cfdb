"""Tests for GitHub Actions integration."""

from __future__ import annotations

from springstack.ci import annotate_campaign, campaign_summary
from springstack.reports import ClaimReport


def _reports(fail: bool = False) -> list[ClaimReport]:
    stack = ClaimReport("thm-stack", "exhaustive", instances=120)
    if fail:
        stack.counterexamples = [{"levi": "λ=(2,1)", "expected": "[[1,3],[2]]", "got": "[[1,2],[3]]"}]
        stack.violations = 4
    return [
        ClaimReport("lem-closure", "out-of-scope"),
        ClaimReport("lem-codim", "exhaustive", instances=1_234, skipped=[{"shape": [1, 1, 1]}]),
        stack,
    ]


class TestCampaignSummary:
    def test_all_passed(self):
        md = campaign_summary(_reports())
        assert "## springstack verification" in md
        assert "**All 3 claims passed or are out of scope**" in md
        assert "| `lem-codim` | exhaustive | ✅ pass | 1,234 | 1 |" in md
        assert "➖ out of scope" in md

    def test_failures_counted(self):
        md = campaign_summary(_reports(fail=True))
        assert "**1 of 3 claims failed**" in md
        assert "| `thm-stack` | exhaustive | ❌ fail | 120 | 0 |" in md


class TestAnnotateCampaign:
    def test_step_summary_written(self, tmp_path, monkeypatch, capsys):
        summary = tmp_path / "summary.md"
        monkeypatch.setenv("GITHUB_STEP_SUMMARY", str(summary))
        monkeypatch.delenv("GITHUB_ACTIONS", raising=False)
        annotate_campaign(_reports())
        assert "`thm-stack`" in summary.read_text(encoding="utf-8")
        # annotations only inside Actions
        assert capsys.readouterr().out == ""

    def test_error_annotation(self, monkeypatch, capsys):
        monkeypatch.setenv("GITHUB_ACTIONS", "true")
        monkeypatch.delenv("GITHUB_STEP_SUMMARY", raising=False)
        annotate_campaign(_reports(fail=True))
        out = capsys.readouterr().out
        error = out.splitlines()[0]
        assert error.startswith("::error title=springstack thm-stack::4 of 120 instances violate: Φ(LS(")
        assert 'First counterexample: {"levi":"λ=(2,1)","expected":"[[1,3],[2]]","got":"[[1,2],[3]]"}' in error
        assert "::notice" not in out

    def test_notice_when_all_pass(self, monkeypatch, capsys):
        monkeypatch.setenv("GITHUB_ACTIONS", "true")
        monkeypatch.delenv("GITHUB_STEP_SUMMARY", raising=False)
        annotate_campaign(_reports())
        out = capsys.readouterr().out
        assert "::notice title=springstack::2 claims verified, 1 out of scope" in out

    def test_warning_for_skipped_instances(self, monkeypatch, capsys):
        monkeypatch.setenv("GITHUB_ACTIONS", "true")
        monkeypatch.delenv("GITHUB_STEP_SUMMARY", raising=False)
        annotate_campaign(_reports())
        out = capsys.readouterr().out
        assert "::warning title=springstack lem-codim::1 instance(s) skipped at the flag ceiling; 1234 checked" in out
        assert "warning title=springstack thm-stack" not in out

    def test_unwritable_summary_is_logged(self, tmp_path, monkeypatch, caplog):
        monkeypatch.setenv("GITHUB_STEP_SUMMARY", str(tmp_path))
        monkeypatch.delenv("GITHUB_ACTIONS", raising=False)
        annotate_campaign(_reports())
        assert "could not append to the job summary" in caplog.text

    def test_one_line_per_annotation(self, monkeypatch, capsys):
        monkeypatch.setenv("GITHUB_ACTIONS", "true")
        monkeypatch.delenv("GITHUB_STEP_SUMMARY", raising=False)
        report = ClaimReport("thm-stack", "exhaustive", instances=1,
                             counterexamples=[{"got": "a\nb"}], violations=1)
        annotate_campaign([report])
        assert capsys.readouterr().out.count("\n") == 1
