"""
ci.py — Report a verification campaign to GitHub Actions.

Usage in a workflow::

    - name: springstack verification
      run: springstack verify --max-n 5 --p 2 --annotate --output campaign.json

Each failing claim becomes an ``::error`` naming the statement it violates and
its first counterexample. Claims with enumerations cut off by the flag ceiling
get a ``::warning``, since their evidence is incomplete. The claim table is
appended to ``$GITHUB_STEP_SUMMARY`` whenever that variable is set.
"""

from __future__ import annotations

import json
import logging
import os
from collections.abc import Sequence
from pathlib import Path

from springstack.claims import OUT_OF_SCOPE
from springstack.reports import ClaimReport

logger = logging.getLogger(__name__)

_TITLE = "springstack"


def _running_in_actions() -> bool:
    return os.environ.get("GITHUB_ACTIONS") == "true"


def _workflow_command(level: str, title: str, message: str) -> None:
    # workflow commands are one line; %, CR and LF are percent-encoded
    encoded = message.replace("%", "%25").replace("\r", "%0D").replace("\n", "%0A")
    print(f"::{level} title={title}::{encoded}")


def _append_job_summary(markdown: str) -> None:
    target = os.environ.get("GITHUB_STEP_SUMMARY")
    if not target:
        return
    try:
        with Path(target).open("a", encoding="utf-8") as fh:
            fh.write(markdown + "\n")
    except OSError as exc:
        logger.warning("could not append to the job summary %s: %s", target, exc)


def _counterexample(report: ClaimReport) -> str:
    if not report.counterexamples:
        return "none recorded"
    return json.dumps(report.counterexamples[0], ensure_ascii=False, separators=(",", ":"))


def campaign_summary(reports: Sequence[ClaimReport]) -> str:
    """Markdown table of a campaign, one row per claim."""
    failed = [r for r in reports if r.status == "fail"]
    lines = ["## springstack verification\n"]
    if failed:
        lines.append(f"**{len(failed)} of {len(reports)} claims failed**\n")
    else:
        lines.append(f"**All {len(reports)} claims passed or are out of scope**\n")
    lines.append("| Claim | Mode | Status | Instances | Skipped |")
    lines.append("|---|---|---|---|---|")
    for r in reports:
        status = {"pass": "✅ pass", "fail": "❌ fail"}.get(r.status, f"➖ {r.status}")
        lines.append(f"| `{r.claim_id}` | {r.mode} | {status} | {r.instances:,} | {len(r.skipped)} |")
    return "\n".join(lines)


def annotate_campaign(reports: Sequence[ClaimReport]) -> None:
    """Write the job summary, then one annotation per failing or partly skipped claim."""
    _append_job_summary(campaign_summary(reports))
    if not _running_in_actions():
        return

    failed = [r for r in reports if r.status == "fail"]
    for r in failed:
        _workflow_command(
            "error",
            f"{_TITLE} {r.claim_id}",
            f"{r.violations} of {r.instances} instances violate: {r.anchor}. "
            f"First counterexample: {_counterexample(r)}",
        )
    for r in reports:
        if r.skipped and r.status != "fail":
            _workflow_command(
                "warning",
                f"{_TITLE} {r.claim_id}",
                f"{len(r.skipped)} instance(s) skipped at the flag ceiling; "
                f"{r.instances} checked without a violation",
            )
    if not failed:
        scoped = sum(1 for r in reports if r.status == OUT_OF_SCOPE)
        _workflow_command("notice", _TITLE, f"{len(reports) - scoped} claims verified, {scoped} out of scope")
