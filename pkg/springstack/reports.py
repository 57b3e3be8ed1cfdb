"""
reports.py — Records the outcome of each verified claim.

ClaimReport holds one claim's evidence. ReportLedger accumulates them
across a campaign and persists them as a JSON report.
"""

from __future__ import annotations

import json
import logging
import threading
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path

from springstack.claims import OUT_OF_SCOPE, anchors, get_anchor
from springstack.errors import ConfigError

logger = logging.getLogger(__name__)

TOOL = "springstack"


@dataclass
class ClaimReport:
    """Evidence for one claim: how many instances ran and what failed."""

    claim_id: str
    mode: str                   # "exhaustive" | "random" | "single" | "out-of-scope"
    instances: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    violations: int = 0         # total failures; counterexamples keeps the first few
    skipped: list[dict] = field(default_factory=list)   # ceiling aborts
    notes: list[str] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def anchor(self) -> str:
        return get_anchor(self.claim_id)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and self.mode != "out-of-scope"

    @property
    def status(self) -> str:
        if self.mode == "out-of-scope":
            return OUT_OF_SCOPE
        return "pass" if self.passed else "fail"

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "claim": self.claim_id,
            "anchor": self.anchor,
            "mode": self.mode,
            "status": self.status,
            "instances": self.instances,
            "violations": self.violations,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "notes": self.notes,
        }
        if timings:
            out["wall_time_s"] = round(self.wall_time_s, 6)
        return out

    @classmethod
    def from_json(cls, data: dict) -> ClaimReport:
        return cls(
            claim_id=data["claim"],
            mode=data["mode"],
            instances=int(data["instances"]),
            counterexamples=list(data.get("counterexamples", [])),
            violations=int(data.get("violations", len(data.get("counterexamples", [])))),
            skipped=list(data.get("skipped", [])),
            notes=list(data.get("notes", [])),
            wall_time_s=float(data.get("wall_time_s", 0.0)),
        )


class ReportLedger:
    """Thread-safe accumulator for ClaimReports.

    Usage:
        ledger = ReportLedger()
        ledger.record(ClaimReport(...))
        ledger.reports()    # sorted by claim id
    """

    def __init__(self, config: dict | None = None, version: str = "") -> None:
        self._reports: dict[str, ClaimReport] = {}
        self._lock = threading.Lock()
        self._post_record_hooks: list[Callable[[ClaimReport], None]] = []
        self.config = dict(config or {})
        self.version = version

    # ── Recording ─────────────────────────────────────────────────────────────

    def record(self, report: ClaimReport) -> None:
        with self._lock:
            self._reports[report.claim_id] = report
        # hooks run outside the lock
        for hook in list(self._post_record_hooks):
            try:
                hook(report)
            except Exception:
                logger.exception("report hook failed for %s", report.claim_id)

    def add_hook(self, hook: Callable[[ClaimReport], None]) -> None:
        self._post_record_hooks.append(hook)

    def reports(self) -> list[ClaimReport]:
        with self._lock:
            return [self._reports[k] for k in sorted(self._reports)]

    def reset(self) -> None:
        with self._lock:
            self._reports.clear()

    # ── Aggregate stats ────────────────────────────────────────────────────────

    def failed(self) -> list[ClaimReport]:
        return [r for r in self.reports() if r.status == "fail"]

    def all_passed(self) -> bool:
        return not self.failed()

    def summary(self) -> dict[str, int]:
        reports = self.reports()
        return {
            "claims": len(reports),
            "passed": sum(1 for r in reports if r.status == "pass"),
            "failed": sum(1 for r in reports if r.status == "fail"),
            "out_of_scope": sum(1 for r in reports if r.status == OUT_OF_SCOPE),
        }

    def to_json(self, timings: bool = False) -> dict:
        reports = self.reports()
        return {
            "tool": TOOL,
            "version": self.version,
            "config": self.config,
            "anchors": {r.claim_id: anchors()[r.claim_id] for r in reports},
            "reports": [r.to_json(timings) for r in reports],
            "summary": self.summary(),
        }

    # ── JSON persistence ───────────────────────────────────────────────────────

    def save(self, path: str | Path, timings: bool = False) -> None:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(
            json.dumps(self.to_json(timings), indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
        logger.info("wrote campaign report to %s", target)

    @classmethod
    def from_json(cls, data: dict) -> ReportLedger:
        if data.get("tool") != TOOL:
            raise ConfigError(f"not a {TOOL} campaign report")
        ledger = cls(config=data.get("config"), version=data.get("version", ""))
        for entry in data.get("reports", []):
            ledger.record(ClaimReport.from_json(entry))
        return ledger

    @classmethod
    def load(cls, path: str | Path) -> ReportLedger:
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))
