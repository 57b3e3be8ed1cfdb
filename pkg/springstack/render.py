"""
render.py — Renders tableaux, fibre counts and campaign reports as text.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

from springstack.tableaux import StandardTableau

if TYPE_CHECKING:
    from springstack.partitions import Partition
    from springstack.reports import ClaimReport
    from springstack.springer import FibreCounts


def render_tableau(sigma: StandardTableau) -> str:
    """ASCII Young diagram, English convention, cells padded to the widest entry.

    >>> print(render_tableau(StandardTableau(((1, 3), (2,)))))
    +-+-+
    |1|3|
    +-+-+
    |2|
    +-+
    """
    width = len(str(sigma.size))
    lines: list[str] = []
    for i, row in enumerate(sigma.rows):
        border_len = len(row) if i == 0 else len(sigma.rows[i - 1])
        lines.append(_border(border_len, width))
        lines.append("|" + "|".join(f"{x:>{width}}" for x in row) + "|")
    if sigma.rows:
        lines.append(_border(len(sigma.rows[-1]), width))
    return "\n".join(lines)


def _border(cells: int, width: int) -> str:
    return "+" + "+".join("-" * width for _ in range(cells)) + "+"


def render_tableaux(tabs: Sequence[StandardTableau], title: str | None = None) -> str:
    lines = [title] if title else []
    for k, sigma in enumerate(tabs, start=1):
        lines.append(f"{k:>3}. {sigma}")
        lines.extend("     " + line for line in render_tableau(sigma).splitlines())
    return "\n".join(lines)


def render_induce(mu: Partition, oracle: Partition) -> str:
    agree = "agree" if mu == oracle else "DISAGREE"
    return f"μ^Σ = {mu}    oracle = {oracle}    ({agree})"


def render_fibre(counts: FibreCounts) -> str:
    """Per-class flag counts, ascending in the tableau order."""
    lines = [
        "",
        f"springstack fibre — shape {counts.shape} over F_{counts.p}: "
        f"{counts.total_flags:,} flag{'s' if counts.total_flags != 1 else ''}",
        "─" * 70,
    ]
    bar_width = 16
    for sigma, n in counts.classes:
        pct = (n / counts.total_flags * 100) if counts.total_flags else 0
        lines.append(f"  {str(sigma):<35}  {n:>9,}  {_bar(pct, bar_width)}  {pct:.0f}%")
    empty = counts.empty_classes()
    if empty:
        lines.append(f"  {len(empty)} empty class{'es' if len(empty) != 1 else ''}")
    lines.append("")
    return "\n".join(lines)


def _bar(pct: float, width: int) -> str:
    filled = round(pct / 100 * width)
    return "█" * filled + "░" * (width - filled)


def render_campaign(reports: Sequence[ClaimReport], timings: bool = False) -> str:
    """One row per claim, then the failing counterexamples."""
    if not reports:
        return "springstack: no claims verified.\n"
    header = f"{'Claim':<22} {'Mode':<13} {'Status':<24} {'Instances':>10} {'Skipped':>8}"
    if timings:
        header += f" {'Seconds':>9}"
    lines = ["", header, "─" * len(header)]
    for r in reports:
        row = f"{r.claim_id:<22} {r.mode:<13} {r.status:<24} {r.instances:>10,} {len(r.skipped):>8}"
        if timings:
            row += f" {r.wall_time_s:>9.2f}"
        lines.append(row)
    failed = [r for r in reports if r.status == "fail"]
    passed = sum(1 for r in reports if r.status == "pass")
    lines.append("─" * len(header))
    lines.append(f"  {passed} passed, {len(failed)} failed, {len(reports) - passed - len(failed)} out of scope")
    for r in failed:
        lines.append("")
        lines.append(f"  {r.claim_id}: {r.violations} violation{'s' if r.violations != 1 else ''} — {r.anchor}")
        for ce in r.counterexamples[:3]:
            lines.append(f"    └─ {ce}")
    lines.append("")
    return "\n".join(lines)
