"""Tests for text rendering."""

from __future__ import annotations

from springstack.partitions import Partition
from springstack.render import (
    render_campaign,
    render_fibre,
    render_induce,
    render_tableau,
    render_tableaux,
)
from springstack.reports import ClaimReport
from springstack.springer import FibreCounts
from springstack.tableaux import StandardTableau


def T(*rows: tuple[int, ...]) -> StandardTableau:
    return StandardTableau(tuple(rows))


class TestRenderTableau:
    def test_small(self):
        assert render_tableau(T((1, 3), (2,))) == "+-+-+\n|1|3|\n+-+-+\n|2|\n+-+"

    def test_padding(self):
        sigma = StandardTableau((tuple(range(1, 11)), (11,)))
        lines = render_tableau(sigma).splitlines()
        assert lines[1] == "| 1| 2| 3| 4| 5| 6| 7| 8| 9|10|"
        assert lines[3] == "|11|"
        assert lines[-1] == "+--+"

    def test_tableaux_listing(self):
        out = render_tableaux([T((1, 2),), T((1,), (2,))], "two")
        assert out.splitlines()[0] == "two"
        assert "  1. [[1,2]]" in out
        assert "  2. [[1],[2]]" in out


class TestRenderInduce:
    def test_agree(self):
        mu = Partition((6, 6, 2, 1))
        assert render_induce(mu, mu) == "μ^Σ = (6,6,2,1)    oracle = (6,6,2,1)    (agree)"

    def test_disagree(self):
        assert "DISAGREE" in render_induce(Partition((2,)), Partition((1, 1)))


class TestRenderFibre:
    def test_counts_and_bars(self):
        counts = FibreCounts(
            Partition((2, 1)), 2, 5,
            ((T((1, 2), (3,)), 2), (T((1, 3), (2,)), 3)),
        )
        out = render_fibre(counts)
        assert "shape (2,1) over F_2: 5 flags" in out
        assert "[[1,2],[3]]" in out
        assert "40%" in out and "60%" in out
        assert "█" in out

    def test_empty_classes_listed(self):
        counts = FibreCounts(Partition((2, 1)), 2, 1, ((T((1, 2), (3,)), 0), (T((1, 3), (2,)), 1)))
        out = render_fibre(counts)
        assert "1 empty class" in out
        assert "1 flag\n" in out


class TestRenderCampaign:
    def test_empty(self):
        assert render_campaign([]) == "springstack: no claims verified.\n"

    def test_rows_and_failures(self):
        reports = [
            ClaimReport("lem-closure", "out-of-scope"),
            ClaimReport("lem-codim", "exhaustive", instances=12),
            ClaimReport("thm-stack", "exhaustive", instances=30,
                        counterexamples=[{"got": "[[1,2]]"}], violations=2),
        ]
        out = render_campaign(reports)
        assert "1 passed, 1 failed, 1 out of scope" in out
        assert "thm-stack: 2 violations" in out
        assert "{'got': '[[1,2]]'}" in out
        assert "Seconds" not in out

    def test_timings_column(self):
        out = render_campaign([ClaimReport("lem-codim", "exhaustive", wall_time_s=1.5)], timings=True)
        assert "Seconds" in out
        assert "1.50" in out
