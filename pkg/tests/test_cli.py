"""Tests for the springstack CLI."""

from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from springstack import tableaux
from springstack.cli import EXIT_CLAIM_FAILED, EXIT_OK, EXIT_USAGE, main
from springstack.reports import ReportLedger


def _write_json(tmp_path: Path, name: str, data: object) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def _run_json(capsys, argv: list[str]) -> tuple[int, dict]:
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCLIStack:
    def test_stack_text(self, tmp_path, capsys):
        path = _write_json(tmp_path, "tuple.json", [[[1, 3], [2]], [[1], [2]]])
        assert main(["stack", "--levi", "2,1;1,1", "--tableaux", path]) == EXIT_OK
        out = capsys.readouterr().out
        assert "stk = [[1,3,4],[2,5]]" in out
        assert "|1|3|4|" in out

    def test_stack_json(self, tmp_path, capsys, example_tableaux):
        path = _write_json(tmp_path, "tuple.json", [t.to_json() for t in example_tableaux])
        code, data = _run_json(capsys, ["stack", "--levi", "3,3;2,2,1;1,1,1,1", "--lambda", "6,5,4", "--tableaux", path])
        assert code == EXIT_OK
        assert data["stacked"] == [[1, 3, 4, 7, 9, 12], [2, 5, 6, 8, 11, 13], [10, 14], [15]]
        assert data["levi"]["levi_shape"] == [6, 5, 4]

    def test_single_block_accepts_a_bare_tableau(self, tmp_path, capsys):
        path = _write_json(tmp_path, "one.json", [[1, 3, 4], [2, 5]])
        code, data = _run_json(capsys, ["stack", "--levi", "3,2", "--tableaux", path])
        assert code == EXIT_OK
        assert data["stacked"] == [[1, 3, 4], [2, 5]]

    def test_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin", io.StringIO("[[[1]], [[1, 2]]]"))
        code, data = _run_json(capsys, ["stack", "--levi", "1;2", "--tableaux", "-"])
        assert code == EXIT_OK
        assert data["stacked"] == [[1, 2, 3]]

    def test_shape_mismatch_is_usage_error(self, tmp_path, capsys):
        path = _write_json(tmp_path, "tuple.json", [[[1], [2]], [[1], [2]]])
        assert main(["stack", "--levi", "2,1;1,1", "--tableaux", path]) == EXIT_USAGE
        assert "[springstack] error:" in capsys.readouterr().err

    def test_not_json(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("[[1,", encoding="utf-8")
        assert main(["stack", "--levi", "2", "--tableaux", str(path)]) == EXIT_USAGE
        assert "not valid JSON" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["stack", "--levi", "2", "--tableaux", str(tmp_path / "nope.json")]) == EXIT_USAGE


class TestCLIInduce:
    def test_induce(self, capsys):
        code, data = _run_json(capsys, ["induce", "--levi", "3,3;2,2,1;1,1,1,1", "--lambda", "6,5,4"])
        assert code == EXIT_OK
        assert data["mu_sigma"] == [6, 6, 2, 1]
        assert data["oracle"] == [6, 6, 2, 1]
        assert data["agree"] is True

    def test_induce_text(self, capsys):
        assert main(["induce", "--levi", "4,2,1;3,2;3,3,2,2,1,1"]) == EXIT_OK
        assert "(10,7,3,2,1,1)" in capsys.readouterr().out

    def test_bad_lambda(self, capsys):
        assert main(["induce", "--levi", "3,3;2,2,1", "--lambda", "6,4"]) == EXIT_USAGE
        assert "expected λ_2 = 4" in capsys.readouterr().err


class TestCLIEnumerate:
    def test_enumerate(self, capsys):
        code, data = _run_json(capsys, ["enumerate", "--shape", "3,2"])
        assert code == EXIT_OK
        assert data["count"] == 5
        assert data["tableaux"][0] == [[1, 2, 3], [4, 5]]
        assert data["tableaux"][-1] == [[1, 3, 5], [2, 4]]

    def test_enumerate_text(self, capsys):
        assert main(["enumerate", "--shape", "2,1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "2 tableaux" in out


class TestCLIEnumerateFibre:
    def test_zero(self, capsys):
        code, data = _run_json(capsys, ["enumerate-fibre", "--e", "zero", "--n", "2", "--p", "2"])
        assert code == EXIT_OK
        assert data == {"shape": [1, 1], "p": 2, "total_flags": 3,
                        "classes": [{"tableau": [[1], [2]], "count": 3}]}

    def test_regular(self, capsys):
        code, data = _run_json(capsys, ["enumerate-fibre", "--e", "regular", "--n", "4"])
        assert code == EXIT_OK
        assert data["total_flags"] == 1

    def test_jordan(self, capsys):
        code, data = _run_json(capsys, ["enumerate-fibre", "--jordan", "2,1", "--p", "3"])
        assert code == EXIT_OK
        assert data["shape"] == [2, 1]
        assert data["p"] == 3
        assert [c["tableau"] for c in data["classes"]] == [[[1, 2], [3]], [[1, 3], [2]]]

    def test_matrix_file(self, tmp_path, capsys):
        path = _write_json(tmp_path, "e.json", {"rows": [[0, 1], [0, 0]]})
        code, data = _run_json(capsys, ["enumerate-fibre", "--matrix", path])
        assert code == EXIT_OK
        assert data["shape"] == [2]
        assert data["total_flags"] == 1

    def test_not_nilpotent(self, tmp_path, capsys):
        path = _write_json(tmp_path, "e.json", {"p": 2, "rows": [[1, 0], [0, 0]]})
        assert main(["enumerate-fibre", "--matrix", path]) == EXIT_USAGE
        assert "not nilpotent" in capsys.readouterr().err

    def test_needs_n(self, capsys):
        assert main(["enumerate-fibre", "--e", "zero"]) == EXIT_USAGE
        assert "--e zero needs --n" in capsys.readouterr().err

    def test_ceiling(self, capsys):
        assert main(["enumerate-fibre", "--e", "zero", "--n", "6", "--ceiling", "1000"]) == EXIT_USAGE
        assert "ceiling exceeded" in capsys.readouterr().err

    def test_text_output(self, capsys):
        assert main(["enumerate-fibre", "--e", "zero", "--n", "3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "21 flags" in out
        assert "[[1],[2],[3]]" in out


class TestCLIRender:
    def test_render(self, capsys):
        assert main(["render", "--tableau", "[[1,3],[2]]"]) == EXIT_OK
        assert "|1|3|" in capsys.readouterr().out

    def test_render_file_json(self, tmp_path, capsys):
        path = _write_json(tmp_path, "t.json", [[1, 3, 4], [2, 5]])
        code, data = _run_json(capsys, ["render", "--file", path])
        assert code == EXIT_OK
        assert data["column_word"] == [1, 1, 2, 3, 2]
        assert data["shape"] == [3, 2]

    def test_render_invalid(self, capsys):
        assert main(["render", "--tableau", "[[2,1]]"]) == EXIT_USAGE
        assert "row violation" in capsys.readouterr().err

    @pytest.mark.parametrize("rows", ["[[1.9, 2.2], [3.5]]", '[["x"]]', "[[true]]"])
    def test_render_non_integer_entries(self, rows, capsys):
        assert main(["render", "--tableau", rows]) == EXIT_USAGE
        assert "entries violation at row 1, column 1" in capsys.readouterr().err

    def test_render_object_without_tableau(self, tmp_path, capsys):
        path = _write_json(tmp_path, "t.json", {"shape": [2, 1]})
        assert main(["render", "--file", path]) == EXIT_USAGE
        assert "no tableaux" in capsys.readouterr().err

    def test_render_list_of_tableaux(self, tmp_path, capsys):
        path = _write_json(tmp_path, "t.json", [[[1, 2]], [[1], [2]]])
        code, data = _run_json(capsys, ["render", "--file", path])
        assert code == EXIT_OK
        assert [t["tableau"] for t in data["tableaux"]] == [[[1, 2]], [[1], [2]]]


class TestCLIRoundTrip:
    """JSON printed by one command is accepted as input by ``render`` and ``stack``."""

    def test_render_output(self, tmp_path, capsys):
        _, first = _run_json(capsys, ["render", "--tableau", "[[1,3,4],[2,5]]"])
        code, again = _run_json(capsys, ["render", "--file", _write_json(tmp_path, "r.json", first)])
        assert code == EXIT_OK
        assert again == first

    def test_stack_output_renders_the_stacked_tableau(self, tmp_path, capsys):
        tuple_path = _write_json(tmp_path, "tuple.json", [[[1, 3], [2]], [[1], [2]]])
        _, stacked = _run_json(capsys, ["stack", "--levi", "2,1;1,1", "--tableaux", tuple_path])
        code, data = _run_json(capsys, ["render", "--file", _write_json(tmp_path, "s.json", stacked)])
        assert code == EXIT_OK
        assert data["tableau"] == [[1, 3, 4], [2, 5]]
        assert data["shape"] == [3, 2]

    def test_stack_output_restacks(self, tmp_path, capsys):
        tuple_path = _write_json(tmp_path, "tuple.json", [[[1, 3], [2]], [[1], [2]]])
        _, first = _run_json(capsys, ["stack", "--levi", "2,1;1,1", "--tableaux", tuple_path])
        again_path = _write_json(tmp_path, "s.json", first)
        code, again = _run_json(capsys, ["stack", "--levi", "2,1;1,1", "--tableaux", again_path])
        assert code == EXIT_OK
        assert again == first

    def test_enumerate_output(self, tmp_path, capsys):
        _, listing = _run_json(capsys, ["enumerate", "--shape", "3,2"])
        code, data = _run_json(capsys, ["render", "--file", _write_json(tmp_path, "e.json", listing)])
        assert code == EXIT_OK
        assert [t["tableau"] for t in data["tableaux"]] == listing["tableaux"]
        assert len(data["tableaux"]) == 5

    def test_enumerate_fibre_output(self, tmp_path, capsys):
        _, fibre = _run_json(capsys, ["enumerate-fibre", "--jordan", "2,1"])
        code, data = _run_json(capsys, ["render", "--file", _write_json(tmp_path, "f.json", fibre)])
        assert code == EXIT_OK
        assert [t["tableau"] for t in data["tableaux"]] == [c["tableau"] for c in fibre["classes"]]

    def test_multi_render_output(self, tmp_path, capsys):
        _, listing = _run_json(capsys, ["enumerate", "--shape", "2,1"])
        _, first = _run_json(capsys, ["render", "--file", _write_json(tmp_path, "e.json", listing)])
        code, again = _run_json(capsys, ["render", "--file", _write_json(tmp_path, "r.json", first)])
        assert code == EXIT_OK
        assert again == first

    def test_text_render_of_many(self, tmp_path, capsys):
        _, listing = _run_json(capsys, ["enumerate", "--shape", "2,1"])
        assert main(["render", "--file", _write_json(tmp_path, "e.json", listing)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "|1|2|\n" in out and "|1|3|\n" in out


class TestCLIVerify:
    def test_verify_json(self, capsys):
        code, data = _run_json(capsys, ["verify", "--max-n", "2", "--claims", "lem-codim,cor-partitionsigma"])
        assert code == EXIT_OK
        assert data["tool"] == "springstack"
        assert data["summary"] == {"claims": 2, "passed": 2, "failed": 0, "out_of_scope": 0}
        assert [r["claim"] for r in data["reports"]] == ["cor-partitionsigma", "lem-codim"]
        assert "wall_time_s" not in data["reports"][0]

    def test_verify_text(self, capsys):
        assert main(["verify", "--max-n", "2", "--claims", "lem-", "--samples", "5"]) == EXIT_OK
        captured = capsys.readouterr()
        assert "lem-closure" in captured.out
        assert "out of scope" in captured.out
        assert "[springstack] lem-codim: pass" in captured.err

    def test_verify_output_file(self, tmp_path, capsys):
        out = tmp_path / "reports" / "campaign.json"
        code = main(["verify", "--max-n", "2", "--claims", "thm-stack", "--output", str(out), "--timings"])
        assert code == EXIT_OK
        ledger = ReportLedger.load(out)
        (report,) = ledger.reports()
        assert report.claim_id == "thm-stack"
        assert report.status == "pass"
        assert "wall_time_s" in json.loads(out.read_text(encoding="utf-8"))["reports"][0]

    def test_defaults(self, capsys):
        _, data = _run_json(capsys, ["verify", "--claims", "ex-counterexample"])
        assert data["config"]["max_n"] == 5
        assert data["config"]["random_samples"] == 200
        assert data["config"]["partition_max_n"] == 5

    def test_acceptance_preset(self, capsys):
        code, data = _run_json(capsys, ["verify", "--acceptance", "--claims", "ex-counterexample"])
        assert code == EXIT_OK
        cfg = data["config"]
        assert (cfg["max_n"], cfg["partition_max_n"], cfg["random_samples"]) == (8, 10, 1000)
        assert cfg["hyperplane_primes"] == [2, 3]

    def test_acceptance_with_overrides(self, capsys):
        _, data = _run_json(
            capsys, ["verify", "--acceptance", "--max-n", "3", "--samples", "7", "--claims", "ex-counterexample"]
        )
        assert (data["config"]["max_n"], data["config"]["random_samples"]) == (3, 7)
        assert data["config"]["partition_max_n"] == 10

    def test_unknown_claim(self, capsys):
        assert main(["verify", "--claims", "nope"]) == EXIT_USAGE
        assert "unknown claim" in capsys.readouterr().err

    def test_bad_prime(self, capsys):
        assert main(["verify", "--max-n", "2", "--p", "6"]) == EXIT_USAGE

    def test_failing_claim_exits_one(self, monkeypatch, capsys):
        real = tableaux.stack

        def corrupted(d, tabs):
            return real(d, [tableaux.enumerate_standard(t.shape)[0] for t in tabs])

        monkeypatch.setattr(tableaux, "stack", corrupted)
        assert main(["verify", "--max-n", "3", "--claims", "thm-stack"]) == EXIT_CLAIM_FAILED
        assert "thm-stack" in capsys.readouterr().out

    def test_annotate_writes_step_summary(self, tmp_path, monkeypatch, capsys):
        summary = tmp_path / "summary.md"
        monkeypatch.setenv("GITHUB_STEP_SUMMARY", str(summary))
        monkeypatch.delenv("GITHUB_ACTIONS", raising=False)
        assert main(["verify", "--max-n", "2", "--claims", "lem-codim", "--annotate"]) == EXIT_OK
        assert "`lem-codim`" in summary.read_text(encoding="utf-8")


class TestCLIMain:
    def test_no_command_prints_help(self, capsys):
        assert main([]) == EXIT_OK
        assert "springstack" in capsys.readouterr().out

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0
        assert "springstack 0.1.0" in capsys.readouterr().out

    def test_bad_arguments_exit_two(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["enumerate"])
        assert exc_info.value.code == 2
