"""Tests for the rsc command line."""

import json
from unittest.mock import Mock, patch

import pytest
from mpmath import mp, mpf

from rsc.cli import main
from rsc.cli.main import COMMANDS
from rsc.pipeline import GateResult
from rsc.sieve import read_checkpoints, sieve_f
from rsc.singular import TSeries, TSeriesMethod


def _run(argv):
    """main() returning the exit status."""
    try:
        main(argv)
    except SystemExit as e:
        return e.code
    return 0


def _unit_series():
    with mp.workdps(30):
        c = (mpf(1),) + (mpf(0),) * 9
    return TSeries(c=c, method=TSeriesMethod.ACCELERATED, E=16, prime_cutoff=1000, tail_bound=0.0, precision_digits=30)


class TestCount:
    """rsc count."""

    def test_cyclic(self, capsys):
        assert _run(["count", "--cyclic", "2", "2", "2"]) == 0
        assert "c(2, 2, 2) = 8" in capsys.readouterr().out

    def test_trivial_group(self, capsys):
        assert _run(["count", "--cyclic", "1", "1", "1"]) == 0
        assert "= 1" in capsys.readouterr().out

    def test_subgroups_with_oracle(self, capsys):
        assert _run(["count", "--subgroups", "4", "2", "--verify"]) == 0
        out = capsys.readouterr().out
        assert "s(4, 2) = 8" in out
        assert "oracle agrees: 8" in out

    def test_cyclic_with_oracle(self, capsys):
        assert _run(["count", "--cyclic", "12", "18", "30", "--verify"]) == 0
        assert "oracle agrees" in capsys.readouterr().out

    def test_json_output(self, tmp_path):
        path = tmp_path / "count.json"
        assert _run(["count", "--cyclic", "2", "4", "-o", str(path)]) == 0
        data = json.loads(path.read_text())
        assert data["command"] == "count"
        assert data["results"]["value"] == "6"
        assert len(data["content_hash"]) == 64

    @pytest.mark.parametrize(
        "argv",
        [
            ["count", "--cyclic", "0", "2"],
            ["count", "--cyclic", "-3"],
            ["count", "--cyclic", "1", "2", "3", "4"],
            ["count", "--subgroups", "4"],
            ["count"],
            ["count", "--cyclic", "2", "--subgroups", "2", "2"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        assert _run(argv) == 2
        assert "❌ [cli]" in capsys.readouterr().err


class TestSieveCommand:
    """rsc sieve."""

    def test_json_to_stdout(self, capsys):
        assert _run(["sieve", "--x-max", "4"]) == 0
        captured = capsys.readouterr()
        data = json.loads(captured.out)
        assert data["results"]["sieve"]["D"] == "34"
        assert data["config"]["x_max"] == 4
        assert "D(4) = 34" in captured.err

    def test_csv(self, tmp_path):
        path = tmp_path / "f.csv"
        assert _run(["sieve", "--x-max", "10", "--format", "csv", "--output", str(path)]) == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "k,f,D"
        assert lines[4] == "4,21,34"
        assert len(lines) == 11

    def test_checkpoint_file(self, tmp_path, capsys):
        path = tmp_path / "run" / "sieve.ckpt"
        assert _run(["sieve", "--x-max", "100", "--checkpoints", str(path)]) == 0
        checkpoints = read_checkpoints(path)
        assert [cp.x for cp in checkpoints] == [1, 2, 4, 8, 10, 16, 32, 64, 100]
        table = sieve_f(100)
        assert all(cp.D == table.D_at(cp.x) for cp in checkpoints)
        assert checkpoints[2].D == 34
        captured = capsys.readouterr()
        assert "9 checkpoints written to" in captured.err
        assert json.loads(captured.out)["config"].get("checkpoints_path") is None

    def test_verify(self, tmp_path, capsys):
        path = tmp_path / "sieve.json"
        assert _run(["sieve", "--x-max", "5000", "--verify", "-o", str(path)]) == 0
        data = json.loads(path.read_text())
        assert data["passed"] is True
        assert {g["name"] for g in data["gates"]} == {"small_values", "sieve_vs_direct", "dirichlet_identity"}
        assert "✅ small_values" in capsys.readouterr().out

    def test_threads_do_not_change_output(self, tmp_path):
        texts = []
        for threads in ("1", "2"):
            path = tmp_path / f"t{threads}.json"
            assert _run(["sieve", "--x-max", "5000", "--block-size", "1024", "--threads", threads, "-o", str(path)]) == 0
            texts.append(path.read_bytes())
        assert texts[0] == texts[1]

    def test_environment_override(self, capsys):
        with patch.dict("os.environ", {"RSC_X_MAX": "4"}):
            assert _run(["sieve"]) == 0
        assert json.loads(capsys.readouterr().out)["config"]["x_max"] == 4

    def test_failed_gate_exits_1(self, tmp_path, capsys):
        path = tmp_path / "sieve.json"
        failing = GateResult(name="small_values", passed=False, measured="[0, 0, 0]")
        with patch("rsc.cli.commands.compute.gates.gate_small_values", return_value=failing):
            assert _run(["sieve", "--x-max", "100", "--verify", "-o", str(path)]) == 1
        assert json.loads(path.read_text())["passed"] is False
        assert "❌ [pipeline]" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "argv",
        [
            ["sieve", "--x-max", "0"],
            ["sieve", "--x-max", "100", "--format", "csv"],
            ["tconst", "--truncation", "8"],
            ["mainterm", "--precision-digits", "5"],
        ],
    )
    def test_invalid_configuration(self, argv, capsys):
        assert _run(argv) == 2
        assert "❌ [config]" in capsys.readouterr().err


class TestAnalysisCommands:
    """mainterm, delta and meansquare with a unit T-series."""

    @patch("rsc.cli.commands.compute.compute_t_series")
    def test_mainterm(self, mock_series, tmp_path):
        mock_series.return_value = _unit_series()
        path = tmp_path / "main.json"
        assert _run(["mainterm", "--precision-digits", "30", "--verify", "-o", str(path)]) == 0
        data = json.loads(path.read_text())
        assert len(data["results"]["main_term"]["A"]) == 10
        assert data["passed"] is True

    @patch("rsc.cli.commands.compute.compute_t_series")
    def test_delta_csv(self, mock_series, tmp_path):
        mock_series.return_value = _unit_series()
        path = tmp_path / "delta.csv"
        assert _run(["delta", "--x-max", "4096", "--precision-digits", "30", "--format", "csv", "-o", str(path)]) == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "x,D,main,delta"
        assert lines[-1].startswith("4096,")

    @patch("rsc.cli.commands.compute.compute_t_series")
    def test_meansquare(self, mock_series, tmp_path):
        mock_series.return_value = _unit_series()
        path = tmp_path / "m.csv"
        argv = ["meansquare", "--x-max", "4096", "--precision-digits", "30", "--format", "csv", "-o", str(path), "--verify"]
        assert _run(argv) == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "T,M,alpha_partial"
        assert lines[1] == "1,0.0,"
        assert lines[-1].startswith("4096,")


class TestMain:
    """Dispatch and error mapping."""

    def test_no_command(self, capsys):
        assert _run([]) == 2
        assert "usage" in capsys.readouterr().out

    def test_keyboard_interrupt(self, capsys):
        with patch.dict(COMMANDS, {"sieve": Mock(side_effect=KeyboardInterrupt)}):
            assert _run(["sieve"]) == 1
        assert "Operation cancelled by user" in capsys.readouterr().out

    def test_unexpected_error(self, capsys):
        with patch.dict(COMMANDS, {"sieve": Mock(side_effect=RuntimeError("boom"))}):
            assert _run(["sieve"]) == 1
        assert "❌ Error: boom" in capsys.readouterr().err


@pytest.mark.slow
class TestVerifyCommand:
    """rsc verify at smoke-test scale."""

    def test_smoke_run_with_checkpoints(self, tmp_path, capsys):
        report, ckpt = tmp_path / "report.json", tmp_path / "d.ckpt"
        argv = ["verify", "--x-max", "10000", "--prime-cutoff", "100000", "--checkpoints", str(ckpt), "-o", str(report)]
        assert _run(argv) == 0
        data = json.loads(report.read_text())
        assert data["passed"] is True
        last = read_checkpoints(ckpt)[-1]
        assert last.x == 10000
        assert str(last.D) == data["results"]["sieve"]["D"]
        assert "checkpoints written to" in capsys.readouterr().out
