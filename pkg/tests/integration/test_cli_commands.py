"""Integration tests for dynisched CLI commands."""

from pathlib import Path

import pytest
from typer.testing import CliRunner

from dynisched.cli.app import app
from dynisched.models.trace import read_header, read_trace

runner = CliRunner()

pytestmark = pytest.mark.usefixtures("cli_env")


class TestMainApp:
    def test_help_flag(self) -> None:
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        assert "dynisched" in result.output.lower()

    def test_version_flag(self) -> None:
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert "dynisched version" in result.output

    def test_verbose_flag_accepted(self, trace_file: Path) -> None:
        result = runner.invoke(app, ["-v", "run", str(trace_file)])
        assert result.exit_code == 0


class TestGenCommand:
    def test_prints_trace(self) -> None:
        result = runner.invoke(app, ["gen", "--ops", "20", "--seed", "3"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "# dynisched trace model=uniform seed=3 ops=20"
        assert len(lines) == 21

    def test_writes_identical_files(self, cli_env: Path) -> None:
        for name in ("a.trace", "b.trace"):
            args = ["gen", "--model", "nested", "-n", "200", "-s", "8", "-o", str(cli_env / name)]
            result = runner.invoke(app, args)
            assert result.exit_code == 0
            assert "Wrote 200 operations" in result.output
        first = (cli_env / "a.trace").read_bytes()
        assert first == (cli_env / "b.trace").read_bytes()
        assert len(read_trace(cli_env / "a.trace")) == 200
        assert read_header(cli_env / "a.trace") == {"model": "nested", "seed": "8", "ops": "200"}

    def test_uses_config_defaults(self, cli_env: Path) -> None:
        cfg = cli_env / "gen.yaml"
        cfg.write_text("workload:\n  ops: 5\n  seed: 2\n  mix: '1:0:0'\n")
        result = runner.invoke(app, ["gen", "--config", str(cfg)])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert len(lines) == 6
        assert all(line.startswith("I ") for line in lines[1:])


class TestRunCommand:
    def test_prints_answers(self, trace_file: Path) -> None:
        result = runner.invoke(app, ["run", str(trace_file)])
        assert result.exit_code == 0
        assert result.output.strip() == "3"

    @pytest.mark.parametrize("engine", ["naive", "sqrt", "cuberoot", "deleteonly", "insertonly"])
    def test_single_machine_engines(self, trace_file: Path, engine: str) -> None:
        result = runner.invoke(app, ["run", str(trace_file), "--engine", engine])
        assert result.exit_code == 0
        assert result.output.strip() == "3"

    def test_two_machines(self, trace_file: Path) -> None:
        result = runner.invoke(app, ["run", str(trace_file), "-e", "two"])
        assert result.exit_code == 0
        assert result.output.strip() == "4"

    def test_multi_machines(self, trace_file: Path) -> None:
        result = runner.invoke(app, ["run", str(trace_file), "-e", "multi", "-m", "4"])
        assert result.exit_code == 0
        assert result.output.strip() == "4"

    def test_writes_answers_file(self, trace_file: Path, cli_env: Path) -> None:
        out = cli_env / "answers.txt"
        result = runner.invoke(app, ["run", str(trace_file), "-e", "sqrt", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text() == "3\n"

    def test_stats(self, trace_file: Path) -> None:
        result = runner.invoke(app, ["run", str(trace_file), "-e", "cuberoot", "--stats"])
        assert result.exit_code == 0
        assert "elementary_ops" in result.output
        assert "core_rebuilds" in result.output

    def test_weighted(self, cli_env: Path) -> None:
        trace = cli_env / "w.trace"
        trace.write_text("I 1 0 2 2\nI 2 1 4 5\nI 3 3 5 2\nQ\n")
        result = runner.invoke(app, ["run", str(trace), "--weighted"])
        assert result.exit_code == 0
        assert result.output.strip() == "5"


class TestVerifyCommand:
    def test_pass(self, trace_file: Path) -> None:
        result = runner.invoke(app, ["verify", str(trace_file), "--engine", "cuberoot"])
        assert result.exit_code == 0
        assert "PASS" in result.output

    def test_generated_trace(self, cli_env: Path) -> None:
        trace = cli_env / "g.trace"
        runner.invoke(app, ["gen", "-n", "300", "--coord-range", "100", "--max-length", "20", "-o", str(trace)])
        result = runner.invoke(app, ["verify", str(trace), "-e", "two", "-a", "naive"])
        assert result.exit_code == 0
        assert "PASS" in result.output

    def test_expected_file(self, trace_file: Path, cli_env: Path) -> None:
        good = cli_env / "good.txt"
        good.write_text("3\n")
        bad = cli_env / "bad.txt"
        bad.write_text("4\n")
        assert runner.invoke(app, ["verify", str(trace_file), "-e", "sqrt", "--expected", str(good)]).exit_code == 0
        result = runner.invoke(app, ["verify", str(trace_file), "-e", "sqrt", "--expected", str(bad)])
        assert result.exit_code == 1
        assert "FAIL at query 0: 4 != 3" in result.output


class TestBenchCommand:
    def test_header_only_without_traces(self, cli_env: Path) -> None:
        out = cli_env / "bench.csv"
        result = runner.invoke(app, ["bench", "--out", str(out)])
        assert result.exit_code == 0
        assert "CSV header only" in result.output
        assert out.read_text() == (
            "engine,machines,ops,seed,elementary_ops,rebuild_count,wall_ns,answers_digest\n"
        )

    def test_rows_per_engine(self, trace_file: Path, cli_env: Path) -> None:
        out = cli_env / "bench.csv"
        result = runner.invoke(app, ["bench", str(trace_file), "-e", "naive", "-e", "sqrt", "-o", str(out)])
        assert result.exit_code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 3
        assert lines[1].startswith("naive,1,5,-1,")
        assert lines[2].startswith("sqrt,1,5,-1,")
        assert lines[1].split(",")[-1] == lines[2].split(",")[-1]
        assert "Elementary ops" in result.output
        assert "disagree" not in result.output

    def test_default_output_path(self, trace_file: Path, cli_env: Path) -> None:
        result = runner.invoke(app, ["bench", str(trace_file), "-e", "naive"])
        assert result.exit_code == 0
        assert (cli_env / "bench.csv").exists()

    def test_skips_incompatible_engine(self, trace_file: Path, cli_env: Path) -> None:
        out = cli_env / "bench.csv"
        result = runner.invoke(app, ["bench", str(trace_file), "-e", "two", "-m", "1", "-o", str(out)])
        assert result.exit_code == 0
        assert "Skipping two" in result.output
        assert len(out.read_text().splitlines()) == 1

    def test_parallel_jobs(self, trace_file: Path, cli_env: Path) -> None:
        out = cli_env / "bench.csv"
        args = ["bench", str(trace_file), "-e", "naive", "-e", "sqrt", "-e", "cuberoot", "-j", "2", "-o", str(out)]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        lines = out.read_text().splitlines()
        assert [line.split(",")[0] for line in lines[1:]] == ["naive", "sqrt", "cuberoot"]
        assert len({line.split(",")[-1] for line in lines[1:]}) == 1


class TestReduceCommand:
    def test_pass(self) -> None:
        result = runner.invoke(app, ["reduce", "--ell", "1", "--nodes", "2", "--seed", "0"])
        assert result.exit_code == 0
        assert "PASS" in result.output
        assert "exhaustive" in result.output

    def test_longer_cycles(self) -> None:
        result = runner.invoke(app, ["reduce", "-l", "2", "-n", "2", "-s", "4", "--density", "0.8"])
        assert result.exit_code == 0
        assert "PASS" in result.output

    def test_skips_exhaustive_check_when_too_large(self) -> None:
        result = runner.invoke(app, ["reduce", "--ell", "4", "--nodes", "5", "--density", "0.05"])
        assert result.exit_code == 0
        assert "Exhaustive check skipped" in result.output


class TestConfigCommand:
    def test_show(self) -> None:
        result = runner.invoke(app, ["config"])
        assert result.exit_code == 0
        assert "Engine" in result.output
        assert "naive" in result.output

    def test_check_without_file(self) -> None:
        result = runner.invoke(app, ["config", "--check"])
        assert result.exit_code == 0
        assert "No config file found" in result.output
        assert "Configuration is valid" in result.output

    def test_check_valid_file(self, cli_env: Path) -> None:
        (cli_env / "config.yaml").write_text("engine:\n  name: sqrt\n")
        result = runner.invoke(app, ["config", "--check", "--show"])
        assert result.exit_code == 0
        assert "Configuration is valid" in result.output
        assert "sqrt" in result.output
