import json

import pandas as pd
import pytest

from split_decision.cli import build_parser, main, parse_config
from split_decision.models.experiment_config import SEED_ENV_VAR

RUN_ARGS = ["--task", "mab", "--agents", "TS,b-HBTS,UCB", "--scenarios", "2", "--repeats", "2",
            "--horizon", "20", "--seed", "3", "--no-progress"]


def parse(*argv):
    return parse_config(build_parser().parse_args(["run", *argv]))


def write_config(path, section):
    path.write_text(json.dumps({"Experiment": section}))
    return str(path)


class TestConfigResolution:

    def test_flag_beats_file(self, tmp_path):
        config_file = write_config(tmp_path / "config.json", {"Seed": 7, "Task": "mdp"})
        config = parse("--config", config_file, "--seed", "42")
        assert config.seed == 42
        assert config.task == "mdp"

    def test_file_beats_environment(self, tmp_path, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "11")
        assert parse("--config", write_config(tmp_path / "config.json", {"Seed": 7})).seed == 7

    def test_environment_fallback(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "11")
        assert parse().seed == 11

    def test_task_defaults(self):
        config = parse("--task", "igt")
        assert (config.scheme, config.repeats, config.horizon) == (1, 200, 500)

    def test_agent_options_from_file(self, tmp_path):
        config_file = write_config(tmp_path / "config.json", {"AgentOptions": {"Epsilon": 0.1}})
        assert parse("--config", config_file, "--jitter", "off").agent_options.epsilon == 0.1
        assert parse("--config", config_file, "--jitter", "off").agent_options.jitter is False


class TestExitCodes:

    def test_unknown_agent(self, tmp_path):
        assert main(["run", "--agents", "Bogus", "--out", str(tmp_path / "out")]) == 3

    def test_invalid_enum(self, tmp_path):
        assert main(["run", "--task", "chess", "--out", str(tmp_path / "out")]) == 4
        assert main(["run", "--task", "igt", "--scheme", "3", "--out", str(tmp_path / "out")]) == 4

    def test_missing_config_file(self, tmp_path):
        assert main(["run", "--config", str(tmp_path / "absent.json")]) == 5

    def test_invalid_value(self, tmp_path):
        assert main(["run", "--horizon", "0", "--out", str(tmp_path / "out")]) == 2

    def test_unknown_config_key(self, tmp_path):
        config_file = write_config(tmp_path / "config.json", {"Colour": "blue"})
        assert main(["run", "--config", config_file]) == 2

    def test_incompatible_agent(self, tmp_path):
        assert main(["run", "--task", "pacman", "--agents", "b-HBTS", "--out", str(tmp_path / "out")]) == 2


class TestRunCommand:

    def test_writes_artifacts(self, tmp_path):
        out = tmp_path / "out"
        assert main(["run", *RUN_ARGS, "--out", str(out)]) == 0

        results = pd.read_csv(out / "results.csv")
        assert list(results.columns) == ["agent", "scenario", "repeat", "seed", "final_reward"]
        assert len(results) == 12

        pairwise = pd.read_csv(out / "pairwise.csv")
        assert len(pairwise) == 3
        assert set(pd.read_csv(out / "average_wins.csv")["agent"]) == {"TS", "b-HBTS", "UCB"}

        curves = pd.read_csv(out / "curves.csv")
        assert set(curves["metric"]) == {"cumulative_reward", "better_action", "stream_positive", "stream_negative"}
        assert set(curves[curves["metric"] == "stream_positive"]["agent"]) == {"b-HBTS"}

        manifest = json.loads((out / "manifest.json").read_text())
        assert len(manifest["cells"]) == 12
        assert len(manifest["scenarios"]) == 2
        assert manifest["events"] == []

    def test_runs_are_byte_identical(self, tmp_path):
        out = tmp_path / "out"
        files = ("results.csv", "pairwise.csv", "manifest.json")
        assert main(["run", *RUN_ARGS, "--out", str(out)]) == 0
        first = {name: (out / name).read_bytes() for name in files}
        assert main(["run", *RUN_ARGS, "--out", str(out)]) == 0
        assert first == {name: (out / name).read_bytes() for name in files}

    def test_json_format(self, tmp_path):
        out = tmp_path / "out"
        assert main(["run", *RUN_ARGS, "--format", "csv,json", "--out", str(out)]) == 0
        assert len(json.loads((out / "results.json").read_text())) == 12
        assert (out / "results.csv").exists()

    def test_flipping_events_recorded(self, tmp_path):
        out = tmp_path / "out"
        argv = ["run", "--task", "pacman", "--agents", "SQL", "--repeats", "1", "--horizon", "12",
                "--stationarity", "flipping", "--batch-size", "5", "--no-progress", "--out", str(out)]
        assert main(argv) == 0
        events = json.loads((out / "manifest.json").read_text())["events"]
        assert len(events) == 1
        assert [e["batch"] for e in events[0]["events"]] == [0, 1, 2]

    def test_failure_removes_partial_outputs(self, tmp_path, monkeypatch):
        def broken(*args, **kwargs):
            raise RuntimeError("boom")

        monkeypatch.setattr("split_decision.cli.pairwise_wins", broken)
        out = tmp_path / "out"
        assert main(["run", *RUN_ARGS, "--out", str(out)]) == 1
        assert not out.exists()


class TestReplay:

    def test_replays_a_cell(self, tmp_path, capsys):
        out = tmp_path / "out"
        assert main(["run", *RUN_ARGS, "--out", str(out)]) == 0
        capsys.readouterr()

        argv = ["replay", str(out / "manifest.json"), "--scenario", "1", "--agent", "b-HBTS", "--repeat", "1"]
        assert main(argv) == 0
        line = capsys.readouterr().out.strip()
        assert line.startswith("b-HBTS,1,1,3,")

        results = pd.read_csv(out / "results.csv", float_precision="round_trip")
        recorded = results[(results["agent"] == "b-HBTS") & (results["scenario"] == 1) & (results["repeat"] == 1)]
        assert float(line.split(",")[-1]) == recorded["final_reward"].iloc[0]

    def test_tampered_results_fail(self, tmp_path):
        out = tmp_path / "out"
        assert main(["run", *RUN_ARGS, "--out", str(out)]) == 0
        results = pd.read_csv(out / "results.csv")
        results["final_reward"] += 1.0
        results.to_csv(out / "results.csv", index=False)
        assert main(["replay", str(out / "manifest.json")]) == 1

    def test_missing_manifest(self, tmp_path):
        assert main(["replay", str(tmp_path / "manifest.json")]) == 5


def test_list_agents(capsys):
    assert main(["list-agents"]) == 0
    text = capsys.readouterr().out
    pd_line = next(line for line in text.splitlines() if line.strip().startswith("b-PD "))
    assert "(0.5, 1, 0.5, 100)" in pd_line
    for pool in ("MAB pool:", "CB pool:", "RL pool:"):
        block = text.split(pool)[1].split("baselines:")[0]
        assert len([line for line in block.splitlines() if line.strip()]) == 10
    assert "Random" in text


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert "split-decision" in capsys.readouterr().out
