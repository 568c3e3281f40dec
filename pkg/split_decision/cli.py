"""
Command-line entry point: run experiments, list agents and replay single cells.
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from split_decision import __version__
from split_decision.agents.factory import list_agents
from split_decision.exceptions import (
    ConfigFileNotFoundException,
    ConfigurationException,
    SplitDecisionException,
)
from split_decision.metrics import average_wins, pairwise_wins
from split_decision.models.experiment_config import ExperimentConfig
from split_decision.output import MANIFEST_FILE, OutputWriter, build_manifest, read_json, read_results
from split_decision.runner import ExperimentRunner, cell_streams

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger("split_decision")


def _on_off(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("on", "true", "yes", "1"):
        return True
    if lowered in ("off", "false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected on or off, got {value!r}")


def _csv_list(value: str) -> List[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="split-decision",
        description="Simulate split reward-processing agents and compare them pairwise.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an experiment and write its artifacts")
    run.add_argument("--config", help="JSON configuration file")
    run.add_argument("--task", help="mab, mdp, igt or pacman")
    run.add_argument("--agents", type=_csv_list, help="comma-separated agent spec strings")
    run.add_argument("--scenarios", type=int)
    run.add_argument("--repeats", type=int)
    run.add_argument("--horizon", type=int, help="episodes per run")
    run.add_argument("--seed", type=int, help="master seed (falls back to $SPLIT_DECISION_SEED)")
    run.add_argument("--scheme", type=int, help="Iowa Gambling Task payoff scheme, 1 or 2")
    run.add_argument("--stationarity", help="stationary, muting, scaling or flipping")
    run.add_argument("--batch-size", dest="batch_size", type=int, help="episodes per stationarity batch")
    run.add_argument("--jitter", type=_on_off, help="profile parameter jitter, on or off")
    run.add_argument("--jobs", type=int, help="worker processes")
    run.add_argument("--out", help="output directory")
    run.add_argument("--format", dest="formats", type=_csv_list, help="csv, json or csv,json")
    run.add_argument("--no-progress", dest="progress", action="store_false", help="hide the progress bar")

    commands.add_parser("list-agents", help="print every agent spec string")

    replay = commands.add_parser("replay", help="re-run one cell of a finished experiment")
    replay.add_argument("manifest", help="manifest.json of the experiment")
    replay.add_argument("--scenario", type=int, default=0)
    replay.add_argument("--agent", help="agent spec string; defaults to the first agent")
    replay.add_argument("--repeat", type=int, default=0)

    return parser


def load_config_file(path: str) -> dict:
    """
    Reads a JSON configuration file; settings may sit under an "Experiment" section.

    Raises:
        ConfigFileNotFoundException: When the file does not exist.
        ConfigurationException: When the file is not a JSON object.
    """
    if not os.path.isfile(path):
        raise ConfigFileNotFoundException(f"Configuration file not found: {path}", key="config")
    try:
        data = read_json(path)
    except json.JSONDecodeError as ex:
        raise ConfigurationException(f"Configuration file {path} is not valid JSON: {ex}", key="config",
                                     inner_exception=ex)
    if not isinstance(data, dict):
        raise ConfigurationException(f"Configuration file {path} must hold a JSON object", key="config")
    return data.get("Experiment", data)


def parse_config(args: argparse.Namespace) -> ExperimentConfig:
    """
    Resolves the experiment configuration: flags over file over SPLIT_DECISION_SEED over defaults.

    Raises:
        ConfigurationException: When a value is missing or invalid.
    """
    data = load_config_file(args.config) if args.config else {}
    overrides = {
        key: getattr(args, key)
        for key in ("task", "agents", "scenarios", "repeats", "horizon", "seed", "scheme",
                    "stationarity", "batch_size", "jitter", "jobs", "out", "formats")
    }
    config = ExperimentConfig.from_dict(data, overrides)
    config.validate()
    return config


def run_command(config: ExperimentConfig, progress: bool = True) -> int:
    """
    Runs the experiment and writes results, curves, pairwise tables, the config echo and the manifest.
    """
    with ExperimentRunner(config, logger) as runner:
        with OutputWriter(config.out, config.formats, logger) as writer:
            writer.write_config(config.to_dict())
            results = runner.run(progress=progress)
            writer.write_results(results)
            writer.write_curves(results, config.agents)
            matrix = pairwise_wins(results, config.agents)
            writer.write_pairwise(matrix)
            writer.write_average_wins(average_wins(matrix))
            writer.write_manifest(build_manifest(runner, __version__))

    logger.info(f"Finished {len(results)} runs into {config.out}")
    return 0


def replay_command(manifest_path: str, scenario: int, agent: Optional[str], repeat: int) -> int:
    """
    Re-runs one cell from a manifest and checks it against the recorded results.

    Returns:
        int: 0 when the replay reproduces the recorded cell, 1 otherwise.
    """
    if not os.path.isfile(manifest_path):
        raise ConfigFileNotFoundException(f"Manifest not found: {manifest_path}", key="manifest")

    manifest = read_json(manifest_path)
    config = ExperimentConfig.from_dict(manifest["config"])
    agent = agent or config.agents[0]

    with ExperimentRunner(config, logger) as runner:
        recorded_scenarios = manifest.get("scenarios", [])
        generated = [None if s is None else s.to_dict() for s in runner.scenarios]
        if recorded_scenarios and recorded_scenarios != generated:
            logger.error("Regenerated scenarios differ from the manifest")
            return 1

        result = runner.run_cell(scenario, agent, repeat)

    expected_streams = cell_streams(scenario, repeat, agent)
    recorded = [c for c in manifest.get("cells", [])
                if (c["scenario"], c["agent"], c["repeat"]) == (scenario, agent, repeat)]
    if recorded and recorded[0]["agent_stream"] != expected_streams["agent_stream"]:
        logger.error("Stream ids of the cell differ from the manifest")
        return 1

    print(f"{result.agent},{result.scenario},{result.repeat},{result.seed},{result.final_reward!r}")

    results_path = os.path.join(os.path.dirname(os.path.abspath(manifest_path)), "results.csv")
    if not os.path.isfile(results_path):
        logger.info("No results.csv next to the manifest; nothing to verify against")
        return 0

    frame = read_results(results_path)
    row = frame[(frame["agent"] == agent) & (frame["scenario"] == scenario) & (frame["repeat"] == repeat)]
    if row.empty:
        logger.error(f"results.csv has no row for cell ({scenario}, {agent}, {repeat})")
        return 1

    recorded_reward = float(row["final_reward"].iloc[0])
    if recorded_reward != result.final_reward:
        logger.error(f"Replay gave {result.final_reward!r}, results.csv records {recorded_reward!r}")
        return 1

    logger.info(f"Replay of cell ({scenario}, {agent}, {repeat}) matches results.csv")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs the command line.

    Returns:
        int: 0 on success, 1 on failure, the configuration error's exit code for invalid configuration.
    """
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)]
    )

    try:
        if args.command == "list-agents":
            sys.stdout.write(list_agents())
            return 0

        if args.command == "replay":
            return replay_command(args.manifest, args.scenario, args.agent, args.repeat)

        config = parse_config(args)
        logger.info(f"Resolved configuration: task={config.task}, agents={','.join(config.agents)}, seed={config.seed}")
        return run_command(config, progress=args.progress)
    except ConfigurationException as ex:
        logger.error(f"Invalid configuration ({ex.key}): {ex}")
        return ex.exit_code
    except SplitDecisionException as ex:
        logger.error(f"Error: {ex}")
        return 1
    except Exception as ex:
        logger.error(f"Error: {ex}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
