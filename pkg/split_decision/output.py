"""
Writers for experiment artifacts: results, curves, pairwise tables and the manifest.
"""

import json
import logging
import os
from typing import Dict, List, Optional

import pandas as pd

from split_decision.exceptions import MetricUnavailableException
from split_decision.metrics import METRICS, agent_curves
from split_decision.models.pairwise_matrix import PairwiseMatrix
from split_decision.models.run_result import RunResult

RESULTS_COLUMNS = ["agent", "scenario", "repeat", "seed", "final_reward"]
CURVES_COLUMNS = ["agent", "step", "metric", "mean", "se"]
PAIRWISE_COLUMNS = ["agent_i", "agent_j", "wins_i", "wins_j", "ties"]
AVERAGE_WINS_COLUMNS = ["agent", "average_wins"]

MANIFEST_FILE = "manifest.json"
CONFIG_FILE = "config.json"


def read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def read_results(path: str) -> pd.DataFrame:
    """
    Reads a results.csv with exact float parsing.
    """
    return pd.read_csv(path, float_precision="round_trip")


class OutputWriter:
    """
    Writes the artifacts of one experiment into an output directory.

    Every written path is remembered so a failed run can remove its partial outputs.
    """

    def __init__(self, out_dir: str, formats: Optional[List[str]] = None, logger: Optional[logging.Logger] = None):
        """
        Initialize a new instance of the OutputWriter class.

        Args:
            out_dir (str): The output directory, created when missing.
            formats (list, optional): Any of "csv", "json"; defaults to csv.
            logger (logging.Logger, optional): The logger.
        """
        self._out_dir = out_dir
        self._formats = list(formats or ["csv"])
        self._logger = logger
        self._created_dir = not os.path.isdir(out_dir)
        self.written: List[str] = []

        os.makedirs(out_dir, exist_ok=True)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is not None:
            self.remove_partial()

    def path(self, name: str) -> str:
        return os.path.join(self._out_dir, name)

    def _write_text(self, name: str, text: str):
        path = self.path(name)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        self.written.append(path)
        if self._logger:
            self._logger.info(f"Wrote {path}")

    def _write_json(self, name: str, data):
        self._write_text(name, json.dumps(data, indent=2) + "\n")

    def write_table(self, stem: str, frame: pd.DataFrame):
        """
        Writes a table in every configured format.
        """
        if "csv" in self._formats:
            self._write_text(f"{stem}.csv", frame.to_csv(index=False, lineterminator="\n"))
        if "json" in self._formats:
            self._write_json(f"{stem}.json", frame.to_dict(orient="records"))

    def write_config(self, config_dict: dict):
        self._write_json(CONFIG_FILE, config_dict)

    def write_results(self, results: List[RunResult]):
        frame = pd.DataFrame([r.to_row() for r in results], columns=RESULTS_COLUMNS)
        self.write_table("results", frame)

    def write_curves(self, results: List[RunResult], agents: List[str]):
        """
        Writes every metric available for each agent; unavailable metrics are skipped.
        """
        frames = []
        for agent in agents:
            runs = [r for r in results if r.agent == agent]
            for metric in METRICS:
                try:
                    frames.extend(curve.to_frame() for curve in agent_curves(runs, metric))
                except MetricUnavailableException:
                    continue
        frame = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=CURVES_COLUMNS)
        self.write_table("curves", frame[CURVES_COLUMNS])

    def write_pairwise(self, matrix: PairwiseMatrix):
        self.write_table("pairwise", pd.DataFrame(matrix.to_rows(), columns=PAIRWISE_COLUMNS))

    def write_average_wins(self, averages: Dict[str, float]):
        rows = [{"agent": agent, "average_wins": value} for agent, value in averages.items()]
        self.write_table("average_wins", pd.DataFrame(rows, columns=AVERAGE_WINS_COLUMNS))

    def write_manifest(self, manifest: dict):
        self._write_json(MANIFEST_FILE, manifest)

    def remove_partial(self):
        """
        Deletes every file written so far, and the output directory if this writer created it empty.
        """
        for path in self.written:
            if os.path.exists(path):
                os.remove(path)
        self.written = []
        if self._created_dir and os.path.isdir(self._out_dir) and not os.listdir(self._out_dir):
            os.rmdir(self._out_dir)
        if self._logger:
            self._logger.warning(f"Removed partial outputs from {self._out_dir}")


def build_manifest(runner, version: str) -> dict:
    """
    Everything needed to replay any cell of an experiment.

    Args:
        runner (ExperimentRunner): The runner that produced the results.
        version (str): The package version.

    Returns:
        dict: Resolved config, version, scenarios, per-cell seeds and stationarity events.
    """
    return {
        "tool": "split-decision",
        "version": version,
        "config": runner.config.to_dict(),
        "scenarios": [None if s is None else s.to_dict() for s in runner.scenarios],
        "cells": runner.cell_seeds(),
        "events": runner.event_sequences(),
    }
