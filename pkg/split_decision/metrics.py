"""
Evaluation metrics: the pairwise win matrix, average win rates and learning curves.
"""

from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from split_decision.exceptions import MetricUnavailableException, MissingResultsException
from split_decision.models.learning_curve import LearningCurve
from split_decision.models.pairwise_matrix import PairwiseMatrix
from split_decision.models.run_result import RunResult

METRICS = ("cumulative_reward", "better_action", "stream_values")


def _agent_order(results: List[RunResult], agents: Optional[List[str]]) -> List[str]:
    if agents is not None:
        return list(agents)
    return list(dict.fromkeys(r.agent for r in results))


def scenario_means(results: List[RunResult], agents: Optional[List[str]] = None) -> pd.DataFrame:
    """
    Mean final reward over repeats, one row per scenario and one column per agent.

    Raises:
        MissingResultsException: When an agent has no result on some scenario.
    """
    agents = _agent_order(results, agents)
    if not results:
        raise MissingResultsException("No results to compare")

    frame = pd.DataFrame([r.to_row() for r in results])
    table = frame.groupby(["scenario", "agent"])["final_reward"].mean().unstack("agent")

    missing = [agent for agent in agents if agent not in table.columns]
    if missing:
        raise MissingResultsException(f"No results for agent(s): {', '.join(missing)}")

    table = table[agents]
    rows, columns = np.nonzero(table.isna().to_numpy())
    if len(rows):
        raise MissingResultsException(
            f"Agent {table.columns[columns[0]]!r} has no results on scenario {table.index[rows[0]]}")
    return table


def pairwise_wins(results: List[RunResult], agents: Optional[List[str]] = None) -> PairwiseMatrix:
    """
    Counts, per ordered agent pair, the scenarios where one agent's mean final
    reward strictly exceeds the other's. Equal means count as a tie for both.

    Args:
        results (list): RunResults of every (scenario, agent, repeat) cell.
        agents (list, optional): Row order; defaults to first appearance in results.

    Returns:
        PairwiseMatrix: The win and tie counts.

    Raises:
        MissingResultsException: When an agent lacks results on a scenario.
    """
    table = scenario_means(results, agents).to_numpy()
    size = table.shape[1]
    wins = np.zeros((size, size))
    ties = np.zeros((size, size))

    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            wins[i, j] = np.count_nonzero(table[:, i] > table[:, j])
            ties[i, j] = np.count_nonzero(table[:, i] == table[:, j])

    return PairwiseMatrix(_agent_order(results, agents), wins, ties)


def average_wins(matrix: PairwiseMatrix) -> Dict[str, float]:
    """
    Mean over opponents of n_ij / (n_ij + n_ji + ties_ij); a pair with no units scores 0.

    Returns:
        dict: Average win rate per agent, in matrix order.
    """
    averages = {}
    for i, agent in enumerate(matrix.agents):
        rates = []
        for j in range(len(matrix.agents)):
            if i == j:
                continue
            total = matrix.total(i, j)
            rates.append(matrix.wins[i, j] / total if total > 0 else 0.0)
        averages[agent] = float(np.mean(rates)) if rates else 0.0
    return averages


def _curve(agent: str, metric: str, values: np.ndarray) -> LearningCurve:
    runs = values.shape[0]
    mean = values.mean(axis=0)
    se = values.std(axis=0, ddof=1) / np.sqrt(runs) if runs > 1 else np.zeros(values.shape[1])
    return LearningCurve(agent, metric, mean, se, runs)


def agent_curves(runs: List[RunResult], metric: str) -> List[LearningCurve]:
    """
    Learning curves of one agent's runs.

    Args:
        runs (list): RunResults of a single agent, all with the same horizon.
        metric (str): cumulative_reward, better_action or stream_values.

    Returns:
        list: One curve, or two (stream_positive, stream_negative) for stream_values.

    Raises:
        MetricUnavailableException: When the runs do not record the metric.
        ValueError: When the metric is unknown or the runs are empty or ragged.
    """
    if metric not in METRICS:
        raise ValueError(f"Unknown metric {metric!r}; expected one of {METRICS}")
    if not runs:
        raise ValueError("No runs to aggregate")
    if len({len(r.rewards) for r in runs}) != 1:
        raise ValueError("Runs of one agent must share a horizon")

    agent = runs[0].agent

    if metric == "cumulative_reward":
        return [_curve(agent, metric, np.stack([r.cumulative for r in runs]))]

    if metric == "better_action":
        if any(r.better is None for r in runs):
            raise MetricUnavailableException(f"The task of agent {agent!r} has no better action")
        return [_curve(agent, metric, np.stack([r.better for r in runs]).astype(float))]

    if any(r.stream_values is None for r in runs):
        raise MetricUnavailableException(f"Agent {agent!r} does not keep split reward streams")
    values = np.stack([r.stream_values for r in runs])
    return [_curve(agent, "stream_positive", values[:, :, 0]), _curve(agent, "stream_negative", values[:, :, 1])]


def learning_curves(results: List[RunResult], metric: str, agents: Optional[List[str]] = None) -> List[LearningCurve]:
    """
    Mean and standard error of a per-episode metric across every run of each agent.

    Raises:
        MetricUnavailableException: When an agent's runs do not record the metric.
    """
    curves = []
    for agent in _agent_order(results, agents):
        curves.extend(agent_curves([r for r in results if r.agent == agent], metric))
    return curves
