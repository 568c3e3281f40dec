"""
Per-run records produced by the experiment runner.
"""

import math
from typing import List, Optional

import numpy as np


class RunResult:
    """
    The record of one (scenario, agent, repeat) cell.
    """

    def __init__(self, agent, scenario, repeat, seed, rewards, final_reward, choices,
                 better=None, stream_values=None, agent_stream=0, env_stream=0):
        """
        Initialize a new instance of the RunResult class.

        Args:
            agent (str): The agent spec string.
            scenario (int): Scenario index.
            repeat (int): Repeat index.
            seed (int): Master seed of the experiment.
            rewards (array-like): Combined reward of every episode.
            final_reward (float): Final cumulative reward, accumulated by the runner.
            choices (array-like): First decision of every episode (-1 when none was taken).
            better (array-like, optional): Whether each first decision hit a better action.
            stream_values (array-like, optional): Per-episode (positive, negative) stream read-outs.
            agent_stream (int, optional): Stream id of the agent's random stream.
            env_stream (int, optional): Stream id of the environment's random stream.

        Raises:
            ValueError: If final_reward disagrees with the sum of per-episode rewards.
        """
        self.agent = agent
        self.scenario = int(scenario)
        self.repeat = int(repeat)
        self.seed = int(seed)
        self.rewards = np.asarray(rewards, dtype=float)
        self.final_reward = float(final_reward)
        self.choices = np.asarray(choices, dtype=int)
        self.better = None if better is None else np.asarray(better, dtype=bool)
        self.stream_values = None if stream_values is None else np.asarray(stream_values, dtype=float)
        self.agent_stream = int(agent_stream)
        self.env_stream = int(env_stream)

        total = float(np.sum(self.rewards))
        if not math.isclose(total, self.final_reward, rel_tol=1e-9, abs_tol=1e-9):
            raise ValueError(f"Cumulative reward {self.final_reward!r} differs from the episode sum {total!r}")

    @property
    def cell(self):
        return (self.scenario, self.agent, self.repeat)

    @property
    def cumulative(self) -> np.ndarray:
        return np.cumsum(self.rewards)

    def to_row(self):
        """
        Returns:
            dict: The results.csv row of this run.
        """
        return {
            "agent": self.agent,
            "scenario": self.scenario,
            "repeat": self.repeat,
            "seed": self.seed,
            "final_reward": self.final_reward,
        }

    def same_as(self, other: "RunResult") -> bool:
        """
        Checks bit-exact equality of two runs of the same cell.
        """
        def same_optional(a: Optional[np.ndarray], b: Optional[np.ndarray]):
            if a is None or b is None:
                return a is None and b is None
            return np.array_equal(a, b)

        return (self.cell == other.cell
                and self.final_reward == other.final_reward
                and np.array_equal(self.rewards, other.rewards)
                and np.array_equal(self.choices, other.choices)
                and same_optional(self.better, other.better)
                and same_optional(self.stream_values, other.stream_values))

    def __str__(self):
        return f"{self.agent} scenario={self.scenario} repeat={self.repeat} final={self.final_reward:.2f}"


def sort_results(results: List[RunResult], agents: List[str]) -> List[RunResult]:
    """
    Orders results by scenario, agent position and repeat.
    """
    order = {agent: index for index, agent in enumerate(agents)}
    return sorted(results, key=lambda r: (r.scenario, order[r.agent], r.repeat))
