"""
Agent interfaces shared by the bandit, contextual and tabular pools.
"""

import math
from dataclasses import dataclass
from typing import Hashable, Optional, Tuple

import numpy as np

from split_decision.models.reward import RewardPair, SplitParams


def argmax_random_tie(values, rng) -> int:
    """
    Index of the maximum, ties broken uniformly at random.

    The stream is only consumed when there is a tie.
    """
    values = np.asarray(values, dtype=float)
    best = np.flatnonzero(values == values.max())
    if len(best) == 1:
        return int(best[0])
    return int(best[rng.integers(len(best))])


class RewardNormalizer:
    """
    Affine map of combined rewards onto [0, 1] using known attainable bounds.

    Rewards outside the bounds are clipped; the bounds already clip the
    supports of unbounded distributions.
    """

    def __init__(self, bounds: Tuple[float, float]):
        """
        Raises:
            ValueError: If the bounds are missing, non-finite or inverted.
        """
        if bounds is None:
            raise ValueError("This agent needs known reward bounds")
        low, high = float(bounds[0]), float(bounds[1])
        if not (math.isfinite(low) and math.isfinite(high)) or low > high:
            raise ValueError(f"Invalid reward bounds: ({low}, {high})")
        self.low, self.high = low, high

    def __call__(self, r: float) -> float:
        if not math.isfinite(r):
            raise ValueError(f"Reward must be finite, got {r!r}")
        if self.high == self.low:
            return 0.5
        return min(max((r - self.low) / (self.high - self.low), 0.0), 1.0)


@dataclass(frozen=True)
class Transition:
    """
    One step of experience for a tabular agent.
    """

    state: Hashable
    action: int
    reward: RewardPair
    next_state: Hashable
    done: bool
    next_legal: int = 0
    next_action: Optional[int] = None


class Agent:
    """
    Common base of every agent.

    Attributes:
        spec (str): The spec string the agent was created from.
        pool (str): "mab", "cb", "rl" or "any".
        params (SplitParams): Split parameters, None for non-split agents.
    """

    pool = "any"
    stateful = False

    def __init__(self, n_actions: int, rng, spec: str = "", params: Optional[SplitParams] = None):
        if n_actions < 1:
            raise ValueError("n_actions must be positive")
        self.n_actions = n_actions
        self._rng = rng
        self.spec = spec
        self.params = params

    @property
    def is_split(self) -> bool:
        return self.params is not None

    def stream_values(self, action: int) -> Optional[Tuple[float, float]]:
        """
        Returns:
            tuple: The (positive, negative) stream estimates of an action, None for non-split agents.
        """
        return None

    def __str__(self):
        suffix = f" {self.params}" if self.params is not None else ""
        return f"{self.spec or type(self).__name__}{suffix}"


class BanditAgent(Agent):
    """
    A stateless agent: select an arm given a context, learn from the arm's reward.
    """

    def select(self, context: np.ndarray) -> int:
        raise NotImplementedError

    def update(self, arm: int, context: np.ndarray, reward: RewardPair):
        raise NotImplementedError


class TabularAgent(Agent):
    """
    A tabular agent acting on state ids.
    """

    pool = "rl"
    stateful = True

    def select(self, state: Hashable, n_legal: int) -> int:
        raise NotImplementedError

    def update(self, transition: Transition):
        raise NotImplementedError
