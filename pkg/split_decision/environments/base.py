"""
Episodic environment interface shared by every task.
"""

from typing import FrozenSet, Hashable, Optional, Tuple

from split_decision.models.reward import RewardPair


class Environment:
    """
    An episodic task emitting RewardPair observations.

    Subclasses implement reset() and step(); observations are opaque to the
    runner and are interpreted through state_id(), legal_actions() and the
    environment's context spec.
    """

    name = "environment"
    n_actions = 1
    better_actions: Optional[FrozenSet[int]] = None

    def __init__(self, rng):
        """
        Args:
            rng (RngStream): The environment's own random stream.
        """
        self._rng = rng
        self._done = True

    @property
    def done(self) -> bool:
        return self._done

    def reset(self):
        """
        Starts a new episode.

        Returns:
            The initial observation.
        """
        raise NotImplementedError

    def step(self, action: int) -> Tuple[object, RewardPair, bool]:
        """
        Applies an action.

        Returns:
            tuple: (observation, RewardPair, done).
        """
        raise NotImplementedError

    def legal_actions(self, observation) -> int:
        """
        Returns:
            int: Number of legal actions at the observation; actions are 0..n-1.
        """
        return self.n_actions

    def state_id(self, observation) -> Hashable:
        """
        Returns:
            Hashable: Tabular state id of the observation.
        """
        return observation

    def reward_bounds(self) -> Optional[Tuple[float, float]]:
        """
        Returns:
            tuple: (low, high) attainable combined reward of one decision, or None when unbounded.
        """
        return None

    def describe(self) -> dict:
        """
        Returns:
            dict: JSON-serialisable description of the environment instance.
        """
        return {"name": self.name}
