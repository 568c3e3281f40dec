"""
Batch-wise stochastic transforms of the reward streams.

Two independent events are resampled with probability 0.5 every batch of
episodes: A acts on the positive stream, B on the negative stream.
"""

from typing import List, Tuple

from split_decision.environments.base import Environment
from split_decision.models.reward import RewardPair

MODES = ("stationary", "muting", "scaling", "flipping")
SCALE = 100.0
EVENT_PROBABILITY = 0.5


def transform_reward(mode: str, event_a: bool, event_b: bool, rp: RewardPair) -> RewardPair:
    """
    Applies a stationarity transform to one reward observation.

    Args:
        mode (str): stationary, muting, scaling or flipping.
        event_a (bool): Positive-stream event active.
        event_b (bool): Negative-stream event active.
        rp (RewardPair): The environment's reward.

    Returns:
        RewardPair: The transformed reward; always a valid pair.
    """
    positive, negative = rp.positive, rp.negative

    if mode == "stationary":
        return rp

    if mode == "muting":
        return RewardPair(0.0 if event_a else positive, 0.0 if event_b else negative)

    if mode == "scaling":
        return RewardPair(positive * SCALE if event_a else positive, negative * SCALE if event_b else negative)

    if mode == "flipping":
        new_positive = (0.0 if event_a else positive) + (-negative if event_b else 0.0)
        new_negative = (0.0 if event_b else negative) + (-positive if event_a else 0.0)
        return RewardPair(new_positive, new_negative)

    raise ValueError(f"Unknown stationarity mode: {mode}")


class StationarityWrapper(Environment):
    """
    Wraps an environment and transforms its rewards with batch-wise events.
    """

    def __init__(self, env: Environment, mode: str = "stationary", batch_size: int = 10, rng=None):
        """
        Initialize a new instance of the StationarityWrapper class.

        Args:
            env (Environment): The wrapped environment.
            mode (str): stationary, muting, scaling or flipping.
            batch_size (int): Episodes per batch.
            rng (RngStream): Stream of the event draws, separate from the environment's.

        Raises:
            ValueError: If mode or batch_size is invalid.
        """
        if mode not in MODES:
            raise ValueError(f"Unknown stationarity mode: {mode}")
        if batch_size < 1:
            raise ValueError("batch_size must be positive")
        super().__init__(rng)
        self.env = env
        self.mode = mode
        self.batch_size = batch_size
        self.episode = -1
        self.event_a = False
        self.event_b = False
        self.history: List[Tuple[int, bool, bool]] = []

        self.name = env.name
        self.n_actions = env.n_actions
        self.better_actions = env.better_actions

    @property
    def done(self):
        return self.env.done

    def reset(self):
        self.episode += 1
        if self.mode != "stationary" and self.episode % self.batch_size == 0:
            self.event_a = bool(self._rng.random() < EVENT_PROBABILITY)
            self.event_b = bool(self._rng.random() < EVENT_PROBABILITY)
            self.history.append((self.episode // self.batch_size, self.event_a, self.event_b))
        return self.env.reset()

    def step(self, action):
        observation, reward, done = self.env.step(action)
        return observation, self.transform(reward), done

    def transform(self, rp: RewardPair) -> RewardPair:
        return transform_reward(self.mode, self.event_a, self.event_b, rp)

    def legal_actions(self, observation):
        return self.env.legal_actions(observation)

    def state_id(self, observation):
        return self.env.state_id(observation)

    def reward_bounds(self):
        # perturbed streams have no fixed range
        return self.env.reward_bounds() if self.mode == "stationary" else None

    def describe(self):
        description = dict(self.env.describe())
        description.update({"stationarity": self.mode, "batch_size": self.batch_size})
        return description


def event_schedule(rng, n_batches: int) -> List[Tuple[int, bool, bool]]:
    """
    Samples the (batch, A, B) sequence a wrapper draws with the same stream.
    """
    schedule = []
    for batch in range(n_batches):
        event_a = bool(rng.random() < EVENT_PROBABILITY)
        event_b = bool(rng.random() < EVENT_PROBABILITY)
        schedule.append((batch, event_a, event_b))
    return schedule
