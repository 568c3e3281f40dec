"""
The two-armed gambling task with bimodal rewards, as a bandit and as a two-step MDP.
"""

import numpy as np

from split_decision.environments.base import Environment
from split_decision.exceptions import EpisodeFinishedException
from split_decision.models.reward import ZERO_REWARD, split_reward
from split_decision.models.scenario import BimodalSpec, TwoArmScenario

MEAN_RANGE = (-100, 100)
SIGMA_RANGE = (0, 50)

LEFT, RIGHT = 0, 1


def sample_bimodal(spec: BimodalSpec, rng, size=None):
    """
    Draws from the mixture: component 1 with probability p, else component 2.

    Args:
        spec (BimodalSpec): The mixture.
        rng (numpy.random.Generator): Source of randomness.
        size (int, optional): Number of draws; None returns a float.

    Returns:
        float or numpy.ndarray: The reward draw(s).
    """
    first = rng.random(size) < spec.p
    z = rng.standard_normal(size)
    draws = np.where(first, spec.mu1 + spec.sigma1 * z, spec.mu2 + spec.sigma2 * z)
    return float(draws) if size is None else draws


def random_bimodal(rng) -> BimodalSpec:
    """
    Draws a mixture with integer means in [-100, 100], integer sigmas in [0, 50] and p uniform in [0, 1].
    """
    mu1, mu2 = rng.integers(MEAN_RANGE[0], MEAN_RANGE[1], size=2, endpoint=True)
    sigma1, sigma2 = rng.integers(SIGMA_RANGE[0], SIGMA_RANGE[1], size=2, endpoint=True)
    return BimodalSpec(mu1=float(mu1), sigma1=float(sigma1), mu2=float(mu2), sigma2=float(sigma2),
                       p=float(rng.random()))


def random_scenario(rng) -> TwoArmScenario:
    """
    Generates a random two-armed scenario, right arm relabelled to the higher analytic mean.

    Args:
        rng (numpy.random.Generator): Source of randomness.

    Returns:
        TwoArmScenario: The scenario.
    """
    first = random_bimodal(rng)
    second = random_bimodal(rng)
    return TwoArmScenario.from_arms(first, second)


class TwoArmBandit(Environment):
    """
    One-step version of the gambling task: choose an arm, observe its draw.
    """

    name = "mab"
    n_actions = 2
    better_actions = frozenset({RIGHT})

    def __init__(self, scenario: TwoArmScenario, rng):
        super().__init__(rng)
        self.scenario = scenario

    def reset(self):
        self._done = False
        return 0

    def step(self, action):
        if self._done:
            raise EpisodeFinishedException()
        if action not in (LEFT, RIGHT):
            raise ValueError(f"Invalid arm: {action}")

        reward = split_reward(sample_bimodal(self.scenario.arms[action], self._rng))
        self._done = True
        return 1, reward, True

    def reward_bounds(self):
        return self.scenario.reward_bounds()

    def describe(self):
        return {"name": self.name, "scenario": self.scenario.to_dict()}


class GamblingMdp(Environment):
    """
    Two-step version: from A go left to B or right to C (zero reward), then observe the arm's draw.
    """

    name = "mdp"
    n_actions = 2
    better_actions = frozenset({RIGHT})

    STATE_A, STATE_B, STATE_C, TERMINAL = 0, 1, 2, 3

    def __init__(self, scenario: TwoArmScenario, rng):
        super().__init__(rng)
        self.scenario = scenario
        self._state = self.STATE_A

    def reset(self):
        self._done = False
        self._state = self.STATE_A
        return self._state

    def legal_actions(self, observation):
        return 2 if observation == self.STATE_A else 1

    def step(self, action):
        if self._done:
            raise EpisodeFinishedException()
        if not 0 <= action < self.legal_actions(self._state):
            raise ValueError(f"Invalid action {action} in state {self._state}")

        if self._state == self.STATE_A:
            self._state = self.STATE_B if action == LEFT else self.STATE_C
            return self._state, ZERO_REWARD, False

        arm = self.scenario.left if self._state == self.STATE_B else self.scenario.right
        reward = split_reward(sample_bimodal(arm, self._rng))
        self._state = self.TERMINAL
        self._done = True
        return self._state, reward, True

    def reward_bounds(self):
        return self.scenario.reward_bounds()

    def describe(self):
        return {"name": self.name, "scenario": self.scenario.to_dict()}
