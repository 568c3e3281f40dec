"""
Multi-armed bandit agents: HBTS and its profile variants, plus the TS, UCB1,
epsilon-greedy, EXP3 and gEXP3 baselines.
"""

import math
from dataclasses import dataclass

import numpy as np

from split_decision.agents.base import BanditAgent, RewardNormalizer, argmax_random_tie
from split_decision.models.reward import RewardPair, SplitParams

EPS_MIN = 1e-3


@dataclass(frozen=True)
class BetaArmState:
    """
    Success and failure masses of one arm.
    """

    S: float = 1.0
    F: float = 1.0

    def __post_init__(self):
        if not (self.S > 0 and self.F > 0):
            raise ValueError("Beta masses must be positive")


def beta_select(successes, failures, rng) -> int:
    """
    Samples one Beta(S, F) per arm and returns the argmax, ties uniform.
    """
    theta = rng.beta(np.asarray(successes, dtype=float), np.asarray(failures, dtype=float))
    return argmax_random_tie(theta, rng)


def hbts_select(states, rng) -> int:
    """
    Args:
        states (list): BetaArmState per arm.
        rng (numpy.random.Generator): Source of randomness.

    Returns:
        int: The selected arm.
    """
    return beta_select([s.S for s in states], [s.F for s in states], rng)


def hbts_update(state: BetaArmState, rp: RewardPair, params: SplitParams) -> BetaArmState:
    """
    Split update of the Beta masses; both are floored at EPS_MIN.

    S' = max(lambda+ S + w+ r+, EPS_MIN), F' = max(lambda- F - w- r-, EPS_MIN).
    """
    s = max(params.lambda_plus * state.S + params.w_plus * rp.positive, EPS_MIN)
    f = max(params.lambda_minus * state.F - params.w_minus * rp.negative, EPS_MIN)
    return BetaArmState(s, f)


class HBTS(BanditAgent):
    """
    Human-Based Thompson Sampling on raw positive and negative streams.
    """

    pool = "mab"

    def __init__(self, n_actions, rng, params: SplitParams, spec="b-HBTS"):
        super().__init__(n_actions, rng, spec, params)
        self.states = [BetaArmState() for _ in range(n_actions)]

    def select(self, context=None):
        return hbts_select(self.states, self._rng)

    def update(self, arm, context, reward):
        self.states[arm] = hbts_update(self.states[arm], reward, self.params)

    def stream_values(self, action):
        state = self.states[action]
        return (state.S, state.F)


class ThompsonSampling(BanditAgent):
    """
    Beta-Bernoulli Thompson Sampling on normalised combined rewards.

    Fractional rewards are Bernoulli-rounded; rewards of exactly 0 or 1 use no draw.
    """

    pool = "mab"

    def __init__(self, n_actions, rng, bounds, spec="TS"):
        super().__init__(n_actions, rng, spec)
        self.normalize = RewardNormalizer(bounds)
        self.successes = np.ones(n_actions)
        self.failures = np.ones(n_actions)

    def select(self, context=None):
        return beta_select(self.successes, self.failures, self._rng)

    def update(self, arm, context, reward):
        r = self.normalize(reward.combined())
        if r in (0.0, 1.0):
            outcome = r
        else:
            outcome = 1.0 if self._rng.random() < r else 0.0
        self.successes[arm] += outcome
        self.failures[arm] += 1.0 - outcome


class UCB1(BanditAgent):
    """
    UCB1 on normalised combined rewards; plays every arm once, ties go to the smallest index.
    """

    pool = "mab"

    def __init__(self, n_actions, rng, bounds, spec="UCB"):
        super().__init__(n_actions, rng, spec)
        self.normalize = RewardNormalizer(bounds)
        self.counts = np.zeros(n_actions)
        self.means = np.zeros(n_actions)

    def indices(self):
        t = self.counts.sum() + 1
        return self.means + np.sqrt(2.0 * math.log(t) / self.counts)

    def select(self, context=None):
        unplayed = np.flatnonzero(self.counts == 0)
        if len(unplayed):
            return int(unplayed[0])
        return int(np.argmax(self.indices()))

    def update(self, arm, context, reward):
        r = self.normalize(reward.combined())
        self.counts[arm] += 1
        self.means[arm] += (r - self.means[arm]) / self.counts[arm]


class EpsilonGreedy(BanditAgent):
    """
    Epsilon-greedy on empirical means of the raw combined reward.
    """

    pool = "mab"

    def __init__(self, n_actions, rng, epsilon=0.05, spec="eGreedy"):
        super().__init__(n_actions, rng, spec)
        self.epsilon = epsilon
        self.counts = np.zeros(n_actions)
        self.means = np.zeros(n_actions)

    def select(self, context=None):
        if self._rng.random() < self.epsilon:
            return int(self._rng.integers(self.n_actions))
        return argmax_random_tie(self.means, self._rng)

    def update(self, arm, context, reward):
        self.counts[arm] += 1
        self.means[arm] += (reward.combined() - self.means[arm]) / self.counts[arm]


class EXP3(BanditAgent):
    """
    EXP3 with exploration rate gamma on normalised combined rewards.
    """

    pool = "mab"

    # weights are rescaled past this magnitude; probabilities are scale-free
    _RESCALE_AT = 1e200

    def __init__(self, n_actions, rng, bounds, gamma=0.1, spec="EXP3"):
        if not 0.0 < gamma <= 1.0:
            raise ValueError("EXP3 gamma must lie in (0, 1]")
        super().__init__(n_actions, rng, spec)
        self.normalize = RewardNormalizer(bounds)
        self.gamma = gamma
        self.weights = np.ones(n_actions)

    def probabilities(self) -> np.ndarray:
        """
        Returns:
            numpy.ndarray: p_i = (1 - gamma) w_i / sum(w) + gamma / K.
        """
        k = self.n_actions
        return (1.0 - self.gamma) * self.weights / self.weights.sum() + self.gamma / k

    def select(self, context=None):
        return int(self._rng.choice(self.n_actions, p=self.probabilities()))

    def update(self, arm, context, reward):
        p = self.probabilities()[arm]
        estimate = self.normalize(reward.combined()) / p
        self.weights[arm] *= math.exp(self.gamma * estimate / self.n_actions)
        if self.weights.max() > self._RESCALE_AT:
            self.weights /= self.weights.max()


class GreedyEXP3(EXP3):
    """
    gEXP3: EXP3 weights with epsilon-greedy selection on the weights.
    """

    def __init__(self, n_actions, rng, bounds, gamma=0.1, epsilon=0.05, spec="gEXP3"):
        super().__init__(n_actions, rng, bounds, gamma, spec)
        self.epsilon = epsilon

    def select(self, context=None):
        if self._rng.random() < self.epsilon:
            return int(self._rng.integers(self.n_actions))
        return argmax_random_tie(self.weights, self._rng)


class RandomAgent(BanditAgent):
    """
    Uniform-random reference policy, usable on every task.
    """

    pool = "any"

    def __init__(self, n_actions, rng, spec="Random"):
        super().__init__(n_actions, rng, spec)

    def select(self, context=None):
        return int(self._rng.integers(self.n_actions))

    def update(self, arm, context, reward):
        pass
