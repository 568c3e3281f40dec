"""
Contextual bandit agents: Split Contextual Thompson Sampling (SCTS) and its
profile variants, plus the CTS and LinUCB baselines. Arms have disjoint models.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from split_decision.agents.base import BanditAgent, argmax_random_tie
from split_decision.agents.linalg import factor_with_ridge, mvn_sample, solve_spd
from split_decision.exceptions import IncompatibleAgentException
from split_decision.models.reward import RewardPair, SplitParams


@dataclass(frozen=True)
class CtsNoise:
    """
    Constants of the posterior sampling scale v.
    """

    R: float = 1.0
    epsilon: float = 0.5
    gamma_conf: float = 0.1

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError("R must be positive")
        if not 0.0 < self.epsilon <= 1.0:
            raise ValueError("epsilon must lie in (0, 1]")
        if not 0.0 < self.gamma_conf <= 1.0:
            raise ValueError("gamma_conf must lie in (0, 1]")


def v_parameter(noise: CtsNoise, d: int) -> float:
    """
    v = R sqrt((24 / epsilon) d ln(1 / gamma_conf)).

    Raises:
        ValueError: If d is not positive.
    """
    if d < 1:
        raise ValueError("Context dimension must be positive")
    return noise.R * math.sqrt((24.0 / noise.epsilon) * d * math.log(1.0 / noise.gamma_conf))


class GaussianLinearStream:
    """
    Gaussian linear posterior state (B, f, mu_hat) of one reward stream of one arm.
    """

    def __init__(self, d: int):
        self.d = d
        self.B = np.eye(d)
        self.f = np.zeros(d)
        self.mu_hat = np.zeros(d)
        self._factor = np.eye(d)

    @property
    def factor(self) -> np.ndarray:
        return self._factor

    def update(self, x: np.ndarray, r: float, lam: float = 1.0, w: float = 1.0):
        """
        B := lam B + x x^T, f := lam f + w x r, mu_hat := B^-1 f.
        """
        b = lam * self.B + np.outer(x, x)
        self.f = lam * self.f + w * r * x
        self.B, self._factor = factor_with_ridge(b)
        self.mu_hat = solve_spd(self.B, self.f, self._factor)

    def sample(self, v: float, rng) -> np.ndarray:
        return mvn_sample(self.mu_hat, v, self.B, rng, self._factor)

    def variance(self, x: np.ndarray) -> float:
        """
        Returns:
            float: x^T B^-1 x.
        """
        y = solve_triangular(self._factor, x, lower=True)
        return float(y @ y)

    def residual(self) -> float:
        return float(np.abs(self.B @ self.mu_hat - self.f).max())


class SplitLinearPosterior:
    """
    Independent positive and negative Gaussian linear streams of one arm.
    """

    def __init__(self, d: int, params: SplitParams):
        self.positive = GaussianLinearStream(d)
        self.negative = GaussianLinearStream(d)
        self.params = params

    def update(self, x: np.ndarray, rp: RewardPair):
        p = self.params
        self.positive.update(x, rp.positive, p.lambda_plus, p.w_plus)
        self.negative.update(x, rp.negative, p.lambda_minus, p.w_minus)

    def sample_score(self, x: np.ndarray, v: float, rng) -> float:
        return float(x @ self.positive.sample(v, rng) + x @ self.negative.sample(v, rng))


def scts_select(posteriors, x, noise_or_v, rng) -> int:
    """
    Samples both streams of every arm and returns argmax of x^T mu+ + x^T mu-, ties uniform.

    Args:
        posteriors (list): SplitLinearPosterior per arm.
        x (numpy.ndarray): Context.
        noise_or_v (CtsNoise or float): Sampling constants or the scale v itself.
        rng (numpy.random.Generator): Source of randomness.

    Raises:
        IncompatibleAgentException: If the context dimension differs from the posteriors'.
    """
    x = np.asarray(x, dtype=float)
    d = posteriors[0].positive.d
    if x.shape != (d,):
        raise IncompatibleAgentException(f"Context of shape {x.shape} given to posteriors of dimension {d}")
    v = v_parameter(noise_or_v, d) if isinstance(noise_or_v, CtsNoise) else float(noise_or_v)
    scores = [posterior.sample_score(x, v, rng) for posterior in posteriors]
    return argmax_random_tie(scores, rng)


def scts_update(posterior: SplitLinearPosterior, x, rp: RewardPair) -> SplitLinearPosterior:
    """
    Applies the split update to one arm's posterior in place and returns it.
    """
    posterior.update(np.asarray(x, dtype=float), rp)
    return posterior


class _LinearAgent(BanditAgent):
    pool = "cb"

    def __init__(self, n_actions, rng, d, spec, params=None):
        super().__init__(n_actions, rng, spec, params)
        self.d = d
        self._last_context = np.ones(d)

    def _context(self, context) -> np.ndarray:
        x = np.ones(self.d) if context is None else np.asarray(context, dtype=float)
        if x.shape != (self.d,):
            raise IncompatibleAgentException(f"{self.spec} expects contexts of dimension {self.d}, got {x.shape}")
        self._last_context = x
        return x


class SCTS(_LinearAgent):
    """
    Split Contextual Thompson Sampling.
    """

    def __init__(self, n_actions, rng, d, params: SplitParams, noise=CtsNoise(), spec="cb-SCTS"):
        super().__init__(n_actions, rng, d, spec, params)
        self.v = v_parameter(noise, d)
        self.posteriors = [SplitLinearPosterior(d, params) for _ in range(n_actions)]

    def select(self, context=None):
        return scts_select(self.posteriors, self._context(context), self.v, self._rng)

    def update(self, arm, context, reward):
        scts_update(self.posteriors[arm], self._context(context), reward)

    def stream_values(self, action):
        x = self._last_context
        posterior = self.posteriors[action]
        return (float(x @ posterior.positive.mu_hat), float(x @ posterior.negative.mu_hat))


class CTS(_LinearAgent):
    """
    Contextual Thompson Sampling on the combined reward.
    """

    def __init__(self, n_actions, rng, d, noise=CtsNoise(), spec="CTS"):
        super().__init__(n_actions, rng, d, spec)
        self.v = v_parameter(noise, d)
        self.streams = [GaussianLinearStream(d) for _ in range(n_actions)]

    def select(self, context=None):
        x = self._context(context)
        scores = [float(x @ stream.sample(self.v, self._rng)) for stream in self.streams]
        return argmax_random_tie(scores, self._rng)

    def update(self, arm, context, reward):
        self.streams[arm].update(self._context(context), reward.combined())


class LinUCB(_LinearAgent):
    """
    Disjoint-arm LinUCB on the combined reward.
    """

    def __init__(self, n_actions, rng, d, alpha=1.0, spec="LinUCB"):
        if alpha < 0:
            raise ValueError("alpha must be non-negative")
        super().__init__(n_actions, rng, d, spec)
        self.alpha = alpha
        self.streams = [GaussianLinearStream(d) for _ in range(n_actions)]

    def indices(self, x: np.ndarray) -> np.ndarray:
        """
        Returns:
            numpy.ndarray: x^T mu_hat + alpha sqrt(x^T B^-1 x) per arm.
        """
        return np.array([float(x @ s.mu_hat) + self.alpha * math.sqrt(s.variance(x)) for s in self.streams])

    def select(self, context=None):
        return argmax_random_tie(self.indices(self._context(context)), self._rng)

    def update(self, arm, context, reward):
        self.streams[arm].update(self._context(context), reward.combined())
