"""
Reward streams and split-processing parameters.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SplitParams:
    """
    The four parameters governing every split agent.

    lambda_plus / lambda_minus discount the accumulated positive / negative
    stream, w_plus / w_minus weight the current positive / negative reward.
    """

    lambda_plus: float = 1.0
    w_plus: float = 1.0
    lambda_minus: float = 1.0
    w_minus: float = 1.0

    def __post_init__(self):
        for name, value in self.to_dict().items():
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and non-negative, got {value!r}")

    def as_tuple(self):
        """
        Returns:
            tuple: (lambda_plus, w_plus, lambda_minus, w_minus).
        """
        return (self.lambda_plus, self.w_plus, self.lambda_minus, self.w_minus)

    def to_dict(self):
        return {
            "lambda_plus": self.lambda_plus,
            "w_plus": self.w_plus,
            "lambda_minus": self.lambda_minus,
            "w_minus": self.w_minus,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**{key: float(value) for key, value in data.items()})

    def __str__(self):
        return "({:g}, {:g}, {:g}, {:g})".format(*self.as_tuple())


@dataclass(frozen=True)
class RewardPair:
    """
    A (positive, negative) reward observation, the currency between environments and agents.
    """

    positive: float = 0.0
    negative: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.positive) and math.isfinite(self.negative)):
            raise ValueError(f"Reward streams must be finite, got ({self.positive!r}, {self.negative!r})")
        if self.positive < 0:
            raise ValueError(f"positive stream must be >= 0, got {self.positive!r}")
        if self.negative > 0:
            raise ValueError(f"negative stream must be <= 0, got {self.negative!r}")
        # normalise signed zeros
        object.__setattr__(self, "positive", float(self.positive) + 0.0)
        object.__setattr__(self, "negative", float(self.negative) + 0.0)

    def combined(self) -> float:
        """
        Returns:
            float: positive + negative.
        """
        return self.positive + self.negative

    def __add__(self, other):
        if not isinstance(other, RewardPair):
            return NotImplemented
        return RewardPair(self.positive + other.positive, self.negative + other.negative)


ZERO_REWARD = RewardPair(0.0, 0.0)


def split_reward(r: float) -> RewardPair:
    """
    Separates a scalar reward into its positive and negative streams.

    Args:
        r (float): The revealed reward.

    Returns:
        RewardPair: (max(r, 0), min(r, 0)).

    Raises:
        ValueError: If r is not finite.
    """
    r = float(r)
    if not math.isfinite(r):
        raise ValueError(f"Reward must be finite, got {r!r}")
    return RewardPair(max(r, 0.0), min(r, 0.0))


def combined(rp: RewardPair) -> float:
    """
    Args:
        rp (RewardPair): A reward observation.

    Returns:
        float: The combined reward positive + negative.
    """
    return rp.combined()
