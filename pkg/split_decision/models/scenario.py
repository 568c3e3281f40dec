"""
Bimodal reward distributions and two-armed gambling scenarios.
"""

from dataclasses import dataclass
from typing import Tuple

# supports are clipped this many standard deviations from each component mean
SUPPORT_WIDTH = 6.0


@dataclass(frozen=True)
class BimodalSpec:
    """
    A mixture of two normal distributions: N(mu1, sigma1) with probability p, else N(mu2, sigma2).
    """

    mu1: float
    sigma1: float
    mu2: float
    sigma2: float
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")
        if self.sigma1 < 0 or self.sigma2 < 0:
            raise ValueError("Standard deviations must be non-negative")

    @property
    def expected(self) -> float:
        """
        Returns:
            float: The analytic mixture mean p*mu1 + (1-p)*mu2.
        """
        return self.p * self.mu1 + (1.0 - self.p) * self.mu2

    def bounds(self, width: float = SUPPORT_WIDTH) -> Tuple[float, float]:
        """
        Gets the attainable reward range, each component clipped at mu +/- width*sigma.

        Returns:
            tuple: (low, high) over the components that carry probability mass.
        """
        components = []
        if self.p > 0:
            components.append((self.mu1, self.sigma1))
        if self.p < 1:
            components.append((self.mu2, self.sigma2))
        low = min(mu - width * sigma for mu, sigma in components)
        high = max(mu + width * sigma for mu, sigma in components)
        return (low, high)

    def to_dict(self):
        return {"mu1": self.mu1, "sigma1": self.sigma1, "mu2": self.mu2, "sigma2": self.sigma2, "p": self.p}

    @classmethod
    def from_dict(cls, data):
        return cls(**{key: float(value) for key, value in data.items()})


@dataclass(frozen=True)
class TwoArmScenario:
    """
    A two-armed gambling scenario. Arm 0 ("left", state B) never has the higher analytic mean.
    """

    left: BimodalSpec
    right: BimodalSpec

    def __post_init__(self):
        if self.expected_right < self.expected_left:
            raise ValueError("The right arm must have the higher expected payout")

    @classmethod
    def from_arms(cls, first: BimodalSpec, second: BimodalSpec) -> "TwoArmScenario":
        """
        Builds a scenario, relabelling the arms so the right one has the higher analytic mean.
        """
        if second.expected >= first.expected:
            return cls(left=first, right=second)
        return cls(left=second, right=first)

    @property
    def expected_left(self) -> float:
        return self.left.expected

    @property
    def expected_right(self) -> float:
        return self.right.expected

    @property
    def arms(self):
        return (self.left, self.right)

    def reward_bounds(self) -> Tuple[float, float]:
        """
        Returns:
            tuple: (low, high) attainable reward over both arms.
        """
        (low_l, high_l), (low_r, high_r) = self.left.bounds(), self.right.bounds()
        return (min(low_l, low_r), max(high_l, high_r))

    def to_dict(self):
        return {
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
            "expected_left": self.expected_left,
            "expected_right": self.expected_right,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(left=BimodalSpec.from_dict(data["left"]), right=BimodalSpec.from_dict(data["right"]))

    def __str__(self):
        return "left E={:.3f} / right E={:.3f}".format(self.expected_left, self.expected_right)
