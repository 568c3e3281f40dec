"""
Behavioral profiles: named SplitParams settings inspired by reward-processing biases.
"""

from enum import Enum
from typing import Optional

import numpy as np

from split_decision.models.reward import SplitParams


class BehaviorProfile(Enum):
    """
    The ten parameter settings of the split models.
    """

    ADD = "ADD"
    ADHD = "ADHD"
    AD = "AD"
    CP = "CP"
    bvFTD = "bvFTD"
    PD = "PD"
    M = "M"
    Standard = "Standard"
    PositiveOnly = "Positive"
    NegativeOnly = "Negative"

    @property
    def nominal(self) -> SplitParams:
        return SplitParams(*_PROFILE_TABLE[self][0])

    @property
    def jitter(self):
        """
        Returns:
            tuple: Per-field jitter half-widths in SplitParams field order.
        """
        return _PROFILE_TABLE[self][1]

    @property
    def description(self) -> str:
        return _PROFILE_TABLE[self][2]

    @classmethod
    def parse(cls, name: str) -> "BehaviorProfile":
        """
        Looks up a profile by member name or value, e.g. "PD", "PositiveOnly" or "Positive".

        Raises:
            ValueError: If no profile matches.
        """
        for member in cls:
            if name in (member.name, member.value):
                return member
        raise ValueError(f"Unknown behavior profile: {name}")


_SMALL = (0.1, 0.1, 0.1, 0.1)
_NONE = (0.0, 0.0, 0.0, 0.0)

# nominal (lambda+, w+, lambda-, w-), jitter half-widths, label
_PROFILE_TABLE = {
    BehaviorProfile.ADD: ((1.0, 1.0, 0.5, 1.0), _SMALL, "Addiction"),
    BehaviorProfile.ADHD: ((0.2, 1.0, 0.2, 1.0), _SMALL, "ADHD"),
    BehaviorProfile.AD: ((0.1, 1.0, 0.1, 1.0), _SMALL, "Alzheimer's"),
    BehaviorProfile.CP: ((0.5, 0.5, 1.0, 1.0), _SMALL, "Chronic pain"),
    BehaviorProfile.bvFTD: ((0.5, 100.0, 0.5, 1.0), (0.1, 10.0, 0.1, 0.1), "bvFTD"),
    BehaviorProfile.PD: ((0.5, 1.0, 0.5, 100.0), (0.1, 0.1, 0.1, 10.0), "Parkinson's"),
    BehaviorProfile.M: ((0.5, 1.0, 0.5, 1.0), _SMALL, "Moderate"),
    BehaviorProfile.Standard: ((1.0, 1.0, 1.0, 1.0), _NONE, "Standard"),
    BehaviorProfile.PositiveOnly: ((1.0, 1.0, 0.0, 0.0), _NONE, "Positive"),
    BehaviorProfile.NegativeOnly: ((0.0, 0.0, 1.0, 1.0), _NONE, "Negative"),
}


def profile_params(profile: BehaviorProfile, rng: Optional[np.random.Generator] = None,
                   jitter: bool = True) -> SplitParams:
    """
    Draws the SplitParams of one agent instance.

    Each field is its nominal value plus uniform jitter in [-h, +h]; results
    are clamped at zero. Jitter is drawn once, at agent instantiation.

    Args:
        profile (BehaviorProfile): The profile.
        rng (numpy.random.Generator, optional): Source of the jitter draws.
        jitter (bool, optional): False selects zero-jitter mode (exact nominals).

    Returns:
        SplitParams: The instantiated parameters.
    """
    nominal = np.array(_PROFILE_TABLE[profile][0])
    half_widths = np.array(_PROFILE_TABLE[profile][1])

    if not jitter or rng is None or not half_widths.any():
        return SplitParams(*nominal.tolist())

    noise = rng.uniform(-half_widths, half_widths)
    return SplitParams(*np.maximum(nominal + noise, 0.0).tolist())
