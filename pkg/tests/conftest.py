"""
Shared fixtures.
"""

import numpy as np
import pytest

from split_decision.models.experiment_config import SEED_ENV_VAR
from split_decision.models.scenario import BimodalSpec, TwoArmScenario
from split_decision.rng import RngStream


@pytest.fixture
def make_rng():
    """
    Factory of independent seeded streams: make_rng(stream_id, seed=0).
    """
    def factory(stream_id=0, seed=0):
        return RngStream(seed, stream_id)
    return factory


@pytest.fixture
def rng(make_rng):
    return make_rng(0)


@pytest.fixture
def deterministic_scenario():
    """
    Noise-free arms: left always -5, right always +10.
    """
    return TwoArmScenario(left=BimodalSpec(-5.0, 0.0, -5.0, 0.0, 0.5),
                          right=BimodalSpec(10.0, 0.0, 10.0, 0.0, 0.5))


@pytest.fixture(autouse=True)
def no_seed_env(monkeypatch):
    monkeypatch.delenv(SEED_ENV_VAR, raising=False)


def random_spd(rng, d):
    m = rng.standard_normal((d, d))
    return m.T @ m + np.eye(d)
