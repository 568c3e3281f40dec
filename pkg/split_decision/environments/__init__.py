"""
Evaluation environments: the bimodal gambling task (bandit and MDP), the
Iowa Gambling Task and PacMan, plus the stationarity wrapper.
"""

from split_decision.environments.bandit_task import (
    GamblingMdp,
    TwoArmBandit,
    random_scenario,
    sample_bimodal,
)
from split_decision.environments.base import Environment
from split_decision.environments.context import ContextSpec, context_features, context_spec_for
from split_decision.environments.igt import IgtEnv, igt_draw
from split_decision.environments.pacman import PacmanEnv
from split_decision.environments.stationarity import StationarityWrapper, transform_reward


def make_environment(task, scenario, env_rng, event_rng=None, scheme=1, stationarity="stationary",
                     batch_size=10, max_frames=500) -> Environment:
    """
    Builds the environment replica of one experiment cell.

    Args:
        task (str): mab, mdp, igt or pacman.
        scenario (TwoArmScenario, optional): Required by mab and mdp.
        env_rng (RngStream): The environment's noise stream.
        event_rng (RngStream, optional): Stream of stationarity events (PacMan only).
        scheme (int, optional): IGT payoff scheme.
        stationarity (str, optional): PacMan reward process.
        batch_size (int, optional): Episodes per stationarity batch.
        max_frames (int, optional): PacMan frame cap.

    Returns:
        Environment: The environment.
    """
    if task == "mab":
        return TwoArmBandit(scenario, env_rng)
    if task == "mdp":
        return GamblingMdp(scenario, env_rng)
    if task == "igt":
        return IgtEnv(scheme, env_rng)
    if task == "pacman":
        env = PacmanEnv(env_rng, max_frames=max_frames)
        return StationarityWrapper(env, stationarity, batch_size, event_rng)
    raise ValueError(f"Unknown task: {task}")
