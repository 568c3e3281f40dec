"""
split-decision

Two-stream ("split") reward-processing agents for multi-armed bandits,
contextual bandits and tabular reinforcement learning, with behavioral
profiles, four evaluation environments and a pairwise win-rate harness.
"""

__version__ = '1.0.0'

from split_decision.models.reward import RewardPair, SplitParams, combined, split_reward
from split_decision.models.behavior_profile import BehaviorProfile, profile_params
from split_decision.models.agent_options import AgentOptions
from split_decision.models.experiment_config import ExperimentConfig
from split_decision.models.run_result import RunResult
from split_decision.rng import RngStream
from split_decision.agents.factory import create_agent, list_agents, parse_agent_spec
from split_decision.metrics import average_wins, learning_curves, pairwise_wins
from split_decision.runner import ExperimentRunner, run_experiment
