"""
Models for the split_decision package.
"""

from .reward import SplitParams, RewardPair, ZERO_REWARD, split_reward, combined
from .behavior_profile import BehaviorProfile, profile_params
from .scenario import BimodalSpec, TwoArmScenario
from .run_result import RunResult, sort_results
from .pairwise_matrix import PairwiseMatrix
from .learning_curve import LearningCurve
from .agent_options import AgentOptions
from .experiment_config import ExperimentConfig
