"""
Agents: split models (HBTS, SCTS, SQL) and their baselines.
"""

from split_decision.agents.base import Agent, BanditAgent, TabularAgent, Transition, RewardNormalizer
from split_decision.agents.bandit import (
    HBTS,
    EXP3,
    EpsilonGreedy,
    GreedyEXP3,
    RandomAgent,
    ThompsonSampling,
    UCB1,
    hbts_select,
    hbts_update,
)
from split_decision.agents.contextual import (
    CTS,
    SCTS,
    CtsNoise,
    GaussianLinearStream,
    LinUCB,
    scts_select,
    scts_update,
    v_parameter,
)
from split_decision.agents.linalg import cholesky, mvn_sample, solve_spd
from split_decision.agents.tabular import (
    DoubleQLearning,
    QLearning,
    QTable,
    Sarsa,
    SplitQLearning,
    VisitCounts,
    learning_rate,
    sql_select,
    sql_update,
)
from split_decision.agents.factory import AgentSpec, check_compatible, create_agent, list_agents, parse_agent_spec
