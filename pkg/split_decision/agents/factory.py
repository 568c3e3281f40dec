"""
Agent spec strings: parsing, task compatibility and construction.

A spec string is either a baseline name (TS, UCB, eGreedy, EXP3, gEXP3, CTS,
LinUCB, QL, DQL, SARSA, Random) or a behavior profile with an optional pool
prefix: "b-" selects the bandit split model (HBTS), "cb-" the contextual one
(SCTS), no prefix the tabular one (SQL). The Standard, Positive and Negative
profiles also go by their model names, e.g. HBTS, PCTS or NQL.
"""

from dataclasses import dataclass
from typing import Optional

from split_decision.agents.bandit import (
    HBTS,
    EXP3,
    EpsilonGreedy,
    GreedyEXP3,
    RandomAgent,
    ThompsonSampling,
    UCB1,
)
from split_decision.agents.contextual import CTS, SCTS, CtsNoise, LinUCB
from split_decision.agents.tabular import DoubleQLearning, QLearning, Sarsa, SplitQLearning
from split_decision.exceptions import IncompatibleAgentException, UnknownAgentSpecException
from split_decision.models.agent_options import AgentOptions
from split_decision.models.behavior_profile import BehaviorProfile, profile_params

POOLS = ("mab", "cb", "rl")
POOL_TITLES = {"mab": "MAB", "cb": "CB", "rl": "RL", "any": "Any task"}
POOL_PREFIXES = {"mab": "b-", "cb": "cb-", "rl": ""}

# Tasks each pool can run on; contextual and tabular agents run everywhere.
POOL_TASKS = {
    "mab": ("mab", "mdp", "igt"),
    "cb": ("mab", "mdp", "igt", "pacman"),
    "rl": ("mab", "mdp", "igt", "pacman"),
    "any": ("mab", "mdp", "igt", "pacman"),
}

BASELINES = {
    "TS": "mab",
    "UCB": "mab",
    "eGreedy": "mab",
    "EXP3": "mab",
    "gEXP3": "mab",
    "CTS": "cb",
    "LinUCB": "cb",
    "QL": "rl",
    "DQL": "rl",
    "SARSA": "rl",
    "Random": "any",
}

BASELINE_ALIASES = {"UCB1": "UCB"}

# Model names of the Standard, Positive and Negative profiles per pool.
MODEL_NAMES = {
    "mab": ("HBTS", "PTS", "NTS"),
    "cb": ("SCTS", "PCTS", "NCTS"),
    "rl": ("SQL", "PQL", "NQL"),
}
_NAMED_PROFILES = (BehaviorProfile.Standard, BehaviorProfile.PositiveOnly, BehaviorProfile.NegativeOnly)
_CLINICAL_PROFILES = tuple(p for p in BehaviorProfile if p not in _NAMED_PROFILES)


@dataclass(frozen=True)
class AgentSpec:
    """
    A parsed agent spec string.

    Attributes:
        text (str): The spec string as given; it identifies the agent in every output.
        pool (str): "mab", "cb", "rl" or "any".
        kind (str): Baseline name, or "split" for the split models.
        profile (BehaviorProfile): The profile of split agents, None for baselines.
    """

    text: str
    pool: str
    kind: str
    profile: Optional[BehaviorProfile] = None

    @property
    def is_split(self) -> bool:
        return self.profile is not None


def _profile_from_name(name: str, pool: str) -> Optional[BehaviorProfile]:
    if name in MODEL_NAMES[pool]:
        return _NAMED_PROFILES[MODEL_NAMES[pool].index(name)]
    try:
        return BehaviorProfile.parse(name)
    except ValueError:
        return None


def parse_agent_spec(text: str) -> AgentSpec:
    """
    Parses an agent spec string.

    Args:
        text (str): e.g. "b-PD", "cb-SCTS", "SQL", "NQL", "LinUCB".

    Returns:
        AgentSpec: The parsed spec.

    Raises:
        UnknownAgentSpecException: When the string names no agent.
    """
    if not isinstance(text, str) or not text:
        raise UnknownAgentSpecException(f"Unknown agent spec: {text!r}", key="agents")

    baseline = BASELINE_ALIASES.get(text, text)
    if baseline in BASELINES:
        return AgentSpec(text, BASELINES[baseline], baseline)

    # Bare model names carry their own pool.
    for pool, names in MODEL_NAMES.items():
        if text in names:
            return AgentSpec(text, pool, "split", _profile_from_name(text, pool))

    if text.startswith("cb-"):
        pool, name = "cb", text[3:]
    elif text.startswith("b-"):
        pool, name = "mab", text[2:]
    else:
        pool, name = "rl", text

    profile = _profile_from_name(name, pool)
    if profile is None:
        raise UnknownAgentSpecException(f"Unknown agent spec: {text!r}", key="agents")
    return AgentSpec(text, pool, "split", profile)


def check_compatible(spec: AgentSpec, task: str):
    """
    Raises:
        IncompatibleAgentException: When the agent's pool cannot run on the task.
    """
    if task not in POOL_TASKS[spec.pool]:
        raise IncompatibleAgentException(
            f"Agent {spec.text!r} ({POOL_TITLES[spec.pool]} pool) cannot run on task {task!r}")


def create_agent(spec, env, rng, options: AgentOptions = None, context_dim: int = 1):
    """
    Builds a fresh agent instance for one experiment cell.

    Profile jitter is drawn from the agent's own stream here, once.

    Args:
        spec (AgentSpec or str): The agent to build.
        env (Environment): The environment replica the agent will face.
        rng (RngStream): The agent's random stream.
        options (AgentOptions, optional): Shared hyperparameters.
        context_dim (int, optional): Context dimension of contextual agents.

    Returns:
        Agent: The agent.

    Raises:
        UnknownAgentSpecException: When a string spec names no agent.
    """
    if isinstance(spec, str):
        spec = parse_agent_spec(spec)
    options = options or AgentOptions()
    n_actions = env.n_actions

    if spec.is_split:
        params = profile_params(spec.profile, rng, jitter=options.jitter)
        if spec.pool == "mab":
            return HBTS(n_actions, rng, params, spec=spec.text)
        if spec.pool == "cb":
            return SCTS(n_actions, rng, context_dim, params, noise=_noise(options), spec=spec.text)
        return SplitQLearning(n_actions, rng, params, gamma=options.gamma, epsilon=options.epsilon, spec=spec.text)

    kind = spec.kind
    if kind == "TS":
        return ThompsonSampling(n_actions, rng, env.reward_bounds(), spec=spec.text)
    if kind == "UCB":
        return UCB1(n_actions, rng, env.reward_bounds(), spec=spec.text)
    if kind == "eGreedy":
        return EpsilonGreedy(n_actions, rng, epsilon=options.epsilon, spec=spec.text)
    if kind == "EXP3":
        return EXP3(n_actions, rng, env.reward_bounds(), gamma=options.exp3_gamma, spec=spec.text)
    if kind == "gEXP3":
        return GreedyEXP3(n_actions, rng, env.reward_bounds(), gamma=options.exp3_gamma,
                          epsilon=options.epsilon, spec=spec.text)
    if kind == "CTS":
        return CTS(n_actions, rng, context_dim, noise=_noise(options), spec=spec.text)
    if kind == "LinUCB":
        return LinUCB(n_actions, rng, context_dim, alpha=options.linucb_alpha, spec=spec.text)
    if kind == "QL":
        return QLearning(n_actions, rng, gamma=options.gamma, epsilon=options.epsilon, spec=spec.text)
    if kind == "DQL":
        return DoubleQLearning(n_actions, rng, gamma=options.gamma, epsilon=options.epsilon, spec=spec.text)
    if kind == "SARSA":
        return Sarsa(n_actions, rng, gamma=options.gamma, epsilon=options.epsilon, spec=spec.text)
    return RandomAgent(n_actions, rng, spec=spec.text)


def _noise(options: AgentOptions) -> CtsNoise:
    return CtsNoise(R=options.cts_r, epsilon=options.cts_epsilon, gamma_conf=options.cts_gamma)


def profile_spec_strings(pool: str):
    """
    Returns:
        list: The ten profile spec strings of a pool, as (spec string, profile) pairs.
    """
    prefix = POOL_PREFIXES[pool]
    rows = [(prefix + profile.name, profile) for profile in _CLINICAL_PROFILES]
    rows += [(name if pool == "rl" else prefix + name, profile)
             for name, profile in zip(MODEL_NAMES[pool], _NAMED_PROFILES)]
    return rows


def list_agents() -> str:
    """
    Returns:
        str: Every spec string grouped by pool, profiles with their nominal (lambda+, w+, lambda-, w-).
    """
    lines = []
    for pool in POOLS:
        lines.append(f"{POOL_TITLES[pool]} pool:")
        for text, profile in profile_spec_strings(pool):
            lines.append(f"  {text:<10} {str(profile.nominal):<24} {profile.description}")
        baselines = [name for name, baseline_pool in BASELINES.items() if baseline_pool == pool]
        lines.append(f"  baselines: {', '.join(baselines)}")
        lines.append("")
    lines.append(f"{POOL_TITLES['any']}: Random")
    return "\n".join(lines) + "\n"
