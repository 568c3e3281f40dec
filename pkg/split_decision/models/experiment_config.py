"""
Configuration of an experiment run.
"""

import os
from typing import Optional

from split_decision.exceptions import (
    ConfigurationException,
    IncompatibleAgentException,
    InvalidEnumException,
)
from split_decision.models.agent_options import AgentOptions

TASKS = ("mab", "mdp", "igt", "pacman")
STATIONARITY_MODES = ("stationary", "muting", "scaling", "flipping")
IGT_SCHEMES = (1, 2)
OUTPUT_FORMATS = ("csv", "json")

SEED_ENV_VAR = "SPLIT_DECISION_SEED"

TASK_DEFAULTS = {
    "mab": {
        "scenarios": 100, "repeats": 50, "horizon": 1000,
        "agents": ["TS", "UCB", "eGreedy", "EXP3", "gEXP3", "b-HBTS"],
    },
    "mdp": {
        "scenarios": 100, "repeats": 50, "horizon": 1000,
        "agents": ["QL", "DQL", "SARSA", "SQL", "PQL", "NQL"],
    },
    "igt": {
        "scenarios": 1, "repeats": 200, "horizon": 500,
        "agents": ["TS", "b-HBTS", "CTS", "LinUCB", "cb-SCTS", "QL", "SQL"],
    },
    "pacman": {
        "scenarios": 1, "repeats": 50, "horizon": 200,
        "agents": ["QL", "SQL", "CTS", "LinUCB", "cb-SCTS"],
    },
}


def to_snake_case(key: str) -> str:
    """
    Converts a PascalCase or camelCase config key to snake_case.
    """
    if "_" in key or key.islower():
        return key
    return ''.join(['_' + c.lower() if c.isupper() else c for c in key]).lstrip('_')


class ExperimentConfig:
    """
    Configuration of an experiment run.
    """

    def __init__(self,
                 task="mab",
                 agents=None,
                 scenarios=None,
                 repeats=None,
                 horizon=None,
                 seed=0,
                 scheme=1,
                 stationarity="stationary",
                 batch_size=10,
                 pacman_max_frames=500,
                 jobs=1,
                 out="results",
                 formats=None,
                 agent_options=None):
        """
        Initialize a new instance of the ExperimentConfig class.

        Args:
            task (str): One of "mab", "mdp", "igt", "pacman".
            agents (list, optional): Agent spec strings; defaults to the task's standard pool.
            scenarios (int, optional): Number of scenarios; defaults per task.
            repeats (int, optional): Repeats per scenario; defaults per task.
            horizon (int, optional): Episodes per run; defaults per task.
            seed (int): Master seed.
            scheme (int): Iowa Gambling Task payoff scheme, 1 or 2.
            stationarity (str): PacMan reward process: stationary, muting, scaling or flipping.
            batch_size (int): Episodes between resamplings of the stationarity events.
            pacman_max_frames (int): Frames after which a PacMan episode is truncated.
            jobs (int): Number of worker processes running cells.
            out (str): Output directory.
            formats (list, optional): Output formats, any of "csv", "json".
            agent_options (AgentOptions, optional): Shared agent hyperparameters.
        """
        defaults = TASK_DEFAULTS.get(task, TASK_DEFAULTS["mab"])

        self.task = task
        self.agents = list(agents) if agents is not None else list(defaults["agents"])
        self.scenarios = scenarios if scenarios is not None else defaults["scenarios"]
        self.repeats = repeats if repeats is not None else defaults["repeats"]
        self.horizon = horizon if horizon is not None else defaults["horizon"]
        self.seed = seed
        self.scheme = scheme
        self.stationarity = stationarity
        self.batch_size = batch_size
        self.pacman_max_frames = pacman_max_frames
        self.jobs = jobs
        self.out = out
        self.formats = list(formats) if formats is not None else ["csv"]
        self.agent_options = agent_options if agent_options is not None else AgentOptions()

    def validate(self):
        """
        Validates the configuration.

        Raises:
            InvalidEnumException: When task, scheme, stationarity or a format is not an allowed member.
            UnknownAgentSpecException: When an agent spec string is not recognised.
            ConfigurationException: When a count is out of range or an agent cannot run on the task.
        """
        from split_decision.agents.factory import check_compatible, parse_agent_spec

        if self.task not in TASKS:
            raise InvalidEnumException(f"task must be one of {TASKS}, got {self.task!r}", key="task")

        if self.scheme not in IGT_SCHEMES:
            raise InvalidEnumException(f"scheme must be one of {IGT_SCHEMES}, got {self.scheme!r}", key="scheme")

        if self.stationarity not in STATIONARITY_MODES:
            raise InvalidEnumException(
                f"stationarity must be one of {STATIONARITY_MODES}, got {self.stationarity!r}", key="stationarity")

        for output_format in self.formats:
            if output_format not in OUTPUT_FORMATS:
                raise InvalidEnumException(
                    f"format must be one of {OUTPUT_FORMATS}, got {output_format!r}", key="formats")

        for key in ("scenarios", "repeats", "horizon", "batch_size", "pacman_max_frames", "jobs"):
            value = getattr(self, key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigurationException(f"{key} must be a positive integer, got {value!r}", key=key)

        if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise ConfigurationException(f"seed must be an unsigned 64-bit integer, got {self.seed!r}", key="seed")

        if not self.agents:
            raise ConfigurationException("At least one agent is required", key="agents")

        if len(set(self.agents)) != len(self.agents):
            raise ConfigurationException("Agent spec strings must be unique", key="agents")

        for spec in self.agents:
            parsed = parse_agent_spec(spec)
            try:
                check_compatible(parsed, self.task)
            except IncompatibleAgentException as ex:
                raise ConfigurationException(str(ex), key="agents", inner_exception=ex)

        try:
            self.agent_options.validate()
        except ValueError as ex:
            raise ConfigurationException(str(ex), key="agent_options", inner_exception=ex)

    def to_dict(self):
        """
        Returns:
            dict: The fully-resolved configuration.
        """
        data = {key: value for key, value in self.__dict__.items() if key != "agent_options"}
        data["agents"] = list(self.agents)
        data["formats"] = list(self.formats)
        data["agent_options"] = self.agent_options.to_dict()
        return data

    @classmethod
    def from_dict(cls, data, overrides: Optional[dict] = None):
        """
        Creates an ExperimentConfig from a dictionary, with optional overriding values.

        Keys may be PascalCase (as in TestApp/config.json) or snake_case.
        Values in overrides win over values in data; a missing seed falls back
        to the SPLIT_DECISION_SEED environment variable.

        Args:
            data (dict): The configuration file contents.
            overrides (dict, optional): Values set on the command line; None entries are ignored.

        Returns:
            ExperimentConfig: A new ExperimentConfig instance.

        Raises:
            ConfigurationException: When a key is unknown or the seed variable is malformed.
        """
        known = set(cls().to_dict().keys())
        option_keys = set(AgentOptions().to_dict().keys())

        converted = {}
        options = {}
        for key, value in (data or {}).items():
            snake_key = to_snake_case(key)
            if snake_key == "agent_options":
                options.update({to_snake_case(k): v for k, v in value.items()})
            elif snake_key in option_keys:
                options[snake_key] = value
            elif snake_key in known:
                converted[snake_key] = value
            else:
                raise ConfigurationException(f"Unknown configuration key: {key}", key=key)

        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if key in option_keys:
                options[key] = value
            else:
                converted[key] = value

        unknown_options = set(options) - option_keys
        if unknown_options:
            key = sorted(unknown_options)[0]
            raise ConfigurationException(f"Unknown agent option: {key}", key=key)

        if "seed" not in converted and os.environ.get(SEED_ENV_VAR):
            try:
                converted["seed"] = int(os.environ[SEED_ENV_VAR])
            except ValueError as ex:
                raise ConfigurationException(f"{SEED_ENV_VAR} must be an integer", key=SEED_ENV_VAR, inner_exception=ex)

        converted["agent_options"] = AgentOptions.from_dict(options)
        return cls(**converted)
