"""
Experiment runner: executes every (scenario, agent, repeat) cell of an experiment.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional

import numpy as np
from tqdm import tqdm

from split_decision.agents.base import Transition
from split_decision.agents.factory import create_agent, parse_agent_spec
from split_decision.environments import context_features, context_spec_for, make_environment, random_scenario
from split_decision.environments.stationarity import event_schedule
from split_decision.exceptions import IncompatibleAgentException
from split_decision.models.experiment_config import ExperimentConfig
from split_decision.models.reward import ZERO_REWARD
from split_decision.models.run_result import RunResult, sort_results
from split_decision.rng import RngStream, stream_id_for


def cell_streams(scenario: int, repeat: int, agent: str) -> Dict[str, int]:
    """
    Stream ids of one cell. Environment and event streams depend on (scenario, repeat)
    only, so every agent faces the same noise.
    """
    return {
        "env_stream": stream_id_for("env", scenario, repeat),
        "events_stream": stream_id_for("events", scenario, repeat),
        "agent_stream": stream_id_for("agent", scenario, repeat, agent),
    }


def generate_scenarios(config: ExperimentConfig) -> list:
    """
    Returns:
        list: One TwoArmScenario per scenario index for mab and mdp, None entries otherwise.
    """
    if config.task not in ("mab", "mdp"):
        return [None] * config.scenarios
    return [random_scenario(RngStream.derive(config.seed, "scenario", s)) for s in range(config.scenarios)]


def _play_tabular(agent, env):
    observation = env.reset()
    state = env.state_id(observation)
    action = agent.select(state, env.legal_actions(observation))
    first = action
    total = 0.0

    while True:
        observation, reward, done = env.step(action)
        total += reward.combined()
        next_state = env.state_id(observation)
        if done:
            agent.update(Transition(state, action, reward, next_state, True))
            return total, first

        next_legal = env.legal_actions(observation)
        next_action = agent.select(next_state, next_legal)
        agent.update(Transition(state, action, reward, next_state, False, next_legal, next_action))
        state, action = next_state, next_action


def _play_stateless(agent, env, context_spec):
    observation = env.reset()
    total = 0.0
    first = -1
    pending = None
    done = False

    while not done:
        if env.legal_actions(observation) > 1:
            if pending is not None:
                agent.update(*pending)
            context = context_features(context_spec, observation)
            action = agent.select(context)
            pending = [action, context, ZERO_REWARD]
            if first < 0:
                first = action
        else:
            action = 0

        observation, reward, done = env.step(action)
        total += reward.combined()
        if pending is not None:
            # forced steps are credited to the last decision
            pending[2] = pending[2] + reward

    if pending is not None:
        agent.update(*pending)
    return total, first


def run_cell(config: ExperimentConfig, scenario, scenario_index: int, agent_spec: str, repeat: int) -> RunResult:
    """
    Runs one agent on a fresh environment replica for the configured horizon.

    Args:
        config (ExperimentConfig): The experiment configuration.
        scenario (TwoArmScenario): The scenario of mab and mdp tasks, None otherwise.
        scenario_index (int): Index of the scenario.
        agent_spec (str): The agent spec string.
        repeat (int): Repeat index.

    Returns:
        RunResult: The run record.
    """
    streams = cell_streams(scenario_index, repeat, agent_spec)
    env = make_environment(
        config.task,
        scenario,
        RngStream(config.seed, streams["env_stream"]),
        event_rng=RngStream(config.seed, streams["events_stream"]),
        scheme=config.scheme,
        stationarity=config.stationarity,
        batch_size=config.batch_size,
        max_frames=config.pacman_max_frames)
    context_spec = context_spec_for(env)
    agent = create_agent(agent_spec, env, RngStream(config.seed, streams["agent_stream"]),
                         config.agent_options, context_spec.dimension)

    better_actions = env.better_actions
    rewards = np.empty(config.horizon)
    choices = np.empty(config.horizon, dtype=int)
    better = np.zeros(config.horizon, dtype=bool) if better_actions else None
    stream_values = np.empty((config.horizon, 2)) if agent.is_split else None
    final_reward = 0.0

    for episode in range(config.horizon):
        if agent.stateful:
            total, first = _play_tabular(agent, env)
        else:
            total, first = _play_stateless(agent, env, context_spec)

        rewards[episode] = total
        final_reward += total
        choices[episode] = first
        if better is not None:
            better[episode] = first in better_actions
        if stream_values is not None:
            tracked = min(better_actions) if better_actions else max(first, 0)
            stream_values[episode] = agent.stream_values(tracked)

    return RunResult(agent_spec, scenario_index, repeat, config.seed, rewards, final_reward, choices,
                     better=better, stream_values=stream_values,
                     agent_stream=streams["agent_stream"], env_stream=streams["env_stream"])


def _run_cell_job(job):
    return run_cell(*job)


class ExperimentRunner:
    """
    Runs experiments in a paired design: all agents see the same scenarios and environment noise.
    """

    def __init__(self, config: ExperimentConfig, logger: Optional[logging.Logger] = None):
        """
        Initialize a new instance of the ExperimentRunner class.

        Args:
            config (ExperimentConfig): The experiment configuration.
            logger (logging.Logger, optional): The logger.

        Raises:
            ConfigurationException: If the configuration is invalid.
            IncompatibleAgentException: If an agent cannot run on the task's environment.
        """
        self._config = config
        self._logger = logger

        self._config.validate()
        self.scenarios = generate_scenarios(config)
        self.check_compatibility()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def close(self):
        """
        Drops the generated scenarios.
        """
        self.scenarios = []

    @property
    def config(self) -> ExperimentConfig:
        return self._config

    def cells(self):
        """
        Returns:
            list: Every (scenario, agent, repeat) cell in result order.
        """
        config = self._config
        return [(s, agent, r) for s in range(config.scenarios) for agent in config.agents for r in range(config.repeats)]

    def check_compatibility(self):
        """
        Builds every agent once against a sample environment.

        Raises:
            IncompatibleAgentException: On a context dimension mismatch or missing reward bounds.
        """
        config = self._config
        sample_env = make_environment(config.task, self.scenarios[0], RngStream(config.seed, 0),
                                      event_rng=RngStream(config.seed, 1), scheme=config.scheme,
                                      stationarity=config.stationarity, batch_size=config.batch_size,
                                      max_frames=config.pacman_max_frames)
        context_spec = context_spec_for(sample_env)

        for spec in config.agents:
            try:
                agent = create_agent(parse_agent_spec(spec), sample_env, RngStream(config.seed, 2),
                                     config.agent_options, context_spec.dimension)
            except ValueError as ex:
                raise IncompatibleAgentException(f"Agent {spec!r} cannot run on task {config.task!r}: {ex}", ex)
            if agent.pool == "cb":
                context_spec.check(agent.d)

        if self._logger:
            self._logger.debug(f"Agents compatible with task {config.task}, context dimension {context_spec.dimension}")

    def run_cell(self, scenario: int, agent: str, repeat: int) -> RunResult:
        """
        Runs a single cell.

        Raises:
            ValueError: If the cell lies outside the experiment.
        """
        if not 0 <= scenario < self._config.scenarios or not 0 <= repeat < self._config.repeats:
            raise ValueError(f"Cell ({scenario}, {agent}, {repeat}) is outside the experiment")
        if agent not in self._config.agents:
            raise ValueError(f"Agent {agent!r} is not part of the experiment")
        return run_cell(self._config, self.scenarios[scenario], scenario, agent, repeat)

    def run(self, progress: bool = False) -> List[RunResult]:
        """
        Runs every cell of the experiment.

        Args:
            progress (bool, optional): Show a progress bar over cells.

        Returns:
            list: RunResults ordered by scenario, agent position and repeat.
        """
        config = self._config
        jobs = [(config, self.scenarios[s], s, agent, r) for s, agent, r in self.cells()]

        if self._logger:
            self._logger.info(f"Running {len(jobs)} cells: {len(config.agents)} agents x "
                              f"{config.scenarios} scenarios x {config.repeats} repeats, horizon {config.horizon}")

        bar = tqdm(total=len(jobs), desc=config.task, unit="run", disable=not progress)
        results = []
        try:
            if config.jobs > 1:
                with ProcessPoolExecutor(max_workers=config.jobs) as executor:
                    for result in executor.map(_run_cell_job, jobs, chunksize=max(1, len(jobs) // (4 * config.jobs))):
                        results.append(result)
                        bar.update()
            else:
                for job in jobs:
                    results.append(_run_cell_job(job))
                    bar.update()
                    if self._logger and job[4] == config.repeats - 1:
                        self._logger.debug(f"Finished scenario {job[2]} for agent {job[3]}")
        finally:
            bar.close()

        return sort_results(results, config.agents)

    def event_sequences(self) -> List[dict]:
        """
        Returns:
            list: The per-batch stationarity events of every (scenario, repeat), empty when stationary.
        """
        config = self._config
        if config.task != "pacman" or config.stationarity == "stationary":
            return []

        n_batches = math.ceil(config.horizon / config.batch_size)
        sequences = []
        for s in range(config.scenarios):
            for r in range(config.repeats):
                rng = RngStream(config.seed, stream_id_for("events", s, r))
                sequences.append({
                    "scenario": s,
                    "repeat": r,
                    "events": [{"batch": b, "A": a, "B": e} for b, a, e in event_schedule(rng, n_batches)],
                })
        return sequences

    def cell_seeds(self) -> List[dict]:
        """
        Returns:
            list: The seed and stream ids of every cell.
        """
        return [dict(scenario=s, agent=agent, repeat=r, seed=self._config.seed, **cell_streams(s, r, agent))
                for s, agent, r in self.cells()]


def run_experiment(agents, task="mab", scenarios=None, repeats=None, horizon=None, seed=0,
                   logger: Optional[logging.Logger] = None, **kwargs) -> List[RunResult]:
    """
    Runs an experiment and returns its results.

    Args:
        agents (list): Agent spec strings.
        task (str, optional): mab, mdp, igt or pacman.
        scenarios (int, optional): Number of scenarios; defaults per task.
        repeats (int, optional): Repeats per scenario; defaults per task.
        horizon (int, optional): Episodes per run; defaults per task.
        seed (int, optional): Master seed.
        logger (logging.Logger, optional): The logger.
        **kwargs: Further ExperimentConfig fields.

    Returns:
        list: RunResults ordered by scenario, agent position and repeat.
    """
    config = ExperimentConfig(task=task, agents=agents, scenarios=scenarios, repeats=repeats,
                              horizon=horizon, seed=seed, **kwargs)
    with ExperimentRunner(config, logger) as runner:
        return runner.run()
