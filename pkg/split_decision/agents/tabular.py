"""
Tabular RL agents: Split Q-Learning (SQL) and its profile variants, plus the
Q-Learning, Double Q-Learning and SARSA baselines.

All agents share the polynomial learning rate 1 / n(s, a)^0.8 and
epsilon-greedy exploration.
"""

from typing import Dict, Hashable, Optional

import numpy as np

from split_decision.agents.base import TabularAgent, Transition, argmax_random_tie
from split_decision.models.reward import RewardPair, SplitParams

LEARNING_RATE_EXPONENT = 0.8


def learning_rate(n: int) -> float:
    """
    Polynomial learning rate n^-0.8.

    Args:
        n (int): Visit count of (s, a), counting the update being applied.

    Raises:
        ValueError: If n < 1.
    """
    if n < 1:
        raise ValueError("The visit count must be at least 1")
    return float(n) ** -LEARNING_RATE_EXPONENT


def epsilon_greedy(values: np.ndarray, epsilon: float, rng) -> int:
    if rng.random() < epsilon:
        return int(rng.integers(len(values)))
    return argmax_random_tie(values, rng)


class QTable:
    """
    Action values keyed by state id; absent entries read as 0.
    """

    def __init__(self, n_actions: int):
        self.n_actions = n_actions
        self._values: Dict[Hashable, np.ndarray] = {}

    def values(self, state, n_legal: Optional[int] = None) -> np.ndarray:
        n = n_legal or self.n_actions
        row = self._values.get(state)
        return np.zeros(n) if row is None else row[:n].copy()

    def get(self, state, action: int) -> float:
        row = self._values.get(state)
        return 0.0 if row is None else float(row[action])

    def set(self, state, action: int, value: float):
        row = self._values.get(state)
        if row is None:
            row = self._values[state] = np.zeros(self.n_actions)
        row[action] = value

    def max(self, state, n_legal: Optional[int] = None) -> float:
        return float(self.values(state, n_legal).max())


class VisitCounts:
    """
    Visit counts n(s, a) keyed by state id.
    """

    def __init__(self, n_actions: int):
        self.n_actions = n_actions
        self._counts: Dict[Hashable, np.ndarray] = {}

    def visit(self, state, action: int) -> int:
        """
        Increments n(s, a) and returns the new count.
        """
        row = self._counts.get(state)
        if row is None:
            row = self._counts[state] = np.zeros(self.n_actions, dtype=np.int64)
        row[action] += 1
        return int(row[action])

    def count(self, state, action: int) -> int:
        row = self._counts.get(state)
        return 0 if row is None else int(row[action])

    def total(self) -> int:
        return int(sum(int(row.sum()) for row in self._counts.values()))


class SplitQState:
    """
    Positive and negative Q tables over one visit count; the combined value is always their sum, never stored.
    """

    def __init__(self, n_actions: int, params: SplitParams, gamma: float = 0.95, epsilon: float = 0.05):
        self.q_plus = QTable(n_actions)
        self.q_minus = QTable(n_actions)
        self.visits = VisitCounts(n_actions)
        self.params = params
        self.gamma = gamma
        self.epsilon = epsilon

    def combined(self, state, n_legal: Optional[int] = None) -> np.ndarray:
        return self.q_plus.values(state, n_legal) + self.q_minus.values(state, n_legal)


def sql_select(state, q: SplitQState, rng, n_legal: Optional[int] = None) -> int:
    """
    Epsilon-greedy over Q+(s, .) + Q-(s, .), ties uniform.
    """
    return epsilon_greedy(q.combined(state, n_legal), q.epsilon, rng)


def sql_update(q: SplitQState, s, a: int, rp: RewardPair, s_next, done: bool,
               next_legal: Optional[int] = None) -> SplitQState:
    """
    Split Q update of (s, a); both streams share one learning rate and read their pre-update values.

    Q+ <- lambda+ Q+ + alpha (w+ r+ + gamma max Q+(s', .) - Q+), likewise for Q-.
    Terminal transitions bootstrap 0.
    """
    p = q.params
    q_plus, q_minus = q.q_plus.get(s, a), q.q_minus.get(s, a)
    next_plus = 0.0 if done else q.q_plus.max(s_next, next_legal)
    next_minus = 0.0 if done else q.q_minus.max(s_next, next_legal)

    alpha = learning_rate(q.visits.visit(s, a))

    q.q_plus.set(s, a, p.lambda_plus * q_plus + alpha * (p.w_plus * rp.positive + q.gamma * next_plus - q_plus))
    q.q_minus.set(s, a, p.lambda_minus * q_minus + alpha * (p.w_minus * rp.negative + q.gamma * next_minus - q_minus))
    return q


class _Tabular(TabularAgent):

    def __init__(self, n_actions, rng, gamma=0.95, epsilon=0.05, spec="", params=None):
        super().__init__(n_actions, rng, spec, params)
        self.gamma = gamma
        self.epsilon = epsilon
        self.start_state = None

    def _remember_start(self, state):
        if self.start_state is None:
            self.start_state = state


class SplitQLearning(_Tabular):
    """
    Split Q-Learning.
    """

    def __init__(self, n_actions, rng, params: SplitParams, gamma=0.95, epsilon=0.05, spec="SQL"):
        super().__init__(n_actions, rng, gamma, epsilon, spec, params)
        self.q = SplitQState(n_actions, params, gamma, epsilon)

    def select(self, state, n_legal=None):
        self._remember_start(state)
        return sql_select(state, self.q, self._rng, n_legal)

    def update(self, transition: Transition):
        t = transition
        sql_update(self.q, t.state, t.action, t.reward, t.next_state, t.done, t.next_legal)

    def stream_values(self, action):
        return (self.q.q_plus.get(self.start_state, action), self.q.q_minus.get(self.start_state, action))


class QLearning(_Tabular):
    """
    Q-Learning on the combined reward.
    """

    def __init__(self, n_actions, rng, gamma=0.95, epsilon=0.05, spec="QL"):
        super().__init__(n_actions, rng, gamma, epsilon, spec)
        self.table = QTable(n_actions)
        self.counts = VisitCounts(n_actions)

    def select(self, state, n_legal=None):
        self._remember_start(state)
        return epsilon_greedy(self.table.values(state, n_legal), self.epsilon, self._rng)

    def update(self, transition: Transition):
        t = transition
        q = self.table.get(t.state, t.action)
        bootstrap = 0.0 if t.done else self.table.max(t.next_state, t.next_legal)
        alpha = learning_rate(self.counts.visit(t.state, t.action))
        self.table.set(t.state, t.action, q + alpha * (t.reward.combined() + self.gamma * bootstrap - q))


class DoubleQLearning(_Tabular):
    """
    Double Q-Learning: a coin flip picks the table to update, the other evaluates its argmax.
    """

    def __init__(self, n_actions, rng, gamma=0.95, epsilon=0.05, spec="DQL"):
        super().__init__(n_actions, rng, gamma, epsilon, spec)
        self.table_a = QTable(n_actions)
        self.table_b = QTable(n_actions)
        self.counts = VisitCounts(n_actions)

    def select(self, state, n_legal=None):
        self._remember_start(state)
        values = self.table_a.values(state, n_legal) + self.table_b.values(state, n_legal)
        return epsilon_greedy(values, self.epsilon, self._rng)

    def update(self, transition: Transition):
        t = transition
        if self._rng.random() < 0.5:
            target, evaluator = self.table_a, self.table_b
        else:
            target, evaluator = self.table_b, self.table_a

        q = target.get(t.state, t.action)
        if t.done:
            bootstrap = 0.0
        else:
            best = argmax_random_tie(target.values(t.next_state, t.next_legal), self._rng)
            bootstrap = evaluator.get(t.next_state, best)
        alpha = learning_rate(self.counts.visit(t.state, t.action))
        target.set(t.state, t.action, q + alpha * (t.reward.combined() + self.gamma * bootstrap - q))


class Sarsa(_Tabular):
    """
    On-policy SARSA; bootstraps on the next action the same policy already chose.
    """

    def __init__(self, n_actions, rng, gamma=0.95, epsilon=0.05, spec="SARSA"):
        super().__init__(n_actions, rng, gamma, epsilon, spec)
        self.table = QTable(n_actions)
        self.counts = VisitCounts(n_actions)

    def select(self, state, n_legal=None):
        self._remember_start(state)
        return epsilon_greedy(self.table.values(state, n_legal), self.epsilon, self._rng)

    def update(self, transition: Transition):
        t = transition
        if not t.done and t.next_action is None:
            raise ValueError("SARSA needs the next action of non-terminal transitions")
        q = self.table.get(t.state, t.action)
        bootstrap = 0.0 if t.done else self.table.get(t.next_state, t.next_action)
        alpha = learning_rate(self.counts.visit(t.state, t.action))
        self.table.set(t.state, t.action, q + alpha * (t.reward.combined() + self.gamma * bootstrap - q))
