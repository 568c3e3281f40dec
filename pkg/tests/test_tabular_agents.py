import numpy as np
import pytest

from split_decision.agents.base import Transition
from split_decision.agents.tabular import (
    DoubleQLearning,
    QLearning,
    QTable,
    Sarsa,
    SplitQLearning,
    SplitQState,
    VisitCounts,
    learning_rate,
    sql_select,
    sql_update,
)
from split_decision.environments import GamblingMdp, TwoArmBandit
from split_decision.models.behavior_profile import BehaviorProfile
from split_decision.models.reward import RewardPair
from split_decision.models.scenario import BimodalSpec, TwoArmScenario
from split_decision.rng import RngStream

STANDARD = BehaviorProfile.Standard.nominal


def play_episode(agent, env, reward_map=None):
    """SARSA-style episode loop; reward_map rewrites every reward before the agent sees it."""
    observation = env.reset()
    state = env.state_id(observation)
    action = agent.select(state, env.legal_actions(observation))
    while True:
        observation, reward, done = env.step(action)
        if reward_map is not None:
            reward = reward_map(reward)
        next_state = env.state_id(observation)
        if done:
            agent.update(Transition(state, action, reward, next_state, True))
            return
        next_legal = env.legal_actions(observation)
        next_action = agent.select(next_state, next_legal)
        agent.update(Transition(state, action, reward, next_state, False, next_legal, next_action))
        state, action = next_state, next_action


class TestLearningRate:

    def test_first_visit(self):
        assert learning_rate(1) == 1.0

    def test_polynomial_decay(self):
        assert learning_rate(32) == pytest.approx(0.0625)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            learning_rate(0)


class TestQTable:

    def test_absent_entries_read_zero(self):
        table = QTable(3)
        assert table.get("s", 2) == 0.0
        assert np.array_equal(table.values("s"), np.zeros(3))
        assert table.max("s", 2) == 0.0

    def test_set_then_get(self):
        table = QTable(2)
        table.set("s", 1, 3.5)
        assert table.get("s", 1) == 3.5
        assert table.max("s") == 3.5


class TestVisitCounts:

    def test_visit_increments(self):
        counts = VisitCounts(2)
        assert counts.visit("s", 1) == 1
        assert counts.visit("s", 1) == 2
        assert counts.count("s", 0) == 0
        assert counts.total() == 2


class TestSqlSelect:

    def test_argmax_of_summed_tables(self, rng):
        q = SplitQState(2, STANDARD, epsilon=0.0)
        q.q_plus.set("s", 0, 1.0)
        q.q_minus.set("s", 1, -5.0)
        assert sql_select("s", q, rng) == 0

    def test_zero_tables_are_uniform(self, rng):
        q = SplitQState(2, STANDARD, epsilon=0.0)
        choices = [sql_select("s", q, rng) for _ in range(10 ** 4)]
        assert abs(np.mean(choices) - 0.5) < 0.02

    def test_full_exploration_ignores_tables(self, rng):
        q = SplitQState(2, STANDARD, epsilon=1.0)
        q.q_plus.set("s", 0, 100.0)
        choices = [sql_select("s", q, rng) for _ in range(10 ** 4)]
        assert abs(np.mean(choices) - 0.5) < 0.02

    def test_legal_subset(self, rng):
        q = SplitQState(3, STANDARD, epsilon=0.0)
        q.q_plus.set("s", 2, 10.0)
        assert all(sql_select("s", q, rng, n_legal=2) in (0, 1) for _ in range(100))


class TestSqlUpdate:

    def test_standard_terminal(self):
        q = sql_update(SplitQState(2, STANDARD), "s", 0, RewardPair(10, 0), "t", True)
        assert q.q_plus.get("s", 0) == 10.0
        assert q.q_minus.get("s", 0) == 0.0

    def test_bvftd_weights_positive_reward(self):
        q = sql_update(SplitQState(2, BehaviorProfile.bvFTD.nominal), "s", 1, RewardPair(1, 0), "t", True)
        assert q.q_plus.get("s", 1) == pytest.approx(100.0)

    def test_bootstraps_on_each_stream(self):
        q = SplitQState(2, STANDARD, gamma=0.5)
        q.q_plus.set("t", 1, 4.0)
        q.q_minus.set("t", 0, -2.0)
        q.q_minus.set("t", 1, -8.0)
        sql_update(q, "s", 0, RewardPair(1, -1), "t", False, next_legal=2)
        assert q.q_plus.get("s", 0) == pytest.approx(1 + 0.5 * 4.0)
        assert q.q_minus.get("s", 0) == pytest.approx(-1 + 0.5 * -2.0)

    def test_streams_share_one_learning_rate(self):
        q = SplitQState(1, STANDARD)
        sql_update(q, "s", 0, RewardPair(10, -10), "t", True)
        sql_update(q, "s", 0, RewardPair(0, 0), "t", True)
        alpha = learning_rate(2)
        assert q.q_plus.get("s", 0) == pytest.approx(10 - alpha * 10)
        assert q.q_minus.get("s", 0) == pytest.approx(-10 + alpha * 10)
        assert q.visits.count("s", 0) == 2


class TestBaselineUpdates:

    def test_q_learning_terminal(self, rng):
        agent = QLearning(2, rng)
        agent.update(Transition("s", 0, RewardPair(10, 0), "t", True))
        assert agent.table.get("s", 0) == 10.0

    def test_double_q_learning_terminal(self, rng):
        agent = DoubleQLearning(2, rng)
        agent.update(Transition("s", 0, RewardPair(1, 0), "t", True))
        values = sorted([agent.table_a.get("s", 0), agent.table_b.get("s", 0)])
        assert values == [0.0, 1.0]

    def test_double_q_learning_without_discount(self, rng):
        agent = DoubleQLearning(2, rng, gamma=0.0)
        for table in (agent.table_a, agent.table_b):
            table.set("t", 0, 1e6)
            table.set("t", 1, 1e6)
        agent.update(Transition("s", 0, RewardPair(2, 0), "t", False, 2))
        values = sorted([agent.table_a.get("s", 0), agent.table_b.get("s", 0)])
        assert values == [0.0, 2.0]

    def test_double_q_learning_tables_agree(self, rng):
        agent = DoubleQLearning(1, rng)
        for reward in rng.normal(10.0, 1.0, 10 ** 4):
            agent.update(Transition("s", 0, RewardPair(float(reward), 0), "t", True))
        assert abs(agent.table_a.get("s", 0) - agent.table_b.get("s", 0)) < 0.5
        assert agent.table_a.get("s", 0) == pytest.approx(10.0, abs=0.5)

    def test_sarsa_terminal(self, rng):
        agent = Sarsa(2, rng)
        agent.update(Transition("s", 1, RewardPair(5, 0), "t", True))
        assert agent.table.get("s", 1) == 5.0

    def test_sarsa_needs_next_action(self, rng):
        agent = Sarsa(2, rng)
        with pytest.raises(ValueError):
            agent.update(Transition("s", 1, RewardPair(5, 0), "t", False, 2))


def test_sql_reduces_to_q_learning_without_negative_rewards():
    """Standard SQL fed (r+, 0) keeps Q- at zero and Q+ equal to Q-Learning's table on r+."""
    scenario = TwoArmScenario(left=BimodalSpec(-20.0, 10.0, 15.0, 5.0, 0.5),
                              right=BimodalSpec(30.0, 20.0, -5.0, 5.0, 0.5))

    def positive_only(rp):
        return RewardPair(rp.positive, 0.0)

    sql = SplitQLearning(2, RngStream(3, 1), STANDARD)
    ql = QLearning(2, RngStream(3, 1))
    sql_env = GamblingMdp(scenario, RngStream(3, 2))
    ql_env = GamblingMdp(scenario, RngStream(3, 2))

    for _ in range(5000):
        play_episode(sql, sql_env, positive_only)
        play_episode(ql, ql_env, positive_only)
        for state in (GamblingMdp.STATE_A, GamblingMdp.STATE_B, GamblingMdp.STATE_C):
            assert np.array_equal(sql.q.q_plus.values(state), ql.table.values(state))
            assert not sql.q.q_minus.values(state).any()


@pytest.mark.parametrize("profile, silent", [
    (BehaviorProfile.NegativeOnly, "q_plus"),
    (BehaviorProfile.PositiveOnly, "q_minus"),
])
def test_one_sided_profiles_leave_the_other_table_at_zero(profile, silent, make_rng):
    scenario = TwoArmScenario(left=BimodalSpec(-20.0, 10.0, 15.0, 5.0, 0.5),
                              right=BimodalSpec(30.0, 20.0, -5.0, 5.0, 0.5))
    agent = SplitQLearning(2, make_rng(1), profile.nominal)
    env = GamblingMdp(scenario, make_rng(2))
    for _ in range(2000):
        play_episode(agent, env)
    table = getattr(agent.q, silent)
    for state in (GamblingMdp.STATE_A, GamblingMdp.STATE_B, GamblingMdp.STATE_C):
        assert not table.values(state).any()


def test_visit_counts_match_update_count(deterministic_scenario, make_rng):
    sql = SplitQLearning(2, make_rng(1), STANDARD)
    ql = QLearning(2, make_rng(1))
    episodes = 300
    for agent, stream_id in ((sql, 2), (ql, 3)):
        env = GamblingMdp(deterministic_scenario, make_rng(stream_id))
        for _ in range(episodes):
            play_episode(agent, env)
    # start state then one terminal step per episode
    assert sql.q.visits.total() == 2 * episodes
    assert ql.counts.total() == 2 * episodes


@pytest.mark.parametrize("profile", list(BehaviorProfile))
def test_random_updates_keep_values_finite(profile, rng):
    q = SplitQState(2, profile.nominal)
    for _ in range(10 ** 4):
        reward = RewardPair(float(rng.uniform(0, 1e3)), float(rng.uniform(-1e3, 0)))
        sql_update(q, int(rng.integers(10)), int(rng.integers(2)), reward,
                   int(rng.integers(10)), bool(rng.random() < 0.2), next_legal=2)
    for state in range(10):
        assert np.all(np.isfinite(q.q_plus.values(state)))
        assert np.all(np.isfinite(q.q_minus.values(state)))

def test_sarsa_matches_q_learning_under_greedy_policy(deterministic_scenario):
    ql = QLearning(2, RngStream(5, 1), epsilon=0.0)
    sarsa = Sarsa(2, RngStream(5, 1), epsilon=0.0)
    ql_env = GamblingMdp(deterministic_scenario, RngStream(5, 2))
    sarsa_env = GamblingMdp(deterministic_scenario, RngStream(5, 2))
    for _ in range(200):
        play_episode(ql, ql_env)
        play_episode(sarsa, sarsa_env)
    for state in (GamblingMdp.STATE_A, GamblingMdp.STATE_B, GamblingMdp.STATE_C):
        assert np.array_equal(ql.table.values(state), sarsa.table.values(state))


def test_uniform_exploration_estimates_arm_means(make_rng):
    scenario = TwoArmScenario(left=BimodalSpec(-3.0, 1.0, -3.0, 1.0, 0.5),
                              right=BimodalSpec(2.0, 1.0, 2.0, 1.0, 0.5))
    agent = Sarsa(2, make_rng(1), epsilon=1.0)
    env = TwoArmBandit(scenario, make_rng(2))
    for _ in range(20000):
        play_episode(agent, env)
    assert agent.table.values(0) == pytest.approx([-3.0, 2.0], abs=0.1)


@pytest.mark.slow
@pytest.mark.parametrize("factory", [
    lambda rng: QLearning(2, rng),
    lambda rng: Sarsa(2, rng),
    lambda rng: SplitQLearning(2, rng, STANDARD),
])
def test_deterministic_mdp_converges(factory, deterministic_scenario, make_rng):
    agent = factory(make_rng(1))
    env = GamblingMdp(deterministic_scenario, make_rng(2))
    for _ in range(50000):
        play_episode(agent, env)

    if isinstance(agent, SplitQLearning):
        def values(state):
            return agent.q.combined(state)
    else:
        values = agent.table.values

    start = values(GamblingMdp.STATE_A)
    assert np.argmax(start) == 1
    assert start == pytest.approx([0.95 * -5.0, 0.95 * 10.0], abs=1e-3)
    assert values(GamblingMdp.STATE_B)[0] == pytest.approx(-5.0, abs=1e-3)
    assert values(GamblingMdp.STATE_C)[0] == pytest.approx(10.0, abs=1e-3)
