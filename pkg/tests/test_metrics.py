import numpy as np
import pytest

from split_decision.exceptions import MetricUnavailableException, MissingResultsException
from split_decision.metrics import agent_curves, average_wins, learning_curves, pairwise_wins
from split_decision.models.pairwise_matrix import PairwiseMatrix
from split_decision.models.run_result import RunResult


def result(agent, scenario, repeat, rewards, better=None, stream_values=None):
    rewards = np.asarray(rewards, dtype=float)
    return RunResult(agent, scenario, repeat, 0, rewards, float(rewards.sum()), np.zeros(len(rewards), dtype=int),
                     better=better, stream_values=stream_values)


def finals(agent, scenario_finals):
    """One single-episode result per (scenario, repeat) final reward."""
    return [result(agent, s, r, [value])
            for s, values in enumerate(scenario_finals) for r, value in enumerate(values)]


class TestPairwiseWins:

    def test_scenario_means_are_compared(self):
        results = finals("X", [[3.0, 5.0], [1.0, 1.0]]) + finals("Y", [[4.0, 4.0], [0.0, 3.0]])
        matrix = pairwise_wins(results)
        assert matrix.ratio("X", "Y") == (0, 1)
        assert matrix.ties[0, 1] == 1

    def test_strict_win(self):
        results = finals("X", [[10.0]]) + finals("Y", [[4.0]])
        assert pairwise_wins(results).ratio("X", "Y") == (1, 0)

    def test_identical_agents_tie_everywhere(self):
        values = [[1.0, 2.0], [-3.0, 0.5], [7.0, 7.0]]
        matrix = pairwise_wins(finals("A", values) + finals("B", values))
        assert matrix.ratio("A", "B") == (0, 0)
        assert matrix.ties[0, 1] == matrix.ties[1, 0] == 3

    def test_counts_cover_every_scenario(self):
        rng = np.random.default_rng(4)
        table = rng.integers(0, 3, size=(20, 3)).astype(float)
        results = []
        for column, agent in enumerate("ABC"):
            results.extend(finals(agent, [[v] for v in table[:, column]]))

        matrix = pairwise_wins(results)
        for i in range(3):
            for j in range(3):
                if i != j:
                    assert matrix.total(i, j) == 20

    def test_row_order_follows_agents_argument(self):
        results = finals("X", [[1.0]]) + finals("Y", [[2.0]])
        assert pairwise_wins(results, agents=["Y", "X"]).agents == ["Y", "X"]

    def test_missing_scenario(self):
        results = finals("X", [[1.0], [2.0]]) + finals("Y", [[1.0]])
        with pytest.raises(MissingResultsException):
            pairwise_wins(results)

    def test_missing_agent(self):
        with pytest.raises(MissingResultsException):
            pairwise_wins(finals("X", [[1.0]]), agents=["X", "Z"])

    def test_no_results(self):
        with pytest.raises(MissingResultsException):
            pairwise_wins([])

    def test_rows_cover_unordered_pairs(self):
        results = []
        for agent in "ABCD":
            results.extend(finals(agent, [[1.0]]))
        assert len(pairwise_wins(results).to_rows()) == 6


class TestAverageWins:

    def test_two_agents(self):
        matrix = PairwiseMatrix(["X", "Y"], [[0, 5265], [4672, 0]], [[0, 63], [63, 0]])
        averages = average_wins(matrix)
        assert averages["X"] == pytest.approx(0.5265)
        assert averages["Y"] == pytest.approx(0.4672)

    def test_all_ties_score_zero(self):
        matrix = PairwiseMatrix(["A", "B", "C"], np.zeros((3, 3)), np.full((3, 3), 10.0))
        assert average_wins(matrix) == {"A": 0.0, "B": 0.0, "C": 0.0}

    def test_dominant_agent(self):
        wins = np.array([[0, 4, 4], [0, 0, 2], [0, 2, 0]], dtype=float)
        averages = average_wins(PairwiseMatrix(["A", "B", "C"], wins, np.zeros((3, 3))))
        assert averages["A"] == 1.0
        assert averages["B"] == pytest.approx(0.25)

    def test_empty_pair_scores_zero(self):
        matrix = PairwiseMatrix(["A", "B"], np.zeros((2, 2)), np.zeros((2, 2)))
        assert average_wins(matrix) == {"A": 0.0, "B": 0.0}


class TestLearningCurves:

    def test_constant_reward_is_a_line(self):
        runs = [result("A", 0, r, np.ones(50)) for r in range(4)]
        curve, = agent_curves(runs, "cumulative_reward")
        assert np.array_equal(curve.mean, np.arange(1, 51))
        assert not curve.se.any()
        assert curve.runs == 4

    def test_standard_error(self):
        rewards = np.array([[1.0, 2.0], [3.0, 0.0], [5.0, 7.0]])
        runs = [result("A", 0, r, rewards[r]) for r in range(3)]
        curve, = agent_curves(runs, "cumulative_reward")
        cumulative = np.cumsum(rewards, axis=1)
        assert np.allclose(curve.mean, cumulative.mean(axis=0))
        assert np.allclose(curve.se, cumulative.std(axis=0, ddof=1) / np.sqrt(3))

    def test_single_run_has_zero_error(self):
        curve, = agent_curves([result("A", 0, 0, [1.0, -1.0])], "cumulative_reward")
        assert not curve.se.any()

    def test_better_action_rate(self):
        runs = [result("A", 0, 0, [0.0, 0.0], better=[True, False]),
                result("A", 0, 1, [0.0, 0.0], better=[False, False])]
        curve, = agent_curves(runs, "better_action")
        assert np.allclose(curve.mean, [0.5, 0.0])

    def test_better_action_unavailable(self):
        with pytest.raises(MetricUnavailableException):
            agent_curves([result("A", 0, 0, [1.0])], "better_action")

    def test_stream_values_split_into_two_curves(self):
        values = np.array([[2.0, -1.0], [3.0, -2.0]])
        positive, negative = agent_curves([result("A", 0, 0, [0.0, 0.0], stream_values=values)], "stream_values")
        assert positive.metric == "stream_positive"
        assert negative.metric == "stream_negative"
        assert np.array_equal(positive.mean, [2.0, 3.0])
        assert np.array_equal(negative.mean, [-1.0, -2.0])

    def test_stream_values_unavailable(self):
        with pytest.raises(MetricUnavailableException):
            agent_curves([result("TS", 0, 0, [1.0])], "stream_values")

    def test_unknown_metric(self):
        with pytest.raises(ValueError):
            agent_curves([result("A", 0, 0, [1.0])], "regret")

    def test_ragged_horizons(self):
        with pytest.raises(ValueError):
            agent_curves([result("A", 0, 0, [1.0]), result("A", 0, 1, [1.0, 2.0])], "cumulative_reward")

    def test_one_curve_per_agent(self):
        results = [result(agent, 0, r, [1.0, 2.0]) for agent in ("A", "B") for r in range(2)]
        curves = learning_curves(results, "cumulative_reward")
        assert [c.agent for c in curves] == ["A", "B"]
        assert len(curves[0].to_frame()) == 2
