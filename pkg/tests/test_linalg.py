import math

import numpy as np
import pytest

from split_decision.agents.linalg import RIDGE, cholesky, factor_with_ridge, mvn_sample, solve_spd
from split_decision.exceptions import LinearAlgebraException
from tests.conftest import random_spd


class TestCholesky:

    def test_identity(self):
        assert np.array_equal(cholesky(np.eye(3)), np.eye(3))

    def test_hand_factorisation(self):
        factor = cholesky([[4.0, 2.0], [2.0, 3.0]])
        assert np.allclose(factor, [[2.0, 0.0], [1.0, math.sqrt(2.0)]])
        assert np.allclose(factor @ factor.T, [[4.0, 2.0], [2.0, 3.0]])

    def test_indefinite_reports_pivot(self):
        with pytest.raises(LinearAlgebraException) as info:
            cholesky([[1.0, 2.0], [2.0, 1.0]])
        assert info.value.pivot == 1

    def test_first_pivot(self):
        with pytest.raises(LinearAlgebraException) as info:
            cholesky([[-1.0, 0.0], [0.0, 1.0]])
        assert info.value.pivot == 0

    def test_non_symmetric(self):
        with pytest.raises(LinearAlgebraException):
            cholesky([[2.0, 1.0], [0.0, 2.0]])

    def test_non_square(self):
        with pytest.raises(LinearAlgebraException):
            cholesky(np.ones((2, 3)))


class TestSolve:

    def test_identity(self):
        assert np.allclose(solve_spd(np.eye(3), [1.0, 2.0, 3.0]), [1.0, 2.0, 3.0])

    def test_diagonal(self):
        assert np.allclose(solve_spd([[2.0, 0.0], [0.0, 4.0]], [2.0, 8.0]), [1.0, 2.0])

    def test_random_system(self, rng):
        a = random_spd(rng, 8)
        x = rng.standard_normal(8)
        assert np.abs(solve_spd(a, a @ x) - x).max() < 1e-8

    def test_propagates_failure(self):
        with pytest.raises(LinearAlgebraException):
            solve_spd([[1.0, 2.0], [2.0, 1.0]], [1.0, 1.0])


class TestMvnSample:

    def test_zero_scale_returns_mean(self, rng):
        mu = np.array([1.0, -2.0])
        assert np.array_equal(mvn_sample(mu, 0.0, np.eye(2), rng), mu)

    def test_moments(self, rng):
        mu = np.array([1.0, -1.0, 0.5])
        b = np.array([[2.0, 0.5, 0.0], [0.5, 1.0, 0.2], [0.0, 0.2, 1.5]])
        v = 1.5
        n = 10 ** 5
        factor = cholesky(b)
        draws = np.array([mvn_sample(mu, v, b, rng, factor) for _ in range(n)])

        cov = v ** 2 * np.linalg.inv(b)
        mean_se = np.sqrt(np.diag(cov) / n)
        assert np.all(np.abs(draws.mean(axis=0) - mu) < 4 * mean_se)

        # var(X_i X_j) = S_ii S_jj + S_ij^2 for centred normals
        cov_se = np.sqrt((np.outer(np.diag(cov), np.diag(cov)) + cov ** 2) / n)
        assert np.all(np.abs(np.cov(draws.T) - cov) < 4 * cov_se)

    def test_negative_scale(self, rng):
        with pytest.raises(ValueError):
            mvn_sample(np.zeros(2), -1.0, np.eye(2), rng)


class TestRidge:

    def test_well_conditioned_untouched(self):
        b = np.array([[2.0, 0.0], [0.0, 1.0]])
        floored, factor = factor_with_ridge(b)
        assert np.array_equal(floored, b)
        assert np.allclose(factor @ factor.T, b)

    def test_singular_gets_ridge(self):
        b = np.array([[1.0, 0.0], [0.0, 0.0]])
        floored, factor = factor_with_ridge(b)
        assert np.allclose(floored, b + RIDGE * np.eye(2))
        assert np.allclose(factor @ factor.T, floored)

    def test_hopeless_matrix(self):
        with pytest.raises(LinearAlgebraException):
            factor_with_ridge(np.array([[-1.0, 0.0], [0.0, 1.0]]))
