"""
Small dense SPD kernels for the Gaussian linear posteriors.
"""

from typing import Optional, Tuple

import numpy as np
from scipy.linalg import cho_solve, solve_triangular
from scipy.linalg.lapack import dpotrf

from split_decision.exceptions import LinearAlgebraException

RIDGE = 1e-6
MIN_PIVOT = 1e-8


def cholesky(a) -> np.ndarray:
    """
    Lower-triangular Cholesky factor L with L L^T = A.

    Args:
        a (array-like): Symmetric positive-definite d x d matrix.

    Returns:
        numpy.ndarray: L.

    Raises:
        LinearAlgebraException: If A is not square, not symmetric, or a pivot is non-positive
            (the exception carries the 0-based pivot index).
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise LinearAlgebraException(f"Expected a square matrix, got shape {a.shape}")

    scale = max(1.0, float(np.abs(a).max())) if a.size else 1.0
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-10 * scale):
        raise LinearAlgebraException("Matrix is not symmetric")

    factor, info = dpotrf(a, lower=1, clean=1)
    if info > 0:
        raise LinearAlgebraException(f"Matrix is not positive-definite (pivot {info - 1})", pivot=info - 1)
    if info < 0:
        raise LinearAlgebraException(f"Cholesky factorisation failed (LAPACK info {info})")
    return factor


def solve_spd(a, b, factor: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Solves A x = b for SPD A.

    Args:
        a (array-like): SPD matrix.
        b (array-like): Right-hand side.
        factor (numpy.ndarray, optional): A precomputed lower Cholesky factor of A.

    Returns:
        numpy.ndarray: x.

    Raises:
        LinearAlgebraException: Propagated from cholesky().
    """
    if factor is None:
        factor = cholesky(a)
    return cho_solve((factor, True), np.asarray(b, dtype=float))


def mvn_sample(mu, v: float, b, rng, factor: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Draws from N(mu, v^2 B^-1).

    Args:
        mu (array-like): Mean vector.
        v (float): Scale, v >= 0.
        b (array-like): SPD precision-shaped matrix B.
        rng (numpy.random.Generator): Source of the standard normal draws.
        factor (numpy.ndarray, optional): A precomputed lower Cholesky factor of B.

    Returns:
        numpy.ndarray: mu + v (L^T)^-1 z with z standard normal.
    """
    if v < 0:
        raise ValueError("v must be non-negative")
    if factor is None:
        factor = cholesky(b)
    mu = np.asarray(mu, dtype=float)
    z = rng.standard_normal(mu.shape[0])
    return mu + v * solve_triangular(factor.T, z, lower=False)


def factor_with_ridge(b: np.ndarray, ridge: float = RIDGE,
                      min_pivot: float = MIN_PIVOT) -> Tuple[np.ndarray, np.ndarray]:
    """
    Factors B, re-adding ridge * I when B has become (nearly) singular.

    Returns:
        tuple: (B, possibly with the ridge added, and its lower Cholesky factor).

    Raises:
        LinearAlgebraException: If B is still not SPD after the ridge.
    """
    try:
        factor = cholesky(b)
        if np.diag(factor).min() >= min_pivot:
            return b, factor
    except LinearAlgebraException:
        pass

    b = b + ridge * np.eye(b.shape[0])
    try:
        return b, cholesky(b)
    except LinearAlgebraException as ex:
        raise LinearAlgebraException(f"Posterior matrix is singular after ridge flooring: {ex}",
                                     pivot=ex.pivot, inner_exception=ex)
