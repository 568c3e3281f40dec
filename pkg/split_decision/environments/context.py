"""
Context vectors for contextual agents.
"""

from dataclasses import dataclass

import numpy as np

from split_decision.environments.pacman import PacmanObservation, pacman_features
from split_decision.exceptions import IncompatibleAgentException

PACMAN_CONTEXT_DIM = 8
NORM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ContextSpec:
    """
    Feature map from observations to d-vectors.

    kind "constant" emits a vector of ones; kind "pacman" emits the fixed
    8-dimensional PacMan features.
    """

    dimension: int = 1
    kind: str = "constant"
    bound: float = None
    initial_dots: int = 0

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("Context dimension must be positive")
        if self.kind == "pacman" and self.dimension != PACMAN_CONTEXT_DIM:
            raise ValueError(f"PacMan contexts have dimension {PACMAN_CONTEXT_DIM}")
        if self.kind not in ("constant", "pacman"):
            raise ValueError(f"Unknown context kind: {self.kind}")

    @property
    def norm_bound(self) -> float:
        return self.bound if self.bound is not None else float(np.sqrt(self.dimension))

    def check(self, dimension: int):
        """
        Raises:
            IncompatibleAgentException: If an agent expects another dimension.
        """
        if dimension != self.dimension:
            raise IncompatibleAgentException(
                f"Context dimension mismatch: environment provides {self.dimension}, agent expects {dimension}")


def context_spec_for(env) -> ContextSpec:
    """
    Returns:
        ContextSpec: The context spec of an environment (PacMan features or a constant).
    """
    inner = getattr(env, "env", env)
    if getattr(inner, "name", None) == "pacman":
        return ContextSpec(dimension=PACMAN_CONTEXT_DIM, kind="pacman", initial_dots=inner.initial_dots)
    return ContextSpec()


def context_features(spec: ContextSpec, observation) -> np.ndarray:
    """
    Maps an observation to its context vector.

    Args:
        spec (ContextSpec): The feature map.
        observation: An environment observation.

    Returns:
        numpy.ndarray: Vector of length spec.dimension with finite entries and norm within the bound.

    Raises:
        IncompatibleAgentException: If the observation does not suit the spec.
        ValueError: If the features are non-finite or exceed the norm bound.
    """
    if spec.kind == "constant":
        x = np.ones(spec.dimension)
    elif isinstance(observation, PacmanObservation):
        x = pacman_features(observation, spec.initial_dots)
    else:
        raise IncompatibleAgentException("PacMan context requested for a non-PacMan observation")

    if not np.all(np.isfinite(x)):
        raise ValueError(f"Non-finite context features: {x}")
    if np.linalg.norm(x) > spec.norm_bound + NORM_TOLERANCE:
        raise ValueError(f"Context norm {np.linalg.norm(x):.6g} exceeds the bound {spec.norm_bound:.6g}")
    return x
