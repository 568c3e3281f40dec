"""
Iowa Gambling Task with the two payoff schemes.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from split_decision.environments.base import Environment
from split_decision.exceptions import EpisodeFinishedException
from split_decision.models.reward import RewardPair

DECKS = ("A", "B", "C", "D")


@dataclass(frozen=True)
class IgtDeck:
    """
    A deck paying a fixed win per card and at most one loss per draw.

    losses holds (amount <= 0, probability) pairs; the remaining probability mass is a zero loss.
    """

    win: float
    losses: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        if sum(p for _, p in self.losses) > 1.0 + 1e-12:
            raise ValueError("Loss probabilities of a deck must sum to at most 1")
        if any(amount > 0 for amount, _ in self.losses):
            raise ValueError("Loss amounts must be non-positive")

    @property
    def expected_value(self) -> float:
        return self.win + sum(amount * p for amount, p in self.losses)

    def sample_losses(self, rng, size=None):
        """
        Draws losses; the events of a deck are mutually exclusive.

        Args:
            rng (numpy.random.Generator): Source of randomness.
            size (int, optional): Number of draws; None returns a float.

        Returns:
            float or numpy.ndarray: Loss amounts (<= 0).
        """
        amounts = np.array([amount for amount, _ in self.losses] + [0.0])
        edges = np.cumsum([p for _, p in self.losses])
        u = rng.random(size)
        picked = amounts[np.searchsorted(edges, u, side="right")]
        return float(picked) if size is None else picked


_BAD_A = IgtDeck(100.0, ((-150.0, 0.1), (-200.0, 0.1), (-250.0, 0.1), (-300.0, 0.1), (-350.0, 0.1)))
_BAD_B = IgtDeck(100.0, ((-1250.0, 0.1),))
_GOOD_D = IgtDeck(50.0, ((-250.0, 0.1),))

SCHEMES = {
    1: (_BAD_A, _BAD_B, IgtDeck(50.0, ((-25.0, 0.1), (-75.0, 0.1), (-50.0, 0.3))), _GOOD_D),
    2: (_BAD_A, _BAD_B, IgtDeck(50.0, ((-50.0, 0.5),)), _GOOD_D),
}


class IgtEnv(Environment):
    """
    One draw per episode: pick a deck, receive its win and loss simultaneously.
    """

    name = "igt"
    n_actions = 4
    better_actions = frozenset({2, 3})

    def __init__(self, scheme: int = 1, rng=None):
        """
        Initialize a new instance of the IgtEnv class.

        Args:
            scheme (int): Payoff scheme, 1 or 2.
            rng (RngStream, optional): Source of the loss draws.

        Raises:
            ValueError: If the scheme is unknown.
        """
        if scheme not in SCHEMES:
            raise ValueError(f"Unknown IGT scheme: {scheme}")
        super().__init__(rng)
        self.scheme = scheme
        self.decks = SCHEMES[scheme]

    def deck(self, deck) -> IgtDeck:
        index = DECKS.index(deck) if isinstance(deck, str) else int(deck)
        return self.decks[index]

    def draw(self, deck, rng=None) -> RewardPair:
        """
        Draws one card.

        Args:
            deck (int or str): Deck index 0-3 or letter A-D.
            rng (numpy.random.Generator, optional): Overrides the environment's stream.

        Returns:
            RewardPair: (win per card, sampled loss).
        """
        chosen = self.deck(deck)
        loss = chosen.sample_losses(rng if rng is not None else self._rng)
        return RewardPair(chosen.win, loss)

    def reset(self):
        self._done = False
        return 0

    def step(self, action):
        if self._done:
            raise EpisodeFinishedException()
        if not 0 <= action < self.n_actions:
            raise ValueError(f"Invalid deck: {action}")
        self._done = True
        return action + 1, self.draw(action), True

    def reward_bounds(self):
        low = min(d.win + min([amount for amount, _ in d.losses] + [0.0]) for d in self.decks)
        high = max(d.win for d in self.decks)
        return (low, high)

    def describe(self):
        return {
            "name": self.name,
            "scheme": self.scheme,
            "decks": {letter: {"win": d.win, "losses": [list(loss) for loss in d.losses]}
                      for letter, d in zip(DECKS, self.decks)},
        }


def igt_draw(env: IgtEnv, deck, rng=None) -> RewardPair:
    """
    Draws a card from a deck of an IGT environment.
    """
    return env.draw(deck, rng)
