"""
Pairwise win counts between agents.
"""

from typing import List

import numpy as np


class PairwiseMatrix:
    """
    Counts of scenarios where agent i's mean final reward strictly exceeds agent j's.
    """

    def __init__(self, agents: List[str], wins, ties):
        """
        Initialize a new instance of the PairwiseMatrix class.

        Args:
            agents (list): Agent spec strings, in row order.
            wins (array-like): wins[i][j], units where agent i beats agent j.
            ties (array-like): ties[i][j], units where agents i and j are equal (symmetric).
        """
        self.agents = list(agents)
        self.wins = np.asarray(wins, dtype=float)
        self.ties = np.asarray(ties, dtype=float)

        size = len(self.agents)
        if self.wins.shape != (size, size) or self.ties.shape != (size, size):
            raise ValueError("wins and ties must be square matrices matching the agent list")

    def index(self, agent: str) -> int:
        return self.agents.index(agent)

    def total(self, i: int, j: int) -> float:
        return self.wins[i, j] + self.wins[j, i] + self.ties[i, j]

    def ratio(self, x: str, y: str):
        """
        Returns:
            tuple: (n, m) where x beats y n times and y beats x m times.
        """
        i, j = self.index(x), self.index(y)
        return (self.wins[i, j], self.wins[j, i])

    def to_rows(self):
        """
        Returns:
            list: One pairwise.csv row per unordered agent pair.
        """
        rows = []
        for i in range(len(self.agents)):
            for j in range(i + 1, len(self.agents)):
                rows.append({
                    "agent_i": self.agents[i],
                    "agent_j": self.agents[j],
                    "wins_i": int(self.wins[i, j]) if float(self.wins[i, j]).is_integer() else self.wins[i, j],
                    "wins_j": int(self.wins[j, i]) if float(self.wins[j, i]).is_integer() else self.wins[j, i],
                    "ties": int(self.ties[i, j]) if float(self.ties[i, j]).is_integer() else self.ties[i, j],
                })
        return rows
