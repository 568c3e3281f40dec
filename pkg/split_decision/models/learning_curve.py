"""
Learning-curve model.
"""

import numpy as np
import pandas as pd


class LearningCurve:
    """
    Mean and standard error of a per-episode metric across runs of one agent.
    """

    def __init__(self, agent, metric, mean, se, runs):
        self.agent = agent
        self.metric = metric
        self.mean = np.asarray(mean, dtype=float)
        self.se = np.asarray(se, dtype=float)
        self.runs = int(runs)
        self.steps = np.arange(1, len(self.mean) + 1)

    def to_frame(self) -> pd.DataFrame:
        """
        Returns:
            pandas.DataFrame: Rows (agent, step, metric, mean, se).
        """
        return pd.DataFrame({
            "agent": self.agent,
            "step": self.steps,
            "metric": self.metric,
            "mean": self.mean,
            "se": self.se,
        })

    def __str__(self):
        return f"{self.agent} {self.metric}: {len(self.mean)} steps over {self.runs} runs"
