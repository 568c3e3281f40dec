"""
Hyperparameters shared by every agent of an experiment.
"""


class AgentOptions:
    """
    Hyperparameters shared by every agent of an experiment.
    """

    def __init__(self,
                 gamma=0.95,
                 epsilon=0.05,
                 exp3_gamma=0.1,
                 linucb_alpha=1.0,
                 cts_r=1.0,
                 cts_epsilon=0.5,
                 cts_gamma=0.1,
                 jitter=True):
        """
        Initialize a new instance of the AgentOptions class.

        Args:
            gamma (float): Discount factor of the tabular agents.
            epsilon (float): Exploration rate of every epsilon-greedy policy.
            exp3_gamma (float): Exploration rate of EXP3 and gEXP3.
            linucb_alpha (float): Width of the LinUCB confidence bonus.
            cts_r (float): R constant of the contextual Thompson sampling scale v.
            cts_epsilon (float): epsilon constant of the scale v, in (0, 1].
            cts_gamma (float): confidence constant of the scale v, in (0, 1].
            jitter (bool): Whether behavior profiles draw their parameter jitter.
        """
        self.gamma = gamma
        self.epsilon = epsilon
        self.exp3_gamma = exp3_gamma
        self.linucb_alpha = linucb_alpha
        self.cts_r = cts_r
        self.cts_epsilon = cts_epsilon
        self.cts_gamma = cts_gamma
        self.jitter = jitter

    def validate(self):
        """
        Validates the hyperparameters.

        Raises:
            ValueError: When a hyperparameter is out of range.
        """
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError("gamma must lie in [0, 1]")

        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon must lie in [0, 1]")

        if not 0.0 < self.exp3_gamma <= 1.0:
            raise ValueError("exp3_gamma must lie in (0, 1]")

        if self.linucb_alpha < 0:
            raise ValueError("linucb_alpha must be non-negative")

        if self.cts_r <= 0:
            raise ValueError("cts_r must be positive")

        if not 0.0 < self.cts_epsilon <= 1.0:
            raise ValueError("cts_epsilon must lie in (0, 1]")

        if not 0.0 < self.cts_gamma <= 1.0:
            raise ValueError("cts_gamma must lie in (0, 1]")

    def to_dict(self):
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)
