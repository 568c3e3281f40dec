"""
Exceptions raised by environments, agents and the evaluation layer.
"""

from split_decision.exceptions.split_decision_exception import SplitDecisionException


class IncompatibleAgentException(SplitDecisionException):
    """
    Exception thrown when an agent cannot run on the requested task.
    """

    default_message = "The agent is not compatible with the environment"


class LinearAlgebraException(SplitDecisionException):
    """
    Exception thrown when a matrix is not symmetric positive-definite.
    """

    default_message = "Matrix is not symmetric positive-definite"

    def __init__(self, message=None, pivot=None, inner_exception=None):
        """
        Initialize a new instance of the LinearAlgebraException class.

        Args:
            message (str, optional): The message that describes the error.
            pivot (int, optional): 0-based index of the first non-positive Cholesky pivot.
            inner_exception (Exception, optional): The exception that is the cause of the current exception.
        """
        super().__init__(message, inner_exception)
        self.pivot = pivot


class EpisodeFinishedException(SplitDecisionException):
    """
    Exception thrown when an action is applied to an episode that already ended.
    """

    default_message = "The episode is finished; call reset() first"


class MetricUnavailableException(SplitDecisionException):
    """
    Exception thrown when a learning-curve metric cannot be computed for an agent.
    """

    default_message = "The metric is not available for this agent class"


class MissingResultsException(SplitDecisionException):
    """
    Exception thrown when pairwise comparison finds an agent without results on a scenario.
    """

    default_message = "Every agent needs results on every scenario"
