"""
Exceptions for the split_decision package.
"""

from split_decision.exceptions.split_decision_exception import SplitDecisionException
from split_decision.exceptions.configuration_exception import (
    ConfigurationException,
    UnknownAgentSpecException,
    InvalidEnumException,
    ConfigFileNotFoundException,
)
from split_decision.exceptions.simulation_exceptions import (
    IncompatibleAgentException,
    LinearAlgebraException,
    EpisodeFinishedException,
    MetricUnavailableException,
    MissingResultsException,
)
