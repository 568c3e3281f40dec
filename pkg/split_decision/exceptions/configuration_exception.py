"""
Exceptions raised while resolving an experiment configuration.
"""

from split_decision.exceptions.split_decision_exception import SplitDecisionException


class ConfigurationException(SplitDecisionException):
    """
    Exception thrown when an experiment configuration is invalid.

    Every configuration failure names the offending key and carries the
    process exit code the command line reports for it.
    """

    default_message = "The experiment configuration is invalid"
    exit_code = 2

    def __init__(self, message=None, key=None, inner_exception=None):
        """
        Initialize a new instance of the ConfigurationException class.

        Args:
            message (str, optional): The message that describes the error.
            key (str, optional): The configuration key that caused the error.
            inner_exception (Exception, optional): The exception that is the cause of the current exception.
        """
        super().__init__(message, inner_exception)
        self.key = key


class UnknownAgentSpecException(ConfigurationException):
    """
    Exception thrown when an agent spec string names no known agent.
    """

    default_message = "Unknown agent spec"
    exit_code = 3


class InvalidEnumException(ConfigurationException):
    """
    Exception thrown when a configuration value is not one of its allowed members.
    """

    default_message = "Invalid enumeration value"
    exit_code = 4


class ConfigFileNotFoundException(ConfigurationException):
    """
    Exception thrown when the configuration or manifest file does not exist.
    """

    default_message = "Configuration file not found"
    exit_code = 5
