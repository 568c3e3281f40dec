"""
Base exception for the split_decision package.
"""

class SplitDecisionException(Exception):
    """
    Exception thrown when a simulation, agent or experiment operation fails.
    """

    default_message = "An error occurred while running a split-decision simulation"

    def __init__(self, message=None, inner_exception=None):
        """
        Initialize a new instance of the SplitDecisionException class.

        Args:
            message (str, optional): The message that describes the error.
            inner_exception (Exception, optional): The exception that is the cause of the current exception.
        """
        if message is None:
            message = self.default_message

        super().__init__(message)
        self.inner_exception = inner_exception
