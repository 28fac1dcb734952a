"""
Exception hierarchy.  The command line maps each class to an exit code.
"""


class RenyikitError(Exception):
    """
    Base class for every error raised on purpose by renyikit.
    """


class DomainError(RenyikitError, ValueError):
    """
    Input outside the mathematical domain of an operation (non-PSD operator,
    mismatched dimensions, alpha out of range, ...).
    """


class ParseError(RenyikitError, ValueError):
    """
    Malformed input file.  ``line`` and ``column`` are set when the JSON
    decoder reported them.
    """
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "{0} (line {1}, column {2})".format(message, line, column)
        super(ParseError, self).__init__(message)
        self.line = line
        self.column = column


class VerificationError(RenyikitError):
    """
    A simulator invariant failed (replacer factorization, replacer success
    probability).
    """
