"""
Override components of python's builtin warnings (as suggested by the manual)
"""

import warnings
import sys


class RenyikitWarning(Warning):
    """
    The base warning class from which all renyikit warnings should inherit.
    """


class HeuristicRangeWarning(RenyikitWarning):
    """
    The requested alpha lies outside the range where the channel objective
    is known to be quasi-concave, so multi-start search is not certified.
    """


class CertificateWarning(RenyikitWarning):
    """
    A grid certification found a better value than gradient search.
    """


def showwarning(message, category, filename, lineno, file=None, line=None):
    """Hook to write a warning to a file; replace if you like."""
    if file is None:
        file = sys.stderr
    try:
        msg = str(message)
        file.write(msg+"\n")
    except IOError:
        pass  # the file (probably stderr) is invalid - this warning gets lost.


warnings.showwarning = showwarning

warn = warnings.warn
