"""
Error types raised by the library.

All of them derive from ValueError so callers that only know the builtin
contract keep working.
"""

from typing import Sequence


class InertiaError(ValueError):
    """Base class for every library error."""


class MalformedSignalError(InertiaError):
    """Signals, windows or parameters that violate their invariants."""


class WaveParseError(InertiaError):
    """
    Error while reading the wave text format.

    Args:
        line_no: 1-based line number of the offending line
        message: What is wrong with it
    """

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.reason = message


class HorizonError(InertiaError):
    """A dump horizon that does not lie after every transition."""


class ModelSpecError(InertiaError):
    """A delay model description that cannot be parsed."""


class UnfittableCorpusError(InertiaError):
    """
    No relative inertia window within the bound admits the corpus.

    Args:
        message: Human readable summary
        edges: Offending (pair index, edge) tuples
    """

    def __init__(self, message: str, edges: Sequence = ()):
        super().__init__(message)
        self.edges = list(edges)


class DemoMismatchError(InertiaError):
    """A reproduction disagreed with the result it is expected to show."""
