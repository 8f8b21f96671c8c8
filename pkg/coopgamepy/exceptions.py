"""
Error Types for CoopGamePy

Each error class carries the exit status the command-line interface reports
for it.
"""


class CoopGameError(Exception):
    """Base class for all errors raised by coopgamepy."""

    exit_code = 1


class InputError(CoopGameError, ValueError):
    """Malformed matrices, empty point sets or unparsable game files."""

    exit_code = 2


class ConstraintError(CoopGameError, ValueError):
    """A model parameter violates one of its defining inequalities."""

    exit_code = 3


class DomainError(CoopGameError, ValueError):
    """An argument lies outside the domain of the operation (e.g. lambda <= 0)."""

    exit_code = 3


class ConvergenceError(CoopGameError, RuntimeError):
    """A numeric search failed to terminate with an answer."""

    exit_code = 4

    def __init__(self, message: str, probes=None):
        super().__init__(message)
        self.probes = list(probes) if probes is not None else []
