"""Exception hierarchy shared by all modules.

Two families matter for the CLI exit codes: ``InputError`` (malformed or
inconsistent user input, exit code 2) and ``ComputationRefused`` (the input is
well formed but no implemented pathway applies, exit code 1).  Refusals always
name the unmet precondition so the caller knows which pathway was blocked.
"""


class HodgecalcError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HodgecalcError):
    """Malformed input: syntax errors, unknown variables, space mismatches."""


class ParseError(InputError):
    """Syntax error in the polynomial grammar, with a position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ComputationRefused(HodgecalcError):
    """No implemented pathway applies to this (valid) input."""


class DegreeCapExceeded(ComputationRefused):
    """A monomial exceeded the configured total-degree cap."""


class LPInfeasible(ComputationRefused):
    """An exact linear program has an empty feasible region."""
