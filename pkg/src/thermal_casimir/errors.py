"""Exception types raised by the library.

The CLI maps each family onto a process exit code, so callers that want to
distinguish bad input from numerical trouble should catch the specific class.
"""


class CasimirError(Exception):
    """Base class for every error raised by this package."""


class InputError(CasimirError, ValueError):
    """Malformed or physically invalid input (bad number, unit, sign)."""


class DomainError(CasimirError, ValueError):
    """A valid input that lies outside the domain of the requested model."""


class TableRangeError(CasimirError, ValueError):
    """Lookup outside the tabulated gold correction data (no extrapolation)."""


class ConvergenceError(CasimirError, ArithmeticError):
    """A series did not reach the requested tolerance within its term budget."""


class SolverError(CasimirError, ArithmeticError):
    """A root search failed, e.g. no sign change inside the bracket."""
