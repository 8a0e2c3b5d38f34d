"""Exception types shared across the package.

The CLI maps these onto process exit codes: InputError -> 2,
ResourceLimitError -> 3, InvariantError (and report-level violations) -> 1.
"""


class InputError(Exception):
    """Malformed input file or a violated operation precondition."""


class ResourceLimitError(Exception):
    """An enumeration guard or cap was exceeded before the computation ran."""


class InvariantError(Exception):
    """An identity that must hold exactly failed at runtime.

    Raised when a cross-check that is guaranteed by construction comes out
    unequal; it always indicates a bug, never bad user input.
    """


class CoeffSequenceError(ValueError):
    """Polynomial does not have the alternating-sign coefficient shape."""
