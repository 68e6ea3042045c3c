"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so each class carries its own.
"""


class SpectraError(Exception):
    exit_code = 1


class InputError(SpectraError, ValueError):
    """Malformed or out-of-domain user input."""

    exit_code = 64


class DimensionError(InputError):
    pass


class DomainError(InputError):
    pass


class CapabilityError(InputError):
    """Requested family, rank or mode is not supported."""


class UndefinedResultantError(InputError):
    pass


class InvariantViolation(SpectraError):
    """An exact self-check failed; results must not be trusted."""

    exit_code = 2


class CapacityError(SpectraError):
    """A configured enumeration bound was exceeded."""

    exit_code = 3
