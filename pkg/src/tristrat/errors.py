"""Exception hierarchy and process exit codes.

Every error raised by this package derives from :class:`TristratError` and
carries the exit code the command line tool maps it to.  Library callers can
catch the base class; the CLI translates ``exit_code`` into the process
status.
"""

from __future__ import annotations

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAPACITY = 3
EXIT_GATE = 4


class TristratError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = EXIT_VALIDATION


class ValidationError(TristratError, ValueError):
    """Malformed input: files, identifiers, parameter ranges, misuse."""


class ParseError(ValidationError):
    """A table, weights or config source could not be parsed.

    Messages name the offending row and column so files can be fixed
    without guesswork.
    """


class SubsetViolationError(ValidationError):
    """Conditional weighting was asked for an inner set outside its context."""


class ZeroMassError(ValidationError):
    """A conditioning context carries zero total weight."""


class EmptyCliqueError(ValidationError):
    """An operation that needs agents received an empty clique."""


class EmptyStrategyError(ValidationError):
    """An operation that needs issues received an empty strategy."""


class CapacityError(TristratError):
    """Subset enumeration would exceed the configured cap."""

    exit_code = EXIT_CAPACITY


class GateError(TristratError):
    """The clique is below the minimum relative size for strategy selection."""

    exit_code = EXIT_GATE


class InternalError(TristratError):
    """A proven invariant failed at runtime; indicates a defect, not bad input."""
