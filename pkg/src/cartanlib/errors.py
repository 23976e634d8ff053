"""Exception hierarchy shared by the library, the service and the CLI.

Every user-facing failure is an instance of CartanlibError; the four
subfamilies map one-to-one onto CLI exit codes and HTTP statuses.
"""

from __future__ import annotations


class CartanlibError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ParseError(CartanlibError):
    """Malformed input: bad JSON, unknown preset, unreadable file."""

    exit_code = 2


class UnknownPreset(ParseError):
    pass


class ValidationError(CartanlibError):
    """Structurally invalid mathematical object (non-associative table, bad identity, ...)."""

    exit_code = 3


class FieldMismatch(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class PreconditionError(CartanlibError):
    """An operation was called on input violating its contract."""

    exit_code = 4


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class NotLieClosed(PreconditionError):
    pass


class NotIdeal(PreconditionError):
    pass


class NotSubgroup(PreconditionError):
    pass


class NotInRadical(PreconditionError):
    pass


class NotTorus(PreconditionError):
    pass


class NotCentralSimple(PreconditionError):
    pass


class NotFiniteField(PreconditionError):
    pass


class InvalidOrder(PreconditionError):
    pass


class InvalidN(PreconditionError):
    pass


class VerificationFailed(CartanlibError):
    """An a-posteriori certificate check failed.  Indicates an internal bug."""

    exit_code = 5


class TooLarge(CartanlibError):
    """Request exceeds a hard enumeration bound."""

    exit_code = 6


class EnumerationTooLarge(TooLarge):
    pass
