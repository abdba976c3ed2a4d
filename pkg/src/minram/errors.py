"""Exception hierarchy shared by every layer of the package.

The CLI maps these onto exit codes: input problems exit 1, exhausted
searches exit 2 and failed re-verification exits 3.
"""


class MinramError(Exception):
    pass


class InputError(MinramError, ValueError):
    """Malformed or out-of-contract input."""


class PreconditionError(InputError):
    pass


class UndefinedInputError(InputError):
    """Operation is undefined on this input (zero polynomial, constant, ...)."""


class ZeroPolynomialError(UndefinedInputError):
    """A reduction made the polynomial identically zero."""


class UnsupportedError(InputError):
    """The input is well formed but outside the families this package builds."""


class DegeneracyError(InputError):
    pass


class NormalityError(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, offset=None, line=None, column=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.offset = offset
        self.line = line
        self.column = column


class NotFoundError(MinramError):
    """A bounded search finished without an accepted candidate.

    ``stats`` carries the scan statistics so callers can report how much
    of the space was covered; it is never an assertion of nonexistence.
    """

    def __init__(self, message, stats=None, stage=None):
        super().__init__(message)
        self.stats = dict(stats or {})
        self.stage = stage


class ResourceError(MinramError):
    """A budget was exceeded; ``partial`` holds whatever was computed."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class VerificationError(MinramError):
    """An independent re-check of a certificate failed. Always a bug."""
