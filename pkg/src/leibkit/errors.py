"""Exception hierarchy shared by every leibkit module."""


class LeibkitError(Exception):
    pass


class FieldMismatchError(LeibkitError, ValueError):
    pass


class DimensionMismatchError(LeibkitError, ValueError):
    pass


class UnsupportedBackendError(LeibkitError):
    """Raised when an invariant cannot be computed exactly over the given field."""


class ResourceGuardError(LeibkitError):
    def __init__(self, estimated, limit):
        self.estimated = estimated
        self.limit = limit
        super().__init__(
            f"enumeration would visit ~{estimated} subspaces, above the limit of "
            f"{limit} (raise --max-enum or pass --force)"
        )


class LeibnizViolationError(LeibkitError, ValueError):
    def __init__(self, witness):
        self.witness = witness
        i, j, k = witness
        super().__init__(f"Leibniz identity fails on basis triple ({i}, {j}, {k})")


class NotAnIdealError(LeibkitError, ValueError):
    pass


class NotASubalgebraError(LeibkitError, ValueError):
    pass


class CertificateError(LeibkitError, ValueError):
    pass


class ParseError(LeibkitError, ValueError):
    """Malformed algebra file; ``line`` is 1-based, 0 for whole-file problems."""

    def __init__(self, message, line=0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)
