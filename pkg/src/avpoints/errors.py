"""Exception hierarchy shared by every module of the package."""


class AVError(Exception):
    """Base class for all errors raised by avpoints."""


class ValidationError(AVError):
    """Input data failed a structural check (CLI exit code 2)."""


class NotSquarefree(ValidationError):
    pass


class NotQSymmetric(ValidationError):
    pass


class NotWeil(ValidationError):
    pass


class NotPrimePower(ValidationError):
    pass


class PartitionTooLong(ValidationError):
    pass


class UnsupportedDimension(ValidationError):
    pass


class ZeroDivisor(AVError, ZeroDivisionError):
    pass


class NotFullRank(AVError):
    pass


class NotContained(AVError):
    pass


class DegenerateTrace(AVError):
    pass


class BoundExceeded(AVError):
    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size


class PartialFactorization(AVError):
    pass


class OracleDisagreement(AVError):
    """Two independent computations of the same quantity disagree (exit code 3)."""


class NetworkError(AVError):
    pass


class ParseError(AVError):
    def __init__(self, message, path=None):
        super().__init__(message if path is None else f"{message} (at {path})")
        self.path = path


class CacheMiss(AVError):
    pass
