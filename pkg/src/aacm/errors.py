"""Exception hierarchy shared by every module."""


class AACMError(Exception):
    pass


class DomainError(AACMError, ValueError):
    """Input outside the mathematical domain of an operation."""


class PoleError(AACMError, ArithmeticError):
    """A denominator divisible by p would be needed (von Staudt-Clausen boundary)."""


class UnsupportedCharacterError(DomainError):
    """The requested twist is not a real quadratic character."""


class UnsupportedPrecisionError(AACMError, ValueError):
    pass


class ResourceError(AACMError, RuntimeError):
    """A configured bound (period length, form count) was exceeded."""


class InternalConsistencyError(AACMError, AssertionError):
    """A mathematically guaranteed identity failed; indicates a bug."""
