"""Exception types shared across the package."""


class PolyspecError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(PolyspecError, ValueError):
    """An argument is malformed: non-finite, wrong kind, or outside its domain."""


class UnsupportedRangeError(PolyspecError, ValueError):
    """The request falls outside the documented supported window.

    The window exists so that accuracy contracts hold everywhere they are
    advertised; requests beyond it are rejected rather than silently degraded.
    """


class InternalConsistencyError(PolyspecError, RuntimeError):
    """A certified step (sign change, bracket, normalization) failed.

    Raised instead of guessing: a result produced past this point could not
    be trusted.
    """


class OracleInsufficientError(PolyspecError, RuntimeError):
    """Brute-force oracle bounds are too small to certify completeness."""


class InvariantViolationError(PolyspecError, RuntimeError):
    """A structural invariant that should hold by construction was violated."""
