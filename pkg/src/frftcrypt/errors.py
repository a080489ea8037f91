"""Exception hierarchy.

Every error raised on a violated numerical precondition derives from
:class:`FrftError`; the CLI maps those to exit code 3.  Malformed text
input raises :class:`ParseError` (exit code 2).
"""


class FrftError(ValueError):
    """Base class for numerical precondition failures."""


class NearSingularOrder(FrftError):
    """Order is close to a multiple of pi but was not snapped to it."""


class SpecialAngle(FrftError):
    """Operation needs a generic order but got an identity/reflection."""


class GridMismatch(FrftError):
    """Requested output grid is not covered by the source samples."""


class SingularPoint(FrftError):
    """A weight was evaluated exactly at one of its singularities."""


class OffsetTooSmall(FrftError):
    """Offset M is smaller than 1 + max|u|."""


class ZeroWeight(FrftError):
    """Division by a weight that vanishes on the grid."""


class MissingBeta(FrftError):
    """Triple encryption requested with a key lacking a multiplier order."""


class BadPlan(FrftError):
    """Invalid fast-transform plan (e.g. non power-of-two length)."""


class ParseError(ValueError):
    """Malformed signal or key text."""
