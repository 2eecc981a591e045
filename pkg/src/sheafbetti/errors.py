"""Exception types shared across the library."""


class SheafBettiError(Exception):
    """Base class for every error raised by this library."""


class UnsupportedSurfaceError(SheafBettiError):
    """Surface outside the supported families (P2, F0, F1)."""


class LatticeError(SheafBettiError):
    """Divisor-class coordinates do not match the surface's Picard basis."""


class ZeroClassError(SheafBettiError):
    """Operation needs a nonzero divisor class."""


class EffectivityError(SheafBettiError):
    """Operation needs an effective divisor class."""


class SeriesError(SheafBettiError):
    """Power-series misuse: truncation mismatch, out-of-range access,
    or a request beyond the configured truncation cap."""


class InapplicableError(SheafBettiError):
    """A hypothesis of the pipeline fails for the given input.

    ``check`` names the first failing hypothesis so callers can report a
    structured refusal instead of a bare exception.
    """

    def __init__(self, check: str, message: str | None = None):
        self.check = check
        super().__init__(message or check)


class InvariantViolation(SheafBettiError):
    """An internal consistency identity failed.  This is a bug, not bad input."""
