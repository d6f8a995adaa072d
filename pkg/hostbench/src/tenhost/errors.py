"""Exception types specific to the host-side package.

Everything derives from :class:`tenkern.TenkernError` so callers (and the
CLI exit-code mapping) can treat both packages' failures uniformly. The
malformed-triple error is :class:`tenkern.IntegrityError`, re-exported
here for convenience.
"""

from tenkern import IntegrityError, TenkernError

__all__ = ["EstimationError", "IntegrityError"]


class EstimationError(TenkernError, RuntimeError):
    """Overhead estimation produced no usable repeats."""
