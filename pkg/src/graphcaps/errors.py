"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: usage problems exit 1, data problems
exit 2, numeric failures exit 3.
"""


class GraphCapsError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(GraphCapsError):
    """Incompatible shapes, invalid hyperparameters, or bad wiring."""


class DataError(GraphCapsError):
    """A dataset could not be located, parsed, or validated."""


class NumericError(GraphCapsError):
    """A computation left the valid numeric domain (ln of <= 0, NaN loss)."""


class UsageError(GraphCapsError):
    """Malformed command-line invocation."""
