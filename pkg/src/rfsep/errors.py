"""Exception hierarchy shared across the package.

Every error raised by rfsep derives from RfsepError and carries a short
machine-parsable code used by the CLI when reporting failures.
"""


class RfsepError(Exception):
    code = "E_INTERNAL"


class ParameterError(RfsepError):
    """Invalid scalar parameter (roll-off, stride, frequency, ...)."""

    code = "E_PARAM"


class ShapeError(RfsepError):
    """Mismatched or invalid array shapes/lengths."""

    code = "E_SHAPE"


class RangeError(RfsepError):
    """Value outside a discrete valid range (token index, code, ...)."""

    code = "E_RANGE"


class FormatError(RfsepError):
    """Malformed file content (bad magic, truncation, version)."""

    code = "E_FORMAT"


class DataError(RfsepError):
    """Insufficient or degenerate data for the requested computation."""

    code = "E_DATA"


class ConfigError(RfsepError):
    """Inconsistent model or experiment configuration."""

    code = "E_CONFIG"


class NumericalError(RfsepError):
    """Numerical failure (singular matrix after regularization, ...)."""

    code = "E_NUMERIC"


class TrainingError(RfsepError):
    """Training diverged (NaN loss or NaN gradient)."""

    code = "E_TRAIN"
