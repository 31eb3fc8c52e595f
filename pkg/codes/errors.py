"""
Exception hierarchy for code construction and analysis.
"""


class CodeError(Exception):
    """Base class for every error raised by the codes package."""


class ParameterRangeError(CodeError, ValueError):
    """Poset or ideal parameters outside their admissible range."""


class DimensionMismatchError(CodeError, ValueError):
    """Vectors of different dimensions combined in one operation."""


class CapExceededError(CodeError):
    """Requested dimension is above the configured computation cap."""


class ConstructionError(CodeError):
    """The defining sets cannot be built (e.g. empty D)."""


class DegenerateCodeError(CodeError):
    """The code has no nonzero codeword."""


class VerificationError(CodeError):
    """Independent computation paths disagree."""
