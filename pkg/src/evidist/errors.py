"""Exception types shared across the package."""


class EvidenceError(Exception):
    """Base class for all evidist errors."""


class ValidationError(EvidenceError):
    """Invalid construction input or incompatible values."""


class FrameMismatchError(ValidationError):
    """Operands belong to different frames of discernment."""


class DocumentError(ValidationError):
    """Malformed evidence document."""


class TotalConflictError(EvidenceError):
    """Dempster combination is undefined: the sources fully contradict."""


class NumericalError(EvidenceError):
    """A computation produced a numerically impossible intermediate value."""
