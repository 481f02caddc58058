"""Custom exceptions for the Obata holonomy toolkit."""


class ObataLabError(RuntimeError):
    """Base exception for computation failures."""


class DimensionMismatchError(ObataLabError, ValueError):
    """Raised when vector or matrix shapes do not line up."""


class InvalidRootSystemError(ObataLabError, ValueError):
    """Raised for a type letter and rank that name no simple type."""


class GroupSpecError(ObataLabError, ValueError):
    """Raised when a group spec falls outside the classification list."""


class NotCompactError(ObataLabError):
    """Raised when the Killing form of a realization is not definite."""


class MissingRootDataError(ObataLabError):
    """Raised when a realization carries no Cartan or root metadata."""


class SingularParameterError(ObataLabError):
    """Raised when the e1 parameter matrix is not invertible."""


class NotHypercomplexError(ObataLabError):
    """Raised when the Obata connection is requested for a non-integrable
    triple."""


class IncompatibleMetricError(ObataLabError):
    """Raised when the e1 basis violates the Killing extension
    compatibility condition."""


class DimensionCapError(ObataLabError):
    """Raised when a computation exceeds the configured size cap."""


class NotARepresentationError(ObataLabError):
    """Raised when a semidirect action is not a map into sp(r)."""
