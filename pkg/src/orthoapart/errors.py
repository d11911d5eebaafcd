"""Exception hierarchy for the orthoapart package."""


class OrthoapartError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(OrthoapartError):
    """Operands live in different ambient dimensions or have incompatible shapes."""


class SingularMatrix(OrthoapartError):
    """Attempted to invert a rank-deficient matrix."""


class IncompatibleFamily(OrthoapartError):
    """A family handed to the frame-refinement algorithm contains a
    non-compatible pair.  Carries the indices of the offending pair."""

    def __init__(self, i, j):
        self.pair = (i, j)
        super().__init__(f"subspaces at positions {i} and {j} are not compatible")


class ThresholdViolation(OrthoapartError):
    """The ambient dimension is below the threshold required for the
    counting characterization of orthogonality (n >= 4k)."""


class ProjectionClass(OrthoapartError):
    """The requested construction needs at least two distinct eigenvalues;
    a projection class has exactly one operator per image."""


class NoRoom(OrthoapartError):
    """The ambient space is too small for the requested construction."""


class NotAnEigenline(OrthoapartError):
    """The given subspace is not a one-dimensional eigenspace of the operator."""


class NotAMember(OrthoapartError):
    """An operator or labeling does not belong to the apartment in question."""
