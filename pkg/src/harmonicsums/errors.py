"""Exception hierarchy shared across the package."""


class HarmonicSumsError(Exception):
    """Base class for all package errors."""


class PoleError(HarmonicSumsError):
    """Evaluation requested at a pole (non-positive integer argument of Gamma-type functions)."""


class DomainError(HarmonicSumsError):
    """Argument outside the domain where the operation is defined or convergent."""


class ConvergenceError(HarmonicSumsError):
    """Summation failed to reach the requested tolerance within the term budget."""


class AccelerationDiverged(HarmonicSumsError):
    """Sequence transformation columns failed to stabilize."""


class EstimateUnavailable(HarmonicSumsError):
    """Tail estimation impossible (terms non-monotone at the truncation point)."""


class KindError(HarmonicSumsError):
    """Operation applied to an identity of the wrong kind (e.g. exact check of an infinite series)."""


class NotFound(HarmonicSumsError):
    """Unknown identity id."""
