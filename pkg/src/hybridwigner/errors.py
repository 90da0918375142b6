"""Exception types shared across the library."""


class DomainError(ValueError):
    """An input lies outside the mathematically valid domain."""


class HermiticityViolation(ValueError):
    """A dyadic state is missing conjugate-transpose partner terms."""


class QuadratureNonConvergence(RuntimeError):
    """Node-doubling refinement failed to meet the requested tolerance."""


class CutoffInsufficient(RuntimeError):
    """Truncated number-basis computation leaked too much weight past the cutoff."""


class NotDensityMatrix(ValueError):
    """A matrix fails the Hermiticity / unit-trace / positivity checks."""
