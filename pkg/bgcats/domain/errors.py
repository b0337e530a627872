"""Domain exceptions.

Every numerical failure the domain can report has its own type so that the
application layer and the CLI can map it to a status or an exit code without
string matching.
"""


class BgcatsError(Exception):
    """Base class for all domain failures."""

    pass


class PoleError(BgcatsError):
    """Raised when a function is evaluated at a pole (nonpositive integer)."""

    pass


class NonConvergenceError(BgcatsError):
    """Raised when a series exceeds its term cap before reaching tolerance."""

    pass


class QuadratureNonConvergenceError(NonConvergenceError):
    """Raised when step halving stops before the quadrature settles."""

    pass


class DomainError(BgcatsError, ValueError):
    """Raised when an argument lies outside the function's domain."""

    pass


class CutoffInadequateError(BgcatsError):
    """Raised when the Fock cutoff is too small for the requested amplitude."""

    pass


class BasisIndexError(BgcatsError, IndexError):
    """Raised for an occupation number outside the truncated basis."""

    pass


class SpaceMismatchError(BgcatsError):
    """Raised when two states live in different truncated spaces."""

    pass


class NormalizationError(BgcatsError):
    """Raised when superposition coefficients violate their norm condition."""

    pass


class DegenerateSuperpositionError(BgcatsError):
    """Raised when a superposition cancels to (numerically) nothing."""

    pass


class RealizationMismatchError(BgcatsError):
    """Raised when a BG label cannot be embedded in the given space."""

    pass


class EmptySectorError(BgcatsError):
    """Raised when a charge sector has no support in the truncated space."""

    pass


class SingularParametrizationError(BgcatsError):
    """Raised when the z-chart is used with a vanishing last amplitude."""

    pass


class DivergentIntegralError(BgcatsError):
    """Raised when a measure integral diverges at the origin."""

    pass


class DomainTooSmallError(BgcatsError):
    """Raised when a quadrature grid misses radial mass of checked states."""

    pass


class UnknownFamilyError(BgcatsError):
    """Raised when no classification rule exists for a state family."""

    pass


class TruncationMassError(BgcatsError):
    """Raised when the truncated distribution misses too much probability."""

    pass


class VacuumStateError(BgcatsError):
    """Raised when a ratio needs a nonzero mean photon number."""

    pass
