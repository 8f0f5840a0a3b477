"""Exception hierarchy: bad input versus mathematically impossible input.

The CLI maps ``exit_code`` to the process exit status: 1 for malformed or
unsupported requests, 2 for data that no manifold or branched cover can
actually have.
"""


class NegsqError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class ValidationError(NegsqError):
    """Malformed, missing, or unsupported input."""


class DimensionMismatch(ValidationError):
    """Homology class length does not match the rank of the form."""


class UnsupportedEvenPower(ValidationError):
    """No G-signature genus inequality is known for even prime powers above 2."""


class KappaOutOfRange(ValidationError):
    """The conjectural genus slope must be < 4 for the doubling argument to close."""


class DivisibilityViolation(ValidationError):
    """Candidate self-intersection is not divisible by q^2."""


class MathematicalInconsistency(NegsqError):
    """Numerically well-formed input that cannot come from an actual manifold."""

    exit_code = 2


class NonIntegerSignature(MathematicalInconsistency):
    """The branched-cover signature formula produced a non-integer value."""


class InvariantViolation(MathematicalInconsistency):
    """A structural invariant (symmetry, unimodularity, |sigma| <= b2) fails."""
