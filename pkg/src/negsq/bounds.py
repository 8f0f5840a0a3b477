"""Closed-form upper bounds on N = -A^2 for embedded surfaces of fixed genus.

Each bound takes the abstract invariants (b2, sigma) of the ambient manifold,
the genus of the surface, and explicit hypothesis flags; it returns a
BoundOutcome holding the exact rational value, a theorem tag, and the
hypothesis checklist.  A failed hypothesis yields applicable=False rather
than an error, so a report can show which inequalities apply and what they
give.  All values are exact rationals throughout.

Negative values are reported as-is and mean that no surface of that kind
with negative square is admissible at all.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cover import as_prime_power
from .errors import KappaOutOfRange, UnsupportedEvenPower, ValidationError


class Theorem(str, enum.Enum):
    """Tags identifying which inequality produced a bound."""

    GSIG_Q2 = "GSIG_Q2"
    GSIG_QODD = "GSIG_QODD"
    GSIG_UNIFORM = "GSIG_UNIFORM"
    FURUTA_DIV = "FURUTA_DIV"
    FURUTA_DIV_UNIFORM = "FURUTA_DIV_UNIFORM"
    FURUTA_CHAR = "FURUTA_CHAR"
    CONJECTURAL = "CONJECTURAL"


@dataclass(frozen=True)
class BoundOutcome:
    """An exact rational upper bound together with its provenance.

    ``value`` is present exactly when every hypothesis is satisfied.
    """

    theorem: Theorem
    hypotheses: tuple[tuple[str, bool], ...]
    value: Fraction | None

    def __post_init__(self):
        if (self.value is not None) != self.applicable:
            raise ValidationError("bound value must be present exactly when all hypotheses hold")

    @property
    def applicable(self) -> bool:
        return all(ok for _, ok in self.hypotheses)


def _outcome(theorem: Theorem, hypotheses, value_fn) -> BoundOutcome:
    hypotheses = tuple((str(name), bool(ok)) for name, ok in hypotheses)
    value = Fraction(value_fn()) if all(ok for _, ok in hypotheses) else None
    return BoundOutcome(theorem, hypotheses, value)


def _check_genus(genus: int) -> int:
    genus = int(genus)
    if genus < 0:
        raise ValidationError(f"genus must be non-negative, got {genus}")
    return genus


def gsig_bound(q, b2: int, sigma: int, genus: int) -> BoundOutcome:
    """G-signature bound for a class divisible by the prime power q.

    q = 2:    N <= 2*(b2 - sigma) + 4*genus
    q odd:    N <= 2q^2/(q^2-1) * (b2 - sigma) + 4q^2/(q^2-1) * genus

    No inequality of this kind is known for even prime powers above 2;
    those raise UnsupportedEvenPower.
    """
    qp = as_prime_power(q)
    genus = _check_genus(genus)
    hypotheses = [("class divisible by the prime power q", True)]
    if qp.q == 2:
        return _outcome(Theorem.GSIG_Q2, hypotheses, lambda: 2 * (b2 - sigma) + 4 * genus)
    if qp.is_even:
        raise UnsupportedEvenPower(f"no G-signature bound is available for even prime power q = {qp.q}")
    coeff = Fraction(2 * qp.q * qp.q, qp.q * qp.q - 1)
    return _outcome(Theorem.GSIG_QODD, hypotheses, lambda: coeff * (b2 - sigma) + 2 * coeff * genus)


def gsig_uniform_odd_bound(b2: int, sigma: int, genus: int) -> BoundOutcome:
    """q-independent G-signature bound valid for every odd prime power q >= 3:

    N <= 9/4 * (b2 - sigma) + 9/2 * genus
    """
    genus = _check_genus(genus)
    hypotheses = [("class divisible by an odd prime power q >= 3", True)]
    return _outcome(
        Theorem.GSIG_UNIFORM,
        hypotheses,
        lambda: Fraction(9, 4) * (b2 - sigma) + Fraction(9, 2) * genus,
    )


def rohlin_genus_lb(q, b2: int, sigma: int, class_square: int) -> Fraction:
    """Raw G-signature genus lower bound for a class of the given square.

    q = 2:    |sigma/2 - square/4| - b2/2
    q odd:    |sigma/2 - (q^2-1)*square/(4*q^2)| - b2/2

    The raw value may be negative; clamp to 0 when reading it as a genus.
    """
    qp = as_prime_power(q)
    if qp.q == 2:
        correction = Fraction(class_square, 4)
    elif qp.is_even:
        raise UnsupportedEvenPower(f"no G-signature genus bound is available for even prime power q = {qp.q}")
    else:
        correction = Fraction((qp.q * qp.q - 1) * class_square, 4 * qp.q * qp.q)
    return abs(Fraction(sigma, 2) - correction) - Fraction(b2, 2)


def furuta_div_bound(q, b2: int, sigma: int, genus: int, base_spin: bool, quotient_characteristic: bool) -> BoundOutcome:
    """5/4-inequality bound for a class divisible by the prime power q.

    Applies when the cover branched over the surface is spin: for even q the
    class divided by q must be characteristic, for odd q the base manifold
    must be spin.  Then

    N <= 3q^2/(q^2-1) * (4/5*b2 - sigma - 8/(5q)) + 24/5 * q/(q+1) * genus
    """
    qp = as_prime_power(q)
    genus = _check_genus(genus)
    if qp.is_even:
        hypotheses = [("q even: the class divided by q is characteristic", bool(quotient_characteristic))]
    else:
        hypotheses = [("q odd: the base manifold is spin", bool(base_spin))]
    qv = qp.q
    return _outcome(
        Theorem.FURUTA_DIV,
        hypotheses,
        lambda: Fraction(3 * qv * qv, qv * qv - 1) * (Fraction(4, 5) * b2 - sigma - Fraction(8, 5 * qv))
        + Fraction(24, 5) * Fraction(qv, qv + 1) * genus,
    )


def furuta_div_uniform(b2: int, sigma: int, genus: int, base_spin: bool) -> BoundOutcome:
    """q-independent 5/4 bound for spin base and odd prime power divisibility:

    N <= 27/40 * (4*b2 - 5*sigma) + 24/5 * genus
    """
    genus = _check_genus(genus)
    hypotheses = [
        ("the base manifold is spin", bool(base_spin)),
        ("class divisible by an odd prime power q >= 3", True),
    ]
    return _outcome(
        Theorem.FURUTA_DIV_UNIFORM,
        hypotheses,
        lambda: Fraction(27, 40) * (4 * b2 - 5 * sigma) + Fraction(24, 5) * genus,
    )


def char_bound(b2: int, sigma: int, genus: int) -> BoundOutcome:
    """Bound for a characteristic class: N <= 4*b2 - 5*sigma - 8 + 8*genus."""
    genus = _check_genus(genus)
    hypotheses = [("the class is characteristic", True)]
    return _outcome(Theorem.FURUTA_CHAR, hypotheses, lambda: 4 * b2 - 5 * sigma - 8 + 8 * genus)


def sphere_char_lower_bound(b2: int, sigma: int) -> int:
    """Lower bound on the square of a characteristic sphere:

    square >= -(4*b2 - 5*sigma - 8)

    The genus-zero specialization of char_bound with the sign flipped.
    """
    return -(4 * b2 - 5 * sigma - 8)


def km_congruence(sigma: int, n: int) -> bool:
    """Kervaire-Milnor congruence N = -sigma (mod 16).

    Holds for characteristic classes represented by embedded spheres; the
    genus-zero restriction is the caller's job.
    """
    n = int(n)
    if n < 1:
        raise ValidationError(f"N must be a positive integer, got {n}")
    return (n + sigma) % 16 == 0


def multiple_genus(d: int, n: int, genus: int) -> int:
    """Genus of a surface representing d times a class of square -n:

    d*(d-1)/2 * n + 1 - d + d*genus

    For d = 2 this is the classical tubing genus n - 1 + 2*genus.
    """
    d = int(d)
    if d < 2:
        raise ValidationError(f"multiplier must be at least 2, got {d}")
    n = int(n)
    if n < 1:
        raise ValidationError(f"N must be a positive integer, got {n}")
    genus = _check_genus(genus)
    return d * (d - 1) // 2 * n + 1 - d + d * genus


@dataclass(frozen=True)
class ConjectureParams:
    """Constants (c, kappa) of a conjectural linear genus bound M <= c + kappa*g
    for classes divisible by 2."""

    c: Fraction
    kappa: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "kappa", Fraction(self.kappa))


def conjectural_bound(params: ConjectureParams, genus: int) -> BoundOutcome:
    """Bound for an arbitrary class, conditional on the open conjecture that
    classes divisible by 2 satisfy M <= c + kappa*g with kappa < 4:

    N <= (c + kappa*(2*genus - 1)) / (4 - kappa)
    """
    genus = _check_genus(genus)
    if params.kappa >= 4:
        raise KappaOutOfRange(f"kappa must be < 4 for the doubling argument, got {params.kappa}")
    hypotheses = [("conditional on the open genus-slope conjecture (assumed)", True)]
    return _outcome(
        Theorem.CONJECTURAL,
        hypotheses,
        lambda: (params.c + params.kappa * (2 * genus - 1)) / (4 - params.kappa),
    )


def furuta_conjecture_params(b2: int, sigma: int) -> ConjectureParams:
    """The (c, kappa) obtained from the 5/4 inequality on the double cover
    branched over a doubly divisible surface with characteristic half:

    kappa = 16/5,  c = 16/5*b2 - 4*sigma - 16/5

    Feeding these into conjectural_bound reproduces char_bound exactly.
    """
    return ConjectureParams(
        c=Fraction(16, 5) * b2 - 4 * sigma - Fraction(16, 5),
        kappa=Fraction(16, 5),
    )


def conjecture_kappa_limit(d: int) -> Fraction:
    """Largest admissible slope for the d-fold version of the conjecture: 2d/(d-1)."""
    d = int(d)
    if d < 2:
        raise ValidationError(f"multiplier must be at least 2, got {d}")
    return Fraction(2 * d, d - 1)
