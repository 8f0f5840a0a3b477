"""Invariants of cyclic branched covers and the two basic 4-manifold inequalities.

For the q-fold cyclic cover branched over a genus-g surface of square s,
with q a prime power:

    b2' = q*b2 + 2*(q-1)*g
    sigma' = q*sigma - (q^2 - 1)/(3*q) * s

The signature correction must come out integral; a fractional value means no
cover with these numbers exists and is reported as an error instead of being
rounded away.  Existence of the cover itself (the branch class must be
divisible by q) is the caller's obligation; this module is purely numeric.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonIntegerSignature, ValidationError


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


@dataclass(frozen=True)
class PrimePower:
    """q = p^r with p prime and r >= 1, validated eagerly at construction."""

    q: int
    p: int = field(init=False)
    r: int = field(init=False)

    def __post_init__(self):
        if isinstance(self.q, bool) or not isinstance(self.q, int):
            raise ValidationError(f"prime power must be an integer, got {self.q!r}")
        if self.q < 2:
            raise ValidationError(f"prime power must be at least 2, got {self.q}")
        p = _smallest_prime_factor(self.q)
        m, r = self.q, 0
        while m % p == 0:
            m //= p
            r += 1
        if m != 1:
            raise ValidationError(f"{self.q} is not a prime power")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "r", r)

    @property
    def is_even(self) -> bool:
        return self.p == 2


def as_prime_power(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower(int(q))


def _check_nonneg(name: str, value: int) -> int:
    value = int(value)
    if value < 0:
        raise ValidationError(f"{name} must be non-negative, got {value}")
    return value


def cover_b2(q, base_b2: int, branch_genus: int) -> int:
    """Second Betti number of the cover: q*b2 + 2*(q-1)*genus."""
    qq = as_prime_power(q).q
    base_b2 = _check_nonneg("b2", base_b2)
    branch_genus = _check_nonneg("branch genus", branch_genus)
    return qq * base_b2 + 2 * (qq - 1) * branch_genus


def cover_sigma(q, base_sigma: int, branch_square: int) -> int:
    """Signature of the cover: q*sigma - (q^2-1)/(3q) * (branch square).

    Raises NonIntegerSignature when the exact rational is not an integer,
    signalling that no cover with these numbers exists.
    """
    qq = as_prime_power(q).q
    value = qq * int(base_sigma) - Fraction((qq * qq - 1) * int(branch_square), 3 * qq)
    if value.denominator != 1:
        raise NonIntegerSignature(
            f"cover signature {value} is not an integer for q = {qq} and "
            f"branch square {branch_square}; no such cover exists"
        )
    return int(value)


def cover_spin(q, base_spin: bool, branch_class_over_q_characteristic: bool | None) -> bool:
    """Spin status of the cover.

    For odd q the cover is spin iff the base is; for even q it is spin iff
    (1/q) of the branch class is characteristic, which the caller must supply
    (computable via GramForm.is_characteristic when a form is available).
    """
    qp = as_prime_power(q)
    if not qp.is_even:
        return bool(base_spin)
    if branch_class_over_q_characteristic is None:
        raise ValidationError(
            "spin status of an even-degree cover needs the characteristic flag for (1/q) of the branch class"
        )
    return bool(branch_class_over_q_characteristic)


def betti_signature_check(cover_b2_value: int, cover_sigma_value: int) -> bool:
    """b2 >= |sigma|, which holds for every closed oriented 4-manifold."""
    return cover_b2_value >= abs(cover_sigma_value)


def furuta_check(cover_b2_value: int, cover_sigma_value: int) -> bool:
    """The 5/4 inequality 4*b2 >= 5*|sigma| + 8 in cleared-denominator form.

    Valid for spin manifolds with nonzero second Betti number; enforcing
    those hypotheses is up to the caller.
    """
    return 4 * cover_b2_value >= 5 * abs(cover_sigma_value) + 8


@dataclass(frozen=True)
class CoverInvariants:
    """(q, b2, sigma, spin) of a cyclic branched cover; spin is None when it
    cannot be decided from the inputs."""

    q: PrimePower
    b2: int
    sigma: int
    spin: bool | None


def branched_cover(
    q,
    base_b2: int,
    base_sigma: int,
    branch_genus: int,
    branch_square: int,
    base_spin: bool | None = None,
    branch_class_over_q_characteristic: bool | None = None,
) -> CoverInvariants:
    """Assemble the numeric invariants of the q-fold branched cover."""
    qp = as_prime_power(q)
    b2c = cover_b2(qp, base_b2, branch_genus)
    sigmac = cover_sigma(qp, base_sigma, branch_square)
    if qp.is_even:
        spin = None if branch_class_over_q_characteristic is None else bool(branch_class_over_q_characteristic)
    else:
        spin = None if base_spin is None else bool(base_spin)
    return CoverInvariants(qp, b2c, sigmac, spin)
