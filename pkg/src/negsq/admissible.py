"""Finite admissible sets of self-intersection numbers N = -A^2.

Combines the closed-form bounds with congruence and divisibility filters and
with the raw branched-cover inequality pipeline (absolute values restored).
The closed-form bounds guarantee a finite search ceiling; the pipeline can
only shrink the candidate set.  Membership is a necessary condition for the
existence of an embedded surface, never a sufficient one: reported values are
merely not excluded by these obstructions.

Candidate checks are independent of each other, so enumeration could be
partitioned across workers and merged by set union; the implementation scans
in increasing order for determinism.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import floor

from .bounds import (
    BoundOutcome,
    char_bound,
    furuta_div_bound,
    furuta_div_uniform,
    gsig_bound,
    gsig_uniform_odd_bound,
    km_congruence,
    multiple_genus,
    rohlin_genus_lb,
)
from .cover import PrimePower, as_prime_power, betti_signature_check, cover_b2, cover_sigma, cover_spin, furuta_check
from .errors import DivisibilityViolation, ValidationError
from .lattice import ManifoldModel

#: Interpretation of every candidate list produced here.
NECESSITY_NOTE = "candidates are not excluded by these obstructions; existence of a surface is not implied"


@dataclass(frozen=True)
class DivisibleClass:
    """Hypothesis: the class is divisible by the prime power q; the flag says
    whether the class divided by q is characteristic."""

    q: PrimePower
    quotient_characteristic: bool = False

    def __post_init__(self):
        object.__setattr__(self, "q", as_prime_power(self.q))


@dataclass(frozen=True)
class CharacteristicClass:
    """Hypothesis: the class is characteristic; ``sphere`` additionally
    restricts to genus zero and turns on the mod-16 congruence filter."""

    sphere: bool = False


ClassKind = DivisibleClass | CharacteristicClass


@dataclass(frozen=True)
class Scenario:
    model: ManifoldModel
    genus: int
    class_kind: ClassKind

    def __post_init__(self):
        if int(self.genus) < 0:
            raise ValidationError(f"genus must be non-negative, got {self.genus}")
        if isinstance(self.class_kind, CharacteristicClass) and self.class_kind.sphere and self.genus != 0:
            raise ValidationError("the sphere congruence filter applies only at genus 0")


@dataclass(frozen=True)
class AdmissibleReport:
    """Surviving values of N, the bounds that were evaluated, and the filters
    that were applied.  An empty candidate list is a valid outcome."""

    candidates: tuple[int, ...]
    bounds: tuple[BoundOutcome, ...]
    filters: tuple[str, ...]


def pipeline_check_char(b2: int, sigma: int, genus: int, n: int, use_abs: bool = True) -> bool:
    """Test N = n against the double-branched-cover inequality for a
    characteristic class of the given genus.

    Doubling the class gives a branch surface of genus n - 1 + 2*genus and
    square -4n, and the double cover branched over it is spin.  With
    ``use_abs`` the full 5/4 inequality on the cover is tested; without it,
    the linearized form (absolute value dropped):

        2*b2 + 2*g_branch >= 5/4 * (2*sigma + 2*n) + 2
    """
    n = int(n)
    if n < 1:
        raise ValidationError(f"N must be a positive integer, got {n}")
    branch_genus = multiple_genus(2, n, genus)
    if use_abs:
        b2c = cover_b2(2, b2, branch_genus)
        sigmac = cover_sigma(2, sigma, -4 * n)
        if b2c > 0:
            return furuta_check(b2c, sigmac)
        return betti_signature_check(b2c, sigmac)
    return 8 * b2 + 8 * branch_genus >= 10 * sigma + 10 * n + 8


def oracle_max_char(b2: int, sigma: int, genus: int) -> int:
    """Largest N passing the linearized double-cover pipeline, by direct scan.

    The inequality is linear in N with negative slope, so the passing set is
    an initial segment and the scan stops at the first failure.  Returns 0
    when N = 1 already fails.
    """
    n = 1
    while pipeline_check_char(b2, sigma, genus, n, use_abs=False):
        n += 1
    return n - 1


def pipeline_check_div(q, b2: int, sigma: int, genus: int, n: int, cover_is_spin: bool) -> bool:
    """Test N = n against the branched-cover inequalities for a class
    divisible by the prime power q, branching over the surface itself.

    Applies the 5/4 inequality on the cover when it is spin (with nonzero
    second Betti number), the Betti-signature inequality otherwise, and the
    raw G-signature genus bound where one is known (q = 2 or q odd).
    """
    qp = as_prime_power(q)
    n = int(n)
    if n < 1:
        raise ValidationError(f"N must be a positive integer, got {n}")
    if n % (qp.q * qp.q) != 0:
        raise DivisibilityViolation(f"N = {n} is not divisible by q^2 = {qp.q * qp.q}")
    b2c = cover_b2(qp, b2, genus)
    sigmac = cover_sigma(qp, sigma, -n)
    if cover_is_spin and b2c > 0:
        ok = furuta_check(b2c, sigmac)
    else:
        ok = betti_signature_check(b2c, sigmac)
    if not ok:
        return False
    if qp.q == 2 or not qp.is_even:
        return rohlin_genus_lb(qp, b2, sigma, -n) <= genus
    return True


def divisible_bound_outcomes(q, b2: int, sigma: int, genus: int, base_spin: bool, quotient_characteristic: bool) -> tuple[BoundOutcome, ...]:
    """Every closed-form bound relevant to divisibility by the prime power q.

    For even q above 2 no G-signature bound exists at q itself, but the class
    is also divisible by 2, so the q = 2 instance is included; it keeps the
    search ceiling finite.
    """
    qp = as_prime_power(q)
    outcomes = []
    if qp.is_even:
        at_two = gsig_bound(2, b2, sigma, genus)
        if qp.q > 2:
            note = (f"evaluated at q = 2 (divisibility by {qp.q} implies divisibility by 2)", True)
            at_two = replace(at_two, hypotheses=at_two.hypotheses + (note,))
        outcomes.append(at_two)
    else:
        outcomes.append(gsig_bound(qp, b2, sigma, genus))
        outcomes.append(gsig_uniform_odd_bound(b2, sigma, genus))
    outcomes.append(furuta_div_bound(qp, b2, sigma, genus, base_spin, quotient_characteristic))
    if not qp.is_even:
        outcomes.append(furuta_div_uniform(b2, sigma, genus, base_spin))
    return tuple(outcomes)


def _divisor_checks(qp: PrimePower, base_spin: bool, quotient_characteristic: bool) -> list[tuple[PrimePower, bool]]:
    """(q', spin of the q'-fold cover) for the requested q and every smaller
    prime-power divisor.

    Divisibility by p^r implies divisibility by p^s for s < r, so those
    covers exist as well.  For s < r the class divided by p^s is still a
    multiple of p, hence an even multiple when p = 2, so its characteristic
    flag reduces to the parity of the form; in every such case the cover is
    spin exactly when the base is.
    """
    checks = [(qp, cover_spin(qp, base_spin, quotient_characteristic))]
    for s in range(1, qp.r):
        smaller = PrimePower(qp.p**s)
        checks.append((smaller, cover_spin(smaller, base_spin, base_spin)))
    return checks


def enumerate_admissible(scenario: Scenario) -> AdmissibleReport:
    """All N in [1, min applicable bound] surviving every filter.

    Characteristic kind: candidates pass the double-cover pipeline with the
    absolute value restored, and for spheres also the mod-16 congruence.
    Divisible kind: candidates are the multiples of q^2 passing the cover
    pipeline at the requested q and at every smaller prime-power divisor.
    """
    model = scenario.model
    b2, sigma, genus = model.b2, model.sigma, scenario.genus
    kind = scenario.class_kind

    if isinstance(kind, CharacteristicClass):
        outcome = char_bound(b2, sigma, genus)
        ceiling = floor(outcome.value)
        filters = ["double-cover 5/4 pipeline (absolute value restored)"]
        if kind.sphere:
            filters.append("sphere congruence N = -sigma (mod 16)")
        candidates = []
        for n in range(1, ceiling + 1):
            if not pipeline_check_char(b2, sigma, genus, n, use_abs=True):
                continue
            if kind.sphere and not km_congruence(sigma, n):
                continue
            candidates.append(n)
        return AdmissibleReport(tuple(candidates), (outcome,), tuple(filters))

    qp = kind.q
    outcomes = divisible_bound_outcomes(qp, b2, sigma, genus, model.spin, kind.quotient_characteristic)
    ceiling = floor(min(o.value for o in outcomes if o.applicable))
    checks = _divisor_checks(qp, model.spin, kind.quotient_characteristic)
    step = qp.q * qp.q
    filters = [f"multiples of q^2 = {step}"]
    filters.extend(
        f"cover pipeline at q = {check_q.q} ({'5/4' if spin else 'Betti-signature'} + genus bound)"
        for check_q, spin in checks
    )
    if len(checks) > 1:
        filters.append("multi-q intersection over all prime-power divisors")
    candidates = [
        n
        for n in range(step, ceiling + 1, step)
        if all(pipeline_check_div(check_q, b2, sigma, genus, n, spin) for check_q, spin in checks)
    ]
    return AdmissibleReport(tuple(candidates), outcomes, tuple(filters))
