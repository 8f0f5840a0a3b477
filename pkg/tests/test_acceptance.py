"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Run with ``pytest -v tests/test_acceptance.py`` to get one pass/fail line per
criterion; with ``-s`` each criterion also prints an explicit PASS summary.
"""

import random
from fractions import Fraction

import pytest

from negsq import (
    CharacteristicClass,
    NonIntegerSignature,
    Scenario,
    catalog,
    char_bound,
    conjectural_bound,
    cover_sigma,
    diagonal_form,
    direct_sum,
    e8_form,
    enumerate_admissible,
    furuta_conjecture_params,
    gsig_bound,
    gsig_uniform_odd_bound,
    hyperbolic_plane,
    multiple_genus,
    oracle_max_char,
)


def _invariant_grid():
    """(b2, sigma, genus) with 1 <= b2 <= 30, |sigma| <= b2, matching parity,
    genus in 0..5; about 3000 triples."""
    for b2 in range(1, 31):
        for sigma in range(-b2, b2 + 1, 2):
            for genus in range(6):
                yield b2, sigma, genus


def test_criterion_01_k3_divisible_by_two_bound():
    for genus in range(11):
        assert gsig_bound(2, 22, -16, genus).value == 76 + 4 * genus
    print("criterion 1 PASS: divisible-by-2 bound on the k3 invariants is 76 + 4g")


def test_criterion_02_k3_uniform_odd_bound():
    for genus in range(11):
        expected = Fraction(171, 2) + Fraction(9, 2) * genus
        assert gsig_uniform_odd_bound(22, -16, genus).value == expected
    print("criterion 2 PASS: uniform odd-divisibility bound on k3 is 171/2 + (9/2)g")


def test_criterion_03_characteristic_sphere_sets():
    two = enumerate_admissible(Scenario(catalog("cp2-2"), 0, CharacteristicClass(sphere=True)))
    assert two.candidates == (1,)
    three = enumerate_admissible(Scenario(catalog("cp2-3"), 0, CharacteristicClass(sphere=True)))
    assert three.candidates == (2, 18)
    for k in range(2, 21):
        report = enumerate_admissible(Scenario(catalog(f"cp2-{k}"), 0, CharacteristicClass(sphere=True)))
        for n in report.candidates:
            assert n <= 9 * (k - 1)
            assert n % 16 == (k - 1) % 16
    print("criterion 3 PASS: sphere sets {1} and {2, 18}; all k in 2..20 sound")


def test_criterion_04_oracle_equivalence_for_characteristic_bound():
    cases = 0
    for b2, sigma, genus in _invariant_grid():
        expected = max(0, 4 * b2 - 5 * sigma - 8 + 8 * genus)
        assert oracle_max_char(b2, sigma, genus) == expected
        cases += 1
    assert cases == 2970
    print(f"criterion 4 PASS: brute-force scan equals the closed form on {cases} cases")


def test_criterion_05_conjecture_specialization_identity():
    cases = 0
    for b2, sigma, genus in _invariant_grid():
        params = furuta_conjecture_params(b2, sigma)
        assert conjectural_bound(params, genus).value == char_bound(b2, sigma, genus).value
        cases += 1
    print(f"criterion 5 PASS: conjectural bound specializes to the characteristic bound on {cases} cases")


def test_criterion_06_catalog_signatures():
    k3 = catalog("k3").gram
    assert k3.signature() == -16
    assert k3.rank == 22
    assert k3.is_even()
    for k in range(1, 11):
        form = diagonal_form((1,) + (-1,) * k)
        assert form.signature() == 1 - k
        assert not form.is_even()
        assert catalog(f"cp2-{k}").sigma == 1 - k
    h = hyperbolic_plane()
    assert h.signature() == 0
    assert h.is_even()
    print("criterion 6 PASS: catalog signatures (-16, 1-k, 0) and parities are exact")


def _characteristic_solutions_by_scan(form):
    """All 0/1 solutions of the characteristic congruences, by 2^n scan."""
    n = form.rank
    masks = [sum((row[j] & 1) << j for j in range(n)) for row in form.entries]
    targets = [row[i] & 1 for i, row in enumerate(form.entries)]
    hits = []
    for x in range(1 << n):
        for mask, target in zip(masks, targets):
            if (mask & x).bit_count() & 1 != target:
                break
        else:
            hits.append(x)
    return hits


def test_criterion_07_characteristic_uniqueness_up_to_rank_10():
    plus, minus, h = diagonal_form((1,)), diagonal_form((-1,)), hyperbolic_plane()
    e8, minus_e8 = e8_form(), e8_form().negated()
    checked = 0
    for ne8 in range(2):
        for nme8 in range(2 - ne8):
            for nh in range(6):
                base_rank = 8 * (ne8 + nme8) + 2 * nh
                if base_rank > 10:
                    continue
                for na in range(11 - base_rank):
                    for nb in range(11 - base_rank - na):
                        blocks = [plus] * na + [minus] * nb + [h] * nh + [e8] * ne8 + [minus_e8] * nme8
                        if not blocks:
                            continue
                        form = direct_sum(*blocks)
                        rep = form.characteristic_rep()
                        rep_bits = sum(bit << i for i, bit in enumerate(rep))
                        assert _characteristic_solutions_by_scan(form) == [rep_bits]
                        checked += 1
    assert checked > 100
    print(f"criterion 7 PASS: exactly one mod-2 characteristic vector on {checked} forms of rank <= 10")


def test_criterion_08_cover_integrality():
    rng = random.Random(20260809)
    prime_powers = (2, 3, 4, 5, 7, 8, 9)
    for _ in range(1000):
        q = rng.choice(prime_powers)
        m = rng.randint(1, 100)
        sigma = rng.randint(-20, 20)
        value = cover_sigma(q, sigma, -q * q * m)
        assert isinstance(value, int)
    with pytest.raises(NonIntegerSignature):
        cover_sigma(3, 0, -3)
    print("criterion 8 PASS: 1000 random covers integral; the q=3, square -3 case raises")


def test_criterion_09_dominance_and_limit():
    sweep = (3, 5, 7, 9, 11, 13, 25, 27, 49)
    grid = [
        (b2, sigma, genus)
        for b2 in (2, 4, 7, 11, 16, 22, 25, 28, 30, 13)
        for sigma, genus in ((-b2, 0), (0, 1), (b2 - 2, 2), (-3, 0), (1, 5))
    ]
    assert len(grid) == 50
    for b2, sigma, genus in grid:
        uniform = gsig_uniform_odd_bound(b2, sigma, genus).value
        limit = 2 * (b2 - sigma) + 4 * genus
        values = [gsig_bound(q, b2, sigma, genus).value for q in sweep]
        for value in values:
            assert uniform >= value
            assert value > limit
        assert all(a > b for a, b in zip(values, values[1:]))
        gaps = [value - limit for value in values]
        assert all(a > b for a, b in zip(gaps, gaps[1:]))
    print("criterion 9 PASS: uniform bound dominates and odd-q bounds decrease toward the q=2 expression")


def test_criterion_10_genus_formula_coherence():
    for n in range(1, 101):
        for genus in range(6):
            doubled = multiple_genus(2, n, genus)
            assert doubled == n - 1 + 2 * genus
            general = 2 * (2 - 1) // 2 * n + 1 - 2 + 2 * genus
            assert doubled == general
    print("criterion 10 PASS: doubling formula and general multiplier formula agree at d = 2")
