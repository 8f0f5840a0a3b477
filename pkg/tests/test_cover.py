"""Tests for branched-cover invariants and the two basic inequalities."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from negsq import (
    NonIntegerSignature,
    PrimePower,
    ValidationError,
    betti_signature_check,
    branched_cover,
    cover_b2,
    cover_sigma,
    cover_spin,
    furuta_check,
)

PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9, 16, 25, 27)


class TestPrimePower:
    @pytest.mark.parametrize("q,p,r", [(2, 2, 1), (3, 3, 1), (4, 2, 2), (8, 2, 3), (9, 3, 2), (25, 5, 2), (27, 3, 3)])
    def test_factorization(self, q, p, r):
        pp = PrimePower(q)
        assert (pp.p, pp.r) == (p, r)
        assert pp.p**pp.r == q

    @pytest.mark.parametrize("q", [1, 0, -3, 6, 12, 100, 2.0])
    def test_rejects_non_prime_powers(self, q):
        with pytest.raises(ValidationError):
            PrimePower(q)


class TestCoverB2:
    def test_examples(self):
        assert cover_b2(2, 22, 1) == 46
        assert cover_b2(2, 22, 0) == 44
        assert cover_b2(3, 2, 0) == 6

    def test_no_genus_term_degenerates_to_multiple(self):
        for q in PRIME_POWERS:
            assert cover_b2(q, 7, 0) == q * 7

    @given(
        st.sampled_from(PRIME_POWERS),
        st.integers(0, 50),
        st.integers(0, 20),
    )
    def test_monotone_in_every_argument(self, q, b2, genus):
        base = cover_b2(q, b2, genus)
        assert cover_b2(q, b2 + 1, genus) > base
        assert cover_b2(q, b2, genus + 1) > base
        bigger_q = 31 if q >= max(PRIME_POWERS) else next(p for p in PRIME_POWERS if p > q)
        grown = cover_b2(bigger_q, b2, genus)
        assert grown >= base
        if b2 + genus > 0:
            assert grown > base

    def test_rejects_negative(self):
        with pytest.raises(ValidationError):
            cover_b2(2, -1, 0)
        with pytest.raises(ValidationError):
            cover_b2(2, 1, -1)


class TestCoverSigma:
    def test_examples(self):
        assert cover_sigma(2, -16, -8) == -28
        # coefficient (q^2-1)/(3q) at q = 2 is 1/2
        for n in range(1, 30):
            assert cover_sigma(2, -16, -4 * n) == -32 + 2 * n

    def test_non_integer_raises(self):
        with pytest.raises(NonIntegerSignature):
            cover_sigma(3, 0, -3)

    def test_null_branch_is_trivial(self):
        for q in PRIME_POWERS:
            assert cover_sigma(q, 0, 0) == 0

    @given(
        st.sampled_from(PRIME_POWERS),
        st.integers(-50, 50),
        st.integers(-100, 100),
    )
    def test_square_divisible_by_q_squared_is_always_integral(self, q, sigma, m):
        assert isinstance(cover_sigma(q, sigma, q * q * m), int)


class TestCoverSpin:
    def test_odd_degree_follows_base(self):
        assert cover_spin(3, True, None) is True
        assert cover_spin(3, False, None) is False
        assert cover_spin(27, True, False) is True

    def test_even_degree_follows_quotient_class(self):
        assert cover_spin(2, False, True) is True
        assert cover_spin(4, True, False) is False

    def test_even_degree_needs_the_flag(self):
        with pytest.raises(ValidationError):
            cover_spin(2, True, None)


class TestInequalities:
    def test_betti_signature_examples(self):
        assert betti_signature_check(46, -28)
        assert betti_signature_check(10, 10)
        assert not betti_signature_check(9, -10)

    def test_furuta_examples(self):
        assert furuta_check(46, -28)
        assert furuta_check(2, 0)
        assert furuta_check(12, -8)
        assert not furuta_check(11, -8)

    @given(st.integers(0, 500), st.integers(-300, 300))
    def test_furuta_implies_betti_signature(self, b2, sigma):
        if furuta_check(b2, sigma):
            assert betti_signature_check(b2, sigma)


class TestBranchedCover:
    def test_assembles_invariants(self):
        inv = branched_cover(2, 22, -16, 1, -8, base_spin=True, branch_class_over_q_characteristic=None)
        assert (inv.b2, inv.sigma) == (46, -28)
        assert inv.spin is None
        assert inv.q == PrimePower(2)

    def test_spin_resolution(self):
        odd = branched_cover(3, 22, -16, 0, -9, base_spin=True)
        assert odd.spin is True
        even = branched_cover(2, 22, -16, 0, -4, branch_class_over_q_characteristic=True)
        assert even.spin is True
