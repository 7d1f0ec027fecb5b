"""Harmonic-number layer: generalized/odd/half-integer harmonic numbers and
the exact finite identities (binomial sums, weighted partial sums)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from harmonicsums.errors import DomainError, PoleError
from harmonicsums.harmonic import (
    exact_gen_harmonic,
    finite_binom_sum,
    finite_binom_sum_rhs,
    frisch_rhs,
    frisch_sum,
    gen_harmonic,
    half_integer_binom,
    half_integer_binom_exact,
    half_integer_harmonic,
    half_integer_harmonic_exact,
    harmonic,
    odd_harmonic,
    weighted_h2_closed_form,
    weighted_h2_sum,
)
from harmonicsums.precision import DEFAULT_CONTEXT, PrecisionContext, constants, to_mp, working_precision

CTX = DEFAULT_CONTEXT


def rel(a, b):
    with working_precision(CTX.mantissa_bits):
        if b == 0:
            return float(abs(a - b))
        return float(abs(a - b) / abs(b))


class TestHarmonic:
    @given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=4))
    @settings(max_examples=150, deadline=None)
    def test_matches_exact_at_integers(self, n, m):
        exact = exact_gen_harmonic(m, n)
        numeric = gen_harmonic(m, n, CTX)
        assert rel(numeric, to_mp(exact)) < 1e-13

    def test_order_one(self):
        with working_precision(CTX.mantissa_bits):
            h7 = to_mp(Fraction(363, 140))
        assert rel(harmonic(7, CTX), h7) < 1e-30
        assert rel(harmonic(1, CTX), mpf(1)) < 1e-30

    def test_complex_argument_vs_oracle(self):
        z = mp.mpc("0.3", "0.7")
        with working_precision(CTX.mantissa_bits):
            oracle = mp.psi(0, z + 1) + mp.euler
        assert rel(harmonic(complex(0.3, 0.7), CTX), oracle) < 1e-33

    def test_gen_harmonic_limits_to_zeta(self):
        c = constants(CTX)
        # H_z^(2) -> zeta(2) as z -> infinity
        assert abs(float(gen_harmonic(2, 10**6, CTX) - c.zeta2)) < 1e-5

    def test_pole(self):
        with pytest.raises(PoleError):
            harmonic(-2, CTX)


class TestOddHarmonic:
    def test_values(self):
        assert odd_harmonic(1, 3) == 1 + Fraction(1, 3) + Fraction(1, 5)
        assert odd_harmonic(2, 2) == 1 + Fraction(1, 9)
        assert odd_harmonic(1, 0) == 0

    def test_domain(self):
        with pytest.raises(DomainError):
            odd_harmonic(0, 3)
        with pytest.raises(DomainError):
            odd_harmonic(1, -1)


class TestHalfIntegerHarmonic:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("k", [0, 1, 2, 5, 20, 100])
    def test_closure_against_polygamma(self, m, k):
        # the closed form over {1, ln2, zeta2, zeta3, zeta4} vs the psi-based value
        closed = half_integer_harmonic(m, k, CTX)
        direct = gen_harmonic(m, Fraction(2 * k - 1, 2), CTX)
        assert rel(closed, direct) < 10 * CTX.target_tol

    def test_base_values(self):
        assert half_integer_harmonic_exact(1, 0) == {"ln2": Fraction(-2)}
        assert half_integer_harmonic_exact(3, 0) == {"zeta3": Fraction(-6)}

    def test_relation_to_odd_harmonics(self):
        # H_{k-1/2}^(m) - H_{-1/2}^(m) = 2^m O_k^(m)
        for m in (1, 2, 3, 4):
            for k in (1, 4, 9):
                full = half_integer_harmonic_exact(m, k)
                base = half_integer_harmonic_exact(m, 0)
                diff = {key: full.get(key, 0) - base.get(key, 0) for key in set(full) | set(base)}
                diff = {key: v for key, v in diff.items() if v}
                assert diff == {"1": Fraction(2**m) * odd_harmonic(m, k)}


class TestFrisch:
    def test_exact_grid(self):
        for n in range(1, 13):
            for p in range(1, 7):
                for q in range(1, 7):
                    z = Fraction(p, q)
                    assert frisch_sum(n, z) == frisch_rhs(n, z)

    def test_numeric_complex(self):
        z = complex(0.3, 0.7)
        assert rel(frisch_sum(6, z, CTX), frisch_rhs(6, z, CTX)) < 1e-30

    def test_pole(self):
        with pytest.raises(PoleError):
            frisch_sum(5, Fraction(-2))


class TestFiniteBinomSum:
    def test_exact_grid(self):
        for m in range(1, 21):
            for n in (2, 3, 7, Fraction(1, 2), Fraction(5, 3), Fraction(-1, 2)):
                assert finite_binom_sum(m, n) == finite_binom_sum_rhs(m, n)

    def test_excluded_points(self):
        for bad in (0, 1):
            with pytest.raises(DomainError):
                finite_binom_sum(3, bad)


class TestWeightedH2:
    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_closed_form(self, j):
        for r in range(1, 101):
            assert weighted_h2_sum(j, r) == weighted_h2_closed_form(j, r)

    def test_domain(self):
        with pytest.raises(DomainError):
            weighted_h2_sum(3, 5)
        with pytest.raises(DomainError):
            weighted_h2_sum(0, 0)


class TestHalfIntegerBinom:
    @pytest.mark.parametrize("case", ["A", "B", "C", "D", "E", "F"])
    def test_exact_exhaustive(self, case):
        checked = 0
        for u in range(0, 11):
            for v in range(0, 11):
                try:
                    lhs, rhs = half_integer_binom_exact(case, u, v)
                except DomainError:
                    continue
                assert lhs == rhs, (case, u, v, lhs, rhs)
                checked += 1
        assert checked > 0

    def test_numeric_against_oracle(self):
        # lhs of case B is binom(u, 1/2); compare directly with mpmath
        for u in (0, 1, 3, 6):
            lhs, rhs = half_integer_binom("B", u, ctx=CTX)
            with working_precision(CTX.mantissa_bits):
                oracle = mp.binomial(u, mpf(1) / 2)
            assert rel(lhs, oracle) < 1e-33
            assert rel(lhs, rhs) < 1e-33
