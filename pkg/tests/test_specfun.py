"""Special-function layer vs independent oracles (mpmath's own implementations
and finite differences) plus domain/pole behavior."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from harmonicsums.errors import DomainError, PoleError
from harmonicsums.precision import DEFAULT_CONTEXT, PrecisionContext, to_mp, working_precision
from harmonicsums.specfun import (
    digamma,
    digamma_log_series,
    gen_binom,
    ln_gamma,
    log_series_depth_cap,
    polygamma,
    rational_binom,
    zeta,
)

CTX = DEFAULT_CONTEXT


def rel(a, b):
    with working_precision(CTX.mantissa_bits):
        if b == 0:
            return float(abs(a - b))
        return float(abs(a - b) / abs(b))


class TestLnGamma:
    @pytest.mark.parametrize(
        "z", [0.5, 1, 1.5, 2, 3.75, 10, 0.01, 25.5, complex(0.3, 0.7), complex(-0.5, 2.0), complex(5, -3)]
    )
    def test_against_oracle(self, z):
        with working_precision(CTX.mantissa_bits):
            oracle = mp.loggamma(to_mp(z))
        assert rel(ln_gamma(z, CTX), oracle) < 1e-35

    def test_pole(self):
        for z in (0, -1, -7):
            with pytest.raises(PoleError):
                ln_gamma(z, CTX)

    def test_functional_equation(self):
        # ln Gamma(z+1) = ln Gamma(z) + ln z for positive real z
        for z in (0.25, 1.1, 6.5, 40.0):
            with working_precision(CTX.mantissa_bits):
                lhs = ln_gamma(z + 1, CTX)
                rhs = ln_gamma(z, CTX) + mp.log(to_mp(z))
            assert rel(lhs, rhs) < 1e-35


class TestDigamma:
    @pytest.mark.parametrize("z", [0.5, 1, 2.5, 12, 0.05, complex(0.3, 0.7), complex(-1.5, 0.5)])
    def test_against_oracle(self, z):
        with working_precision(CTX.mantissa_bits):
            oracle = mp.psi(0, to_mp(z))
        assert rel(digamma(z, CTX), oracle) < 1e-35

    @settings(max_examples=1000, deadline=None)
    @given(
        st.floats(min_value=0.05, max_value=50.0, allow_nan=False),
        st.floats(min_value=-20.0, max_value=20.0, allow_nan=False),
    )
    def test_recurrence(self, re, im):
        # psi(z+1) = psi(z) + 1/z, checked at < 10x the context tolerance
        z = complex(re, im)
        with working_precision(CTX.mantissa_bits):
            lhs = digamma(complex(re + 1, im), CTX)
            rhs = digamma(z, CTX) + 1 / to_mp(z)
        assert rel(lhs, rhs) < 10 * CTX.target_tol

    def test_pole(self):
        with pytest.raises(PoleError):
            digamma(-3, CTX)


class TestPolygamma:
    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    @pytest.mark.parametrize("z", [0.5, 1, 3.25, 10, complex(1.3, 0.7)])
    def test_against_oracle(self, r, z):
        with working_precision(CTX.mantissa_bits):
            oracle = mp.psi(r, to_mp(z))
        assert rel(polygamma(r, z, CTX), oracle) < 1e-33

    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("z", [0.75, 1.5, 4.0])
    def test_against_finite_differences(self, r, z):
        # independent oracle: central finite difference of psi^(r-1)
        h = 1e-5
        with working_precision(CTX.mantissa_bits):
            approx = (polygamma(r - 1, z + h, CTX) - polygamma(r - 1, z - h, CTX)) / (2 * h)
        assert rel(polygamma(r, z, CTX), approx) < 1e-6

    def test_order_zero_is_digamma(self):
        assert rel(polygamma(0, 2.5, CTX), digamma(2.5, CTX)) == 0.0

    def test_errors(self):
        with pytest.raises(DomainError):
            polygamma(-1, 1.0, CTX)
        with pytest.raises(PoleError):
            polygamma(2, 0, CTX)


class TestDigammaLogSeries:
    @pytest.mark.parametrize("z", [1, 2, 3])
    def test_error_decreasing_in_depth(self, z):
        with working_precision(CTX.mantissa_bits):
            truth = mp.psi(0, mpf(z))
        errors = [abs(digamma_log_series(z, depth, CTX) - truth) for depth in (1, 2, 4, 8)]
        assert all(float(b) <= float(a) for a, b in zip(errors, errors[1:]))

    def test_depth_cap_enforced(self):
        cap = log_series_depth_cap(CTX)
        with pytest.raises(DomainError):
            digamma_log_series(2.0, cap + 1, CTX)
        with pytest.raises(DomainError):
            digamma_log_series(-1.0, 2, CTX)


class TestZeta:
    @pytest.mark.parametrize("s", [2, 3, 4, 5, 7, 1.5, 2.5, 0.5])
    def test_against_oracle(self, s):
        with working_precision(CTX.mantissa_bits):
            oracle = mp.zeta(to_mp(s))
        assert rel(zeta(s, CTX), oracle) < 1e-33

    def test_domain(self):
        with pytest.raises(DomainError):
            zeta(1, CTX)
        with pytest.raises(DomainError):
            zeta(-2, CTX)


class TestGenBinom:
    @given(st.integers(min_value=0, max_value=60), st.integers(min_value=0, max_value=60))
    @settings(max_examples=200, deadline=None)
    def test_integer_fast_path(self, n, k):
        if k > n:
            return
        assert rel(gen_binom(n, k, CTX), mpf(math.comb(n, k))) < 1e-35

    @pytest.mark.parametrize(
        "u,v",
        [(2.5, 1.25), (0.5, 0.5), (10.75, 3.2), (complex(1.5, 0.5), 2), (complex(2, 1), complex(1, 0.5))],
    )
    def test_against_oracle(self, u, v):
        with working_precision(CTX.mantissa_bits):
            oracle = mp.binomial(to_mp(u), to_mp(v))
        assert rel(gen_binom(u, v, CTX), oracle) < 1e-33

    def test_symmetry(self):
        # binom(u, v) == binom(u, u-v)
        for u, v in ((7.5, 2.25), (3.3, 1.1)):
            assert rel(gen_binom(u, v, CTX), gen_binom(u, u - v, CTX)) < 1e-35

    def test_negative_lower_integer_is_zero(self):
        assert gen_binom(2.5, -1, CTX) == 0
        assert gen_binom(complex(1, 1), -3, CTX) == 0

    def test_rational_binom_exact(self):
        assert rational_binom(Fraction(7, 2), 2) == Fraction(35, 8)
        assert rational_binom(Fraction(5), 2) == Fraction(10)
        assert rational_binom(Fraction(1, 2), 3) == Fraction(1, 16)
