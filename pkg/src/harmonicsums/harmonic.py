"""Generalized and odd harmonic numbers, exact rational arithmetic, and the
finite identities used throughout the catalog (the alternating binomial sum,
the reciprocal-binomial partial sum, half-integer harmonic relations, the
half-integer binomial identities, and the weighted quadratic-harmonic sums).

Exact values are Fractions; half-integer binomials that involve pi are carried
as an exact pair (rational coefficient, power of pi).
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp, mpf

from .errors import DomainError, PoleError
from .precision import DEFAULT_CONTEXT, PrecisionContext, constants, round_to, to_mp, working_precision
from .specfun import digamma, polygamma, rational_binom, zeta, _is_nonpositive_integer

__all__ = [
    "harmonic",
    "gen_harmonic",
    "exact_gen_harmonic",
    "odd_harmonic",
    "half_integer_harmonic",
    "finite_binom_sum",
    "finite_binom_sum_rhs",
    "frisch_sum",
    "frisch_rhs",
    "weighted_h2_sum",
    "weighted_h2_closed_form",
    "half_integer_binom",
    "half_integer_binom_exact",
    "HALF_INTEGER_BASE",
]

BigRational = Fraction


def harmonic(z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """H_z = psi(z+1) + gamma."""
    if _is_nonpositive_integer(z) and to_mp(z) != 0:
        raise PoleError(f"harmonic number pole at z={z}")
    c = constants(ctx)
    with working_precision(ctx.mantissa_bits):
        value = digamma(to_mp(z) + 1, ctx) + c.euler_gamma
    return round_to(value, ctx)


def gen_harmonic(m: int, z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """H_z^(m) = zeta(m) + (-1)^(m-1)/(m-1)! psi^(m-1)(z+1) for m >= 2."""
    if m < 1:
        raise DomainError("order m must be >= 1")
    if m == 1:
        return harmonic(z, ctx)
    if _is_nonpositive_integer(z) and to_mp(z) != 0:
        raise PoleError(f"generalized harmonic number pole at z={z}")
    c = constants(ctx)
    zm = {2: c.zeta2, 3: c.zeta3, 4: c.zeta4}.get(m)
    if zm is None:
        zm = zeta(m, ctx)
    with working_precision(ctx.mantissa_bits):
        sign = mpf(-1) ** (m - 1)
        value = zm + sign / mp.factorial(m - 1) * polygamma(m - 1, to_mp(z) + 1, ctx)
    return round_to(value, ctx)


def exact_gen_harmonic(m: int, n: int) -> Fraction:
    """Exact H_n^(m) for non-negative integer n."""
    if m < 1:
        raise DomainError("order m must be >= 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    return sum((Fraction(1, j**m) for j in range(1, n + 1)), Fraction(0))


def odd_harmonic(m: int, n: int) -> Fraction:
    """Exact O_n^(m) = sum over odd denominators 1..2n-1."""
    if m < 1:
        raise DomainError("order m must be >= 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    return sum((Fraction(1, (2 * j - 1) ** m) for j in range(1, n + 1)), Fraction(0))


# H_{-1/2}^(m) base values as (rational, ln2 coefficient, zeta coefficient):
# hard-wired so the half-integer relations stay independent of polygamma.
HALF_INTEGER_BASE = {
    1: {"ln2": Fraction(-2)},
    2: {"zeta2": Fraction(-2)},
    3: {"zeta3": Fraction(-6)},
    4: {"zeta4": Fraction(-14)},
}


def half_integer_harmonic(m: int, k: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """H_{k-1/2}^(m) from odd harmonic numbers and the hard-wired base values."""
    if m not in (1, 2, 3, 4):
        raise DomainError("half_integer_harmonic supports m in 1..4")
    if k < 0:
        raise DomainError("k must be >= 0")
    coeffs = half_integer_harmonic_exact(m, k)
    c = constants(ctx)
    basis = {"1": mpf(1), "ln2": c.ln2, "zeta2": c.zeta2, "zeta3": c.zeta3, "zeta4": c.zeta4}
    with working_precision(ctx.mantissa_bits):
        value = mpf(0)
        for name, q in coeffs.items():
            value += to_mp(q) * basis[name]
    return round_to(value, ctx)


def half_integer_harmonic_exact(m: int, k: int) -> dict:
    """Coefficient vector of H_{k-1/2}^(m) over the basis {1, ln2, zeta2, zeta3, zeta4}."""
    if m not in (1, 2, 3, 4):
        raise DomainError("half_integer_harmonic supports m in 1..4")
    coeffs = dict(HALF_INTEGER_BASE[m])
    rational = Fraction(2**m) * odd_harmonic(m, k)
    if rational:
        coeffs["1"] = rational
    return coeffs


def finite_binom_sum(m: int, n, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Direct evaluation of sum_{k=1}^m 1 / binom(k+n, k).

    Exact Fraction for rational n, numeric otherwise.  n = 0 and n = 1 are
    excluded: the closed form has a pole at n = 1 and degenerates at n = 0.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    if isinstance(n, int):
        n = Fraction(n)
    if isinstance(n, Fraction):
        if n in (0, 1):
            raise DomainError("n must not be 0 or 1")
        total = Fraction(0)
        for k in range(1, m + 1):
            b = rational_binom(n + k, k)
            if b == 0:
                raise PoleError(f"binom({n}+{k}, {k}) vanishes")
            total += Fraction(1) / b
        return total
    nv = to_mp(n)
    if nv == 0 or nv == 1:
        raise DomainError("n must not be 0 or 1")
    with working_precision(ctx.mantissa_bits):
        total = to_mp(0)
        for k in range(1, m + 1):
            total += 1 / rational_binom(nv + k, k)
        if mp.im(total) == 0:
            total = mp.re(total)
    return round_to(total, ctx)


def finite_binom_sum_rhs(m: int, n, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Closed form 1/(n-1) - n/(n-1) / binom(m+n, m+1); same kind as the input."""
    if isinstance(n, int):
        n = Fraction(n)
    if isinstance(n, Fraction):
        if n in (0, 1):
            raise DomainError("n must not be 0 or 1")
        return Fraction(1, 1) / (n - 1) - n / (n - 1) / rational_binom(n + m, m + 1)
    nv = to_mp(n)
    with working_precision(ctx.mantissa_bits):
        value = 1 / (nv - 1) - nv / (nv - 1) / rational_binom(nv + m, m + 1)
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def frisch_sum(n: int, z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Direct evaluation of sum_{k=1}^n binom(n,k) (-1)^(k-1) k/(z+k).

    Exact Fraction for rational z; equals 1/binom(n+z, n).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if isinstance(z, int):
        z = Fraction(z)
    if isinstance(z, Fraction):
        total = Fraction(0)
        for k in range(1, n + 1):
            if z + k == 0:
                raise PoleError(f"frisch_sum pole: z + {k} = 0")
            total += Fraction(math.comb(n, k)) * (-1) ** (k - 1) * k / (z + k)
        return total
    zv = to_mp(z)
    for k in range(1, n + 1):
        if zv + k == 0:
            raise PoleError(f"frisch_sum pole: z + {k} = 0")
    with working_precision(ctx.mantissa_bits):
        total = to_mp(0)
        for k in range(1, n + 1):
            total += mpf(math.comb(n, k)) * (-1) ** (k - 1) * k / (zv + k)
        if mp.im(total) == 0:
            total = mp.re(total)
    return round_to(total, ctx)


def frisch_rhs(n: int, z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """1 / binom(n+z, n), exact for rational z."""
    if isinstance(z, int):
        z = Fraction(z)
    if isinstance(z, Fraction):
        b = rational_binom(z + n, n)
        if b == 0:
            raise PoleError(f"binom({z}+{n}, {n}) vanishes")
        return Fraction(1) / b
    with working_precision(ctx.mantissa_bits):
        value = 1 / rational_binom(to_mp(z) + n, n)
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def weighted_h2_sum(j: int, r: int) -> Fraction:
    """Exact sum_{z=1}^r z^j H_z^(2) for j in {0, 1, 2}."""
    if j not in (0, 1, 2):
        raise DomainError("j must be 0, 1 or 2")
    if r < 1:
        raise DomainError("r must be >= 1")
    total = Fraction(0)
    h2 = Fraction(0)
    for z in range(1, r + 1):
        h2 += Fraction(1, z * z)
        total += Fraction(z**j) * h2
    return total


def weighted_h2_closed_form(j: int, r: int) -> Fraction:
    """Closed forms for the three weighted quadratic-harmonic partial sums."""
    if j not in (0, 1, 2):
        raise DomainError("j must be 0, 1 or 2")
    if r < 1:
        raise DomainError("r must be >= 1")
    h = exact_gen_harmonic(1, r)
    h2 = exact_gen_harmonic(2, r)
    if j == 0:
        return (r + 1) * h2 - h
    if j == 1:
        return (Fraction(r * (r + 1)) * h2 + h - r) / 2
    return Fraction(r * (r + 1) * (2 * r + 1), 6) * h2 - h / 6 + Fraction(r, 3) - Fraction(r * r, 6)


# ---------------------------------------------------------------------------
# half-integer binomial identities
# ---------------------------------------------------------------------------


def _exact_gamma(x: Fraction):
    """Gamma at an integer or half-integer as (rational, power of sqrt(pi)).

    Raises PoleError at non-positive integers.
    """
    x = Fraction(x)
    if x.denominator == 1:
        if x <= 0:
            raise PoleError(f"Gamma pole at {x}")
        return Fraction(math.factorial(x.numerator - 1)), 0
    if x.denominator != 2:
        raise DomainError("only integer and half-integer arguments supported")
    coeff = Fraction(1)
    # walk to Gamma(1/2) = sqrt(pi)
    while x > Fraction(1, 2):
        x -= 1
        coeff *= x
    while x < Fraction(1, 2):
        coeff /= x
        x += 1
    return coeff, 1


def _exact_halfint_binom(u: Fraction, v: Fraction):
    """binom(u, v) for integer/half-integer u, v as (rational, power of pi).

    The power of pi is (#sqrt-pi in numerator - #sqrt-pi in denominator)/2 and
    is always an integer for the cases used here.  A single Gamma pole in the
    denominator makes the value 0.
    """
    u, v = Fraction(u), Fraction(v)
    try:
        cn, sn = _exact_gamma(u + 1)
    except PoleError:
        # numerator pole: value finite only if a denominator pole cancels it
        for w in (v + 1, u - v + 1):
            if w.denominator == 1 and w <= 0:
                raise DomainError("indeterminate pole ratio; use a falling-factorial case")
        raise
    den = Fraction(1)
    sden = 0
    for w in (v + 1, u - v + 1):
        try:
            c, s = _exact_gamma(w)
        except PoleError:
            return Fraction(0), 0
        den *= c
        sden += s
    spi = sn - sden
    if spi % 2:
        raise DomainError("result is an odd power of sqrt(pi); not representable exactly here")
    return cn / den, spi // 2


_LEMMA2_CASES = ("A", "B", "C", "D", "E", "F")


def half_integer_binom_exact(case: str, u: int, v: int = 0):
    """Both sides of one half-integer binomial identity, exactly.

    Returns ((lhs_coeff, lhs_pi_power), (rhs_coeff, rhs_pi_power)) where the
    value of each side is coeff * pi**power.  Cases B and C carry pi**-1; the
    published form of case C omits the 1/pi factor, which is restored here.
    """
    case = case.upper()
    if case not in _LEMMA2_CASES:
        raise DomainError(f"unknown case {case!r}")
    u, v = int(u), int(v)
    half = Fraction(1, 2)
    if case == "A":
        if not 0 <= v <= u:
            raise DomainError("case A requires 0 <= v <= u")
        lhs = _exact_halfint_binom(u - half, Fraction(v))
        rhs = (
            Fraction(math.comb(2 * u, u) * math.comb(u, v), 4**v)
            / math.comb(2 * (u - v), u - v),
            0,
        )
    elif case == "B":
        if u < 0:
            raise DomainError("case B requires u >= 0")
        lhs = _exact_halfint_binom(Fraction(u), half)
        rhs = (Fraction(2 ** (2 * u + 1), math.comb(2 * u, u)), -1)
    elif case == "C":
        if v < 1 or u < 0:
            raise DomainError("case C requires u >= 0 and v >= 1")
        lhs = _exact_halfint_binom(Fraction(u), half - v)
        rhs = (
            Fraction((-1) ** (v - 1), v)
            / math.comb(u + v, v)
            / math.comb(2 * (u + v), u + v)
            * math.comb(2 * (v - 1), v - 1)
            * 2 ** (2 * u + 2),
            -1,
        )
    elif case == "D":
        if not 0 <= v <= u:
            raise DomainError("case D requires 0 <= v <= u")
        lhs = _exact_halfint_binom(u + half, Fraction(v))
        rhs = (
            Fraction(math.comb(2 * u + 1, 2 * v) * math.comb(2 * v, v), math.comb(u, v) * 4**v),
            0,
        )
    elif case == "E":
        if not v > u >= 0:
            raise DomainError("case E requires v > u >= 0")
        lhs = _exact_halfint_binom(u + half, Fraction(v))
        rhs = (
            Fraction((-1) ** (v - u - 1), 2 ** (2 * v - 1))
            * Fraction(2 * u + 1, v - u)
            / math.comb(v, u)
            * math.comb(2 * u, u)
            * math.comb(2 * (v - u - 1), v - u - 1),
            0,
        )
    else:  # F
        if u < 0:
            raise DomainError("case F requires u >= 0")
        lhs = _exact_halfint_binom(Fraction(-3, 2), Fraction(u))
        rhs = (Fraction((-1) ** u * (2 * u + 1), 4**u) * math.comb(2 * u, u), 0)
    return _normalize_pi_pair(lhs), _normalize_pi_pair(rhs)


def _normalize_pi_pair(pair):
    coeff, power = pair
    if coeff == 0:
        return Fraction(0), 0
    return Fraction(coeff), power


def half_integer_binom(case: str, u: int, v: int = 0, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Numeric (lhs, rhs) pair for one half-integer binomial identity."""
    (lc, lp), (rc, rp) = half_integer_binom_exact(case, u, v)
    c = constants(ctx)
    with working_precision(ctx.mantissa_bits):
        lhs = to_mp(lc) * c.pi**lp
        rhs = to_mp(rc) * c.pi**rp
    return round_to(lhs, ctx), round_to(rhs, ctx)
