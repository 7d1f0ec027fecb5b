"""Complex-argument special functions: log-Gamma, digamma, polygamma, zeta,
generalized binomial coefficients.

log-Gamma, digamma and polygamma use upward recurrence into an asymptotic
(Stirling / Euler-Maclaurin) region.  The shift threshold grows with the
working precision so the truncated asymptotic series stays below the working
tolerance.  zeta uses the eta (alternating) series with Cohen-Rodriguez
Villegas-Zagier acceleration.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import bernoulli, mp, mpc, mpf

from .errors import DomainError, PoleError
from .precision import (
    DEFAULT_CONTEXT,
    PrecisionContext,
    constants,
    round_to,
    to_mp,
    working_precision,
)

__all__ = [
    "ln_gamma",
    "digamma",
    "digamma_log_series",
    "polygamma",
    "zeta",
    "gen_binom",
    "rational_binom",
    "log_series_depth_cap",
]


def _is_nonpositive_integer(z) -> bool:
    z = to_mp(z)
    if mp.im(z) != 0:
        return False
    re = mp.re(z)
    return re <= 0 and re == mp.floor(re)


def _as_exact_int(x):
    """Return the Python int a value represents exactly, else None."""
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else None
    try:
        z = to_mp(x)
    except TypeError:
        return None
    if mp.im(z) != 0:
        return None
    re = mp.re(z)
    if re == mp.floor(re) and abs(re) < 10**15:
        return int(re)
    return None


def _shift_threshold(bits: int) -> float:
    # keeps the Stirling truncation error below working tolerance
    return 8 + bits / 8


def _stirling_ln_gamma(z, bits):
    """Stirling series; requires Re(z) >= the shift threshold."""
    out = (z - mpf(1) / 2) * mp.log(z) - z + mp.log(2 * mp.pi) / 2
    zinv2 = 1 / (z * z)
    power = 1 / z
    eps = mpf(2) ** (-(bits + 16))
    prev = None
    for n in range(1, 400):
        term = bernoulli(2 * n) / (2 * n * (2 * n - 1)) * power
        out += term
        if abs(term) < eps * abs(out):
            break
        if prev is not None and abs(term) > abs(prev):
            break  # past the optimal truncation point
        prev = term
        power *= zinv2
    return out


def ln_gamma(z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Principal-branch log-Gamma via upward recurrence into the Stirling region."""
    if _is_nonpositive_integer(z):
        raise PoleError(f"ln_gamma pole at z={z}")
    bits = ctx.mantissa_bits
    with working_precision(bits):
        w = to_mp(z)
        threshold = _shift_threshold(bits)
        shift = mpf(0)
        while mp.re(w) < threshold:
            shift += mp.log(w)
            w = w + 1
        value = _stirling_ln_gamma(w, bits) - shift
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def digamma(z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """psi(z) via the recurrence psi(z+1) = psi(z) + 1/z and the asymptotic series."""
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma pole at z={z}")
    bits = ctx.mantissa_bits
    with working_precision(bits):
        w = to_mp(z)
        threshold = _shift_threshold(bits)
        shift = mpf(0)
        while mp.re(w) < threshold:
            shift += 1 / w
            w = w + 1
        # psi(w) ~ ln w - 1/(2w) - sum B_{2n} / (2n w^{2n})
        out = mp.log(w) - 1 / (2 * w)
        zinv2 = 1 / (w * w)
        power = zinv2
        eps = mpf(2) ** (-(bits + 16))
        prev = None
        for n in range(1, 400):
            term = bernoulli(2 * n) / (2 * n) * power
            out -= term
            if abs(term) < eps * abs(out):
                break
            if prev is not None and abs(term) > abs(prev):
                break
            prev = term
            power *= zinv2
        value = out - shift
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def polygamma(r: int, z, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """psi^(r)(z); r = 0 delegates to digamma."""
    if r < 0:
        raise DomainError("polygamma order must be non-negative")
    if r == 0:
        return digamma(z, ctx)
    if _is_nonpositive_integer(z):
        raise PoleError(f"polygamma pole at z={z}")
    bits = ctx.mantissa_bits
    with working_precision(bits):
        w = to_mp(z)
        threshold = _shift_threshold(bits)
        rfact = mp.factorial(r)
        sign = mpf(-1) ** (r + 1)  # sign of the defining series prefactor
        shift = mpf(0)
        while mp.re(w) < threshold:
            # psi^(r)(z) = psi^(r)(z+1) + (-1)^(r+1) r! / z^(r+1)
            shift += sign * rfact / w ** (r + 1)
            w = w + 1
        # d^r/dz^r of the digamma asymptotic series
        out = mp.factorial(r - 1) / w**r + rfact / (2 * w ** (r + 1))
        zinv2 = 1 / (w * w)
        power = 1 / w ** (2 + r)
        eps = mpf(2) ** (-(bits + 16))
        prev = None
        for n in range(1, 400):
            term = bernoulli(2 * n) * mp.factorial(2 * n + r - 1) / mp.factorial(2 * n) * power
            out += term
            if abs(term) < eps * abs(out):
                break
            if prev is not None and abs(term) > abs(prev):
                break
            prev = term
            power *= zinv2
        value = sign * out + shift
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def log_series_depth_cap(ctx: PrecisionContext = DEFAULT_CONTEXT) -> int:
    """Depth beyond which the alternating binomial inner sum loses all precision.

    60 at a 53-bit mantissa, scaled linearly with the mantissa size: the inner
    sum cancels roughly one bit per row.
    """
    return max(1, (60 * ctx.mantissa_bits) // 53)


def digamma_log_series(z, depth: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Binomial-transform log representation of psi, summed through n = depth-1.

    Cross-check only; converges slowly toward digamma(z) for Re(z) > 0.
    """
    w = to_mp(z)
    if mp.re(w) <= 0:
        raise DomainError("digamma_log_series requires Re(z) > 0")
    if depth < 1:
        raise DomainError("depth must be >= 1")
    cap = log_series_depth_cap(ctx)
    if depth > cap:
        raise DomainError(f"depth {depth} exceeds cap {cap} at {ctx.mantissa_bits} mantissa bits")
    bits = ctx.mantissa_bits
    # the inner sum cancels ~n bits; work with enough headroom
    with working_precision(bits + depth + 16):
        w = to_mp(z)
        logs = [mp.log(w + k) for k in range(depth)]
        total = mp.mpf(0) if mp.im(w) == 0 else mpc(0)
        for n in range(depth):
            inner = mpf(0)
            c = mpf(1)  # binom(n, k) carried incrementally
            for k in range(n + 1):
                inner += c * ((-1) ** k) * logs[k]
                c = c * (n - k) / (k + 1)
            total += inner / (n + 1)
        if mp.im(total) == 0:
            total = mp.re(total)
    return round_to(total, ctx)


def _zeta_eta_series(s, bits: int | None = None):
    """zeta(s) = eta(s) / (1 - 2^(1-s)) with CVZ alternating-series acceleration.

    Must be called inside a working-precision block; `bits` defaults to the
    current mantissa size.
    """
    if bits is None:
        bits = mp.prec
    digits = int(bits * 0.30103) + 3
    n = int(1.31 * digits) + 8
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    acc = mpf(0)
    for k in range(n):
        c = b - c
        acc += c / mpf(k + 1) ** s
        b = b * (k + n) * (k - n) / ((k + mpf(1) / 2) * (k + 1))
    eta = acc / d
    return eta / (1 - mpf(2) ** (1 - s))


def zeta(s, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Riemann zeta for real s > 0, s != 1, via the accelerated eta series."""
    sv = to_mp(s)
    if mp.im(sv) != 0:
        raise DomainError("zeta: complex s not supported")
    sv = mp.re(sv)
    if sv <= 0 or sv == 1:
        raise DomainError("zeta requires s > 0, s != 1")
    with working_precision(ctx.mantissa_bits):
        value = _zeta_eta_series(mpf(sv), ctx.mantissa_bits)
    return round_to(value, ctx)


def rational_binom(u, v: int):
    """Exact falling-factorial binomial with rational upper and integer lower index.

    Returns a Fraction when u is rational (int/Fraction), else an exact-ish
    product in the input's arithmetic.
    """
    if v < 0:
        return Fraction(0) if isinstance(u, (int, Fraction)) else to_mp(0)
    if isinstance(u, int):
        u = Fraction(u)
    if isinstance(u, Fraction):
        num = Fraction(1)
        for i in range(v):
            num *= u - i
        return num / math.factorial(v)
    w = to_mp(u)
    out = to_mp(1)
    for i in range(v):
        out *= w - i
    return out / mp.factorial(v)


_INT_FAST_PATH_LIMIT = 10**6


def gen_binom(u, v, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Generalized binomial coefficient Gamma(u+1) / (Gamma(v+1) Gamma(u-v+1)).

    Exact integer arithmetic for non-negative integer arguments; exact falling
    factorial when the lower index is a small integer (covers negative and
    rational upper arguments without touching the log-Gamma branch cut);
    otherwise a combination of three principal-branch log-Gamma values.
    """
    ui = _as_exact_int(u)
    vi = _as_exact_int(v)
    if ui is not None and vi is not None:
        if 0 <= vi <= ui <= _INT_FAST_PATH_LIMIT:
            return round_to(mpf(math.comb(ui, vi)), ctx)
        if ui >= 0 and (vi < 0 or vi > ui):
            return round_to(mpf(0), ctx)
    if vi is not None and 0 <= vi <= 10_000:
        val = rational_binom(u if not isinstance(u, complex) else u, vi)
        if isinstance(val, Fraction):
            with working_precision(ctx.mantissa_bits):
                val = to_mp(val)
        return round_to(val, ctx)
    # symmetric path: binom(u, v) = binom(u, u - v), useful when u - v is a
    # small non-negative integer but v itself is not
    if isinstance(u, (int, Fraction)) and isinstance(v, (int, Fraction)):
        dv = _as_exact_int(Fraction(u) - Fraction(v))
    else:
        dv = _as_exact_int(to_mp(u) - to_mp(v))
    if dv is not None and 0 <= dv <= 10_000:
        return _gen_binom_via_complement(u, dv, ctx)
    num_pole = _is_nonpositive_integer(to_mp(u) + 1)
    den_pole = _is_nonpositive_integer(to_mp(v) + 1) or _is_nonpositive_integer(to_mp(u) - to_mp(v) + 1)
    if num_pole and not den_pole:
        raise PoleError(f"gen_binom({u}, {v}) is infinite")
    if den_pole and not num_pole:
        return round_to(mpf(0), ctx)
    if den_pole and num_pole:
        raise PoleError(f"gen_binom({u}, {v}): indeterminate Gamma pole ratio")
    bits = ctx.mantissa_bits
    with working_precision(bits):
        uu, vv = to_mp(u), to_mp(v)
        value = mp.exp(ln_gamma(uu + 1, _wide(ctx)) - ln_gamma(vv + 1, _wide(ctx)) - ln_gamma(uu - vv + 1, _wide(ctx)))
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def _gen_binom_via_complement(u, dv: int, ctx: PrecisionContext):
    # binom(u, v) = binom(u, u - v) when the symmetric lower index is integer
    val = rational_binom(u if isinstance(u, (int, Fraction)) else to_mp(u), dv)
    if isinstance(val, Fraction):
        with working_precision(ctx.mantissa_bits):
            val = to_mp(val)
    return round_to(val, ctx)


def _wide(ctx: PrecisionContext) -> PrecisionContext:
    return PrecisionContext(
        mantissa_bits=ctx.mantissa_bits + GUARD_FOR_GAMMA,
        max_terms=ctx.max_terms,
        target_tol=ctx.target_tol,
    )


GUARD_FOR_GAMMA = 16
