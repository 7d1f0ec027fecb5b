"""Series term generation, summation to tolerance, tail estimation and
convergence acceleration.

Two kernels are supported: the reciprocal generalized binomial 1/binom(n+z, n)
for a general argument z, and the central-binomial kernel
4^n / (binom(2(n+m), n+m) binom(n+m, m)) for a half-integer argument indexed
by the non-negative integer m.  Weights multiply the kernel by 1, a shifted
harmonic number, a harmonic difference, the quadratic harmonic combination, or
a shifted odd harmonic number.

Slowly convergent sums are extrapolated: a windowed Levin u-transform for pure
power-law tails, and a generalized Richardson scheme with an explicit
{N^(1-s-j) ln^q N} remainder basis when harmonic-number weights introduce
logarithmic factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator, Optional

from mpmath import mp, mpc, mpf

from .errors import (
    AccelerationDiverged,
    ConvergenceError,
    DomainError,
    EstimateUnavailable,
)
from .precision import DEFAULT_CONTEXT, PrecisionContext, round_to, to_mp, working_precision
from .specfun import ln_gamma, _is_nonpositive_integer
from . import harmonic as _harmonic

__all__ = [
    "Family",
    "Weight",
    "SeriesSpec",
    "TermSource",
    "SumResult",
    "term",
    "partial_sum",
    "sum_to_tolerance",
    "tail_estimate",
    "accelerate",
    "as_source",
]


class Family(str, Enum):
    P2 = "P2"
    P12 = "P12"
    P13 = "P13"
    P14 = "P14"
    P123 = "P123"
    P1234 = "P1234"


FAMILY_OFFSETS = {
    Family.P2: (0, 0),
    Family.P12: (0, 1),
    Family.P13: (0, 2),
    Family.P14: (0, 3),
    Family.P123: (0, 1, 2),
    Family.P1234: (0, 1, 2, 3),
}


class Weight(str, Enum):
    ONE = "one"
    H_SHIFT = "H_shift"
    H_DIFF = "H_diff"
    Q_DIFF = "Q_diff"
    O_SHIFT = "O_shift"


_LOG_DEGREE = {
    Weight.ONE: 0,
    Weight.H_SHIFT: 1,
    Weight.H_DIFF: 1,
    Weight.Q_DIFF: 2,
    Weight.O_SHIFT: 1,
}


@dataclass(frozen=True)
class SeriesSpec:
    """One series: denominator family, weight, and argument (general z or half-integer m)."""

    family: Family
    weight: Weight = Weight.ONE
    z: object = None
    m: Optional[int] = None
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if (self.z is None) == (self.m is None):
            raise DomainError("exactly one of z (general) or m (half-integer) must be set")
        if self.m is not None:
            if self.m < 0:
                raise DomainError("half-integer index m must be >= 0")
            if self.weight in (Weight.H_SHIFT, Weight.H_DIFF, Weight.Q_DIFF):
                raise DomainError("harmonic weights pair with a general argument; use O_shift for half-integer")
        else:
            if self.weight is Weight.O_SHIFT:
                raise DomainError("O_shift requires a half-integer argument")
            zv = to_mp(self.z)
            if _is_nonpositive_integer(zv) and zv != 0:
                raise DomainError("z must avoid the negative integers")
            if mp.re(zv) <= -1:
                raise DomainError("series converges only for Re(z) > -1")

    @property
    def offsets(self):
        return FAMILY_OFFSETS[self.family]


@dataclass
class TermSource:
    """A summable series: a term stream plus tail-shape metadata.

    decay is the exponent s in t_n ~ C n^(-s) ln^log_degree(n); it may be
    complex for complex general arguments.
    """

    make_stream: Callable[[PrecisionContext], Iterator]
    decay: object
    log_degree: int
    alternating: bool = False
    label: str = ""


@dataclass
class SumResult:
    value: object
    terms_used: int
    tail_estimate: float
    accelerated: bool
    achieved_tol: float


def as_source(spec) -> TermSource:
    """Build a TermSource from a SeriesSpec (TermSources pass through)."""
    if isinstance(spec, TermSource):
        return spec
    if not isinstance(spec, SeriesSpec):
        raise DomainError(f"cannot sum object of type {type(spec).__name__}")
    deg = len(spec.offsets)
    if spec.m is not None:
        decay = mpf(deg) + spec.m - mpf(1) / 2
    else:
        decay = deg + to_mp(spec.z)
    return TermSource(
        make_stream=lambda ctx, s=spec: _spec_stream(s, ctx),
        decay=decay,
        log_degree=_LOG_DEGREE[spec.weight],
        label=f"{spec.family.value}/{spec.weight.value}",
    )


def _poly(offsets, n):
    d = mpf(1)
    for o in offsets:
        d *= n + o
    return d


def _spec_stream(spec: SeriesSpec, ctx: PrecisionContext) -> Iterator:
    """Terms t_1, t_2, ... computed by exact recurrences from O(1) seeds."""
    offsets = spec.offsets
    scale = to_mp(spec.scale)
    if spec.m is not None:
        m = spec.m
        kern = mpf(4) / (mpf(math.comb(2 * (1 + m), 1 + m)) * math.comb(1 + m, m))
        need_odd = spec.weight is Weight.O_SHIFT
        o_val = to_mp(_harmonic.odd_harmonic(1, m)) if need_odd else None
        n = 1
        while True:
            if need_odd:
                o_val = o_val + 1 / mpf(2 * (n + m) - 1)
                w = o_val
            else:
                w = mpf(1)
            yield scale * kern * w / _poly(offsets, n)
            n += 1
            q = n + m
            # C(2q,q)/C(2q-2,q-1) = (2q)(2q-1)/q^2, C(q,m)/C(q-1,m) = q/(q-m)
            kern *= 4 * mpf(q) * q / (mpf(2 * q - 1) * (2 * q)) * mpf(q - m) / q
    else:
        z = to_mp(spec.z)
        kern = 1 / (1 + z)
        if spec.weight is Weight.H_SHIFT:
            h_base = _harmonic.harmonic(spec.z, ctx) if z != 0 else mpf(0)
        else:
            h_base = None
        d1 = to_mp(0) * z  # matches real/complex type of z
        d2 = d1
        n = 1
        while True:
            if spec.weight is not Weight.ONE:
                d1 = d1 + 1 / (z + n)
            if spec.weight is Weight.Q_DIFF:
                d2 = d2 + 1 / (z + n) ** 2
            if spec.weight is Weight.ONE:
                w = mpf(1)
            elif spec.weight is Weight.H_SHIFT:
                w = h_base + d1
            elif spec.weight is Weight.H_DIFF:
                w = d1
            else:
                w = d1 * d1 + d2
            yield scale * kern * w / _poly(offsets, n)
            n += 1
            kern *= mpf(n) / (n + z)


_DIRECT_KERNEL_LIMIT = 50  # above this, kernels go through log-Gamma differences


def term(spec: SeriesSpec, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Standalone summand at index n (independent of the streaming recurrences)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if not isinstance(spec, SeriesSpec):
        raise DomainError("term() requires a SeriesSpec")
    offsets = spec.offsets
    with working_precision(ctx.mantissa_bits):
        if spec.m is not None:
            m = spec.m
            q = n + m
            if n <= _DIRECT_KERNEL_LIMIT:
                kern = mpf(4) ** n / (mpf(math.comb(2 * q, q)) * math.comb(q, m))
            else:
                lg = (
                    n * mp.log(4)
                    + 2 * ln_gamma(q + 1, ctx)
                    - ln_gamma(2 * q + 1, ctx)
                    - ln_gamma(q + 1, ctx)
                    + ln_gamma(m + 1, ctx)
                    + ln_gamma(n + 1, ctx)
                )
                kern = mp.exp(lg)
            if spec.weight is Weight.O_SHIFT:
                w = to_mp(_harmonic.odd_harmonic(1, n + m))
            else:
                w = mpf(1)
        else:
            z = to_mp(spec.z)
            if n <= _DIRECT_KERNEL_LIMIT:
                kern = mpf(1)
                for j in range(1, n + 1):
                    kern *= mpf(j) / (z + j)
            else:
                kern = mp.exp(ln_gamma(n + 1, ctx) + ln_gamma(z + 1, ctx) - ln_gamma(n + z + 1, ctx))
            if spec.weight is Weight.ONE:
                w = mpf(1)
            else:
                hz = _harmonic.harmonic(spec.z, ctx) if z != 0 else mpf(0)
                hnz = _harmonic.harmonic(z + n, ctx)
                if spec.weight is Weight.H_SHIFT:
                    w = hnz
                elif spec.weight is Weight.H_DIFF:
                    w = hnz - hz
                else:
                    h2z = _harmonic.gen_harmonic(2, spec.z, ctx) if z != 0 else mpf(0)
                    h2nz = _harmonic.gen_harmonic(2, z + n, ctx)
                    w = (hnz - hz) ** 2 + h2nz - h2z
        value = to_mp(spec.scale) * kern * w / _poly(offsets, n)
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def _compensated(stream, count):
    """Neumaier-compensated partial sums; returns (sums, terms)."""
    s = mpf(0)
    comp = mpf(0)
    sums = []
    terms = []
    for _ in range(count):
        t = next(stream)
        new = s + t
        if abs(s) >= abs(t):
            comp += (s - new) + t
        else:
            comp += (t - new) + s
        s = new
        terms.append(t)
        sums.append(s + comp)
    return sums, terms


def partial_sum(spec, N: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Compensated sum of the first N terms."""
    if N < 1:
        raise DomainError("N must be >= 1")
    src = as_source(spec)
    with working_precision(ctx.mantissa_bits):
        sums, _ = _compensated(src.make_stream(ctx), N)
        value = sums[-1]
        if mp.im(value) == 0:
            value = mp.re(value)
    return round_to(value, ctx)


def _levin_u(S, a, n0, k, beta=1):
    num = mpf(0)
    den = mpf(0)
    for j in range(k + 1):
        m = n0 + j
        w = (beta + m) * a[m]
        if w == 0:
            raise AccelerationDiverged("zero term inside the transform window")
        c = (-1) ** j * mpf(math.comb(k, j)) * (mpf(beta + m) / (beta + n0 + k)) ** (k - 1)
        num += c * S[m] / w
        den += c / w
    if den == 0:
        raise AccelerationDiverged("degenerate Levin denominator")
    return num / den


def _richardson(S):
    """Neville extrapolation of S_N in powers of 1/N (N = 1, 2, ...)."""
    n = len(S)
    row = list(S)
    xs = [mpf(1) / (i + 1) for i in range(n)]
    for level in range(1, n):
        new = []
        for i in range(n - level):
            x0, x1 = xs[i], xs[i + level]
            new.append((row[i + 1] * x0 - row[i] * x1) / (x0 - x1))
        row = new
    return row[0]


def accelerate(partials, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Limit estimate from a sequence of partial sums (Levin u-transform,
    Richardson fallback for single-signed power-law term sequences)."""
    if len(partials) < 8:
        raise DomainError("need at least 8 partial sums")
    with working_precision(2 * ctx.mantissa_bits):
        S = [to_mp(p) for p in partials]
        a = [S[0]] + [S[i] - S[i - 1] for i in range(1, len(S))]
        if all(x == 0 for x in a[1:]):
            return round_to(S[-1], ctx)
        tol = mpf(ctx.target_tol)
        best = None
        best_delta = None
        prev = None
        try:
            for k in range(2, len(S) - 1):
                est = _levin_u(S, a, 0, k)
                if prev is not None:
                    delta = abs(est - prev)
                    if best_delta is None or delta < best_delta:
                        best, best_delta = est, delta
                prev = est
        except AccelerationDiverged:
            best = None
        if best is not None and best_delta <= mpf(10) ** 6 * tol * (1 + abs(best)):
            return round_to(best, ctx)
        signs = {mp.sign(mp.re(x)) for x in a[1:] if x != 0}
        if len(signs) == 1:
            rich = _richardson(S)
            return round_to(rich, ctx)
        raise AccelerationDiverged("transform columns did not stabilize")


def _levin_ladder(S, a, tol, n0, kmax):
    prev = None
    best = None
    best_delta = None
    for k in range(4, kmax + 1):
        est = _levin_u(S, a, n0, k)
        if prev is not None:
            delta = abs(est - prev)
            if best_delta is None or delta <= best_delta:
                best, best_delta = est, delta
            if delta <= tol * abs(est):
                return est, delta, k
        prev = est
    return best, best_delta, kmax


def _basis_extrapolate(S, s_exp, logdeg, n0, jdeg):
    """Solve S_N = S_inf - N^(1-s) sum c_(q,j) ln^q(N) N^(-j) on a window of N."""
    nunk = 1 + (logdeg + 1) * (jdeg + 1)
    rows = [n0 + i for i in range(nunk)]
    if rows[-1] > len(S):
        raise DomainError("not enough partial sums for the requested window")
    iscomplex = isinstance(s_exp, mpc) or any(isinstance(x, mpc) for x in S[:1])
    A = mp.matrix(nunk, nunk)
    b = mp.matrix(nunk, 1)
    for r, N in enumerate(rows):
        A[r, 0] = 1
        lnN = mp.log(mpf(N))
        base = (mpc(N) if iscomplex else mpf(N)) ** (1 - s_exp)
        col = 1
        for q in range(logdeg + 1):
            for j in range(jdeg + 1):
                A[r, col] = -base * lnN**q / mpf(N) ** j
                col += 1
        b[r] = S[N - 1]
    x = mp.lu_solve(A, b)
    return x[0]


# escalation ladder for the basis extrapolation: (window start, 1/N fit depth)
_BASIS_CONFIGS = ((40, 5), (60, 7), (90, 9))


def sum_to_tolerance(spec, ctx: PrecisionContext = DEFAULT_CONTEXT) -> SumResult:
    """Sum a series to the context's relative tolerance.

    Direct truncation plus a fitted tail bound when the tail decays fast
    enough to make that feasible within the term budget; otherwise
    extrapolation (Levin u-transform for pure power-law tails, the
    log-augmented Richardson basis when the weight carries ln n factors).
    """
    src = as_source(spec)
    tol = mpf(ctx.target_tol)
    bits = ctx.mantissa_bits
    p = float(mp.re(to_mp(src.decay)))
    if p <= 1:
        raise DomainError(f"series does not converge (decay exponent {p})")
    wp = int(2.5 * bits) + 48
    with working_precision(wp):
        stream = src.make_stream(ctx)
        probe_n = 64
        sums, terms = _compensated(stream, probe_n)
        s_est = abs(sums[-1]) or mpf(1)
        # rough direct-truncation budget from t_N ~ C N^-p
        c_mag = abs(terms[-1]) * mpf(probe_n) ** p
        direct_budget = min(ctx.max_terms, 50_000)
        feasible_direct = False
        if src.log_degree == 0 and p > 1.5 and c_mag > 0:
            n_needed = (c_mag / (tol * s_est * (p - 1))) ** (1 / (p - 1))
            feasible_direct = n_needed <= direct_budget
        if feasible_direct:
            n = probe_n
            while n < direct_budget:
                batch = min(1024, direct_budget - n)
                more_sums, more_terms = _compensated_continue(stream, sums, terms, batch)
                n += batch
                tail = abs(terms[-1]) * mpf(n) / (p - 1)
                if tail <= tol * abs(sums[-1]):
                    value = sums[-1]
                    if mp.im(value) == 0:
                        value = mp.re(value)
                    ach = float(tail / abs(value)) if value != 0 else float(tail)
                    return SumResult(
                        value=round_to(value, ctx),
                        terms_used=n,
                        tail_estimate=float(tail),
                        accelerated=False,
                        achieved_tol=ach,
                    )
            # fall through to extrapolation
        needed = max(_BASIS_CONFIGS[-1][0] + 40, 180)
        needed = min(needed, ctx.max_terms)
        while len(sums) < needed:
            _compensated_continue(stream, sums, terms, needed - len(sums))
        if src.log_degree == 0:
            est, delta, _k_used = _levin_ladder(sums, terms, tol, n0=10, kmax=min(90, len(sums) - 12))
            terms_used = len(sums)
        else:
            est = None
            delta = None
            terms_used = len(sums)
            prev = None
            for n0, jdeg in _BASIS_CONFIGS:
                count = 1 + (src.log_degree + 1) * (jdeg + 1)
                if n0 + count > len(sums):
                    break
                cur = _basis_extrapolate(sums, to_mp(src.decay), src.log_degree, n0, jdeg)
                if prev is not None:
                    d = abs(cur - prev)
                    if delta is None or d <= delta:
                        est, delta = cur, d
                    if d <= tol * abs(cur):
                        est, delta = cur, d
                        terms_used = n0 + count
                        break
                prev = cur
            if est is None:
                est, delta = prev, abs(prev) if prev is not None else None
        if est is None or delta is None:
            raise ConvergenceError(f"no stable extrapolation for {src.label or spec}")
        rel = delta / abs(est) if est != 0 else delta
        if rel > tol:
            raise ConvergenceError(
                f"extrapolation stalled at relative {mp.nstr(rel, 5)} > tol {mp.nstr(tol, 5)}"
                f" for {src.label or spec}"
            )
        value = est
        if mp.im(value) == 0:
            value = mp.re(value)
        return SumResult(
            value=round_to(value, ctx),
            terms_used=terms_used,
            tail_estimate=float(delta),
            accelerated=True,
            achieved_tol=float(rel),
        )


def _compensated_continue(stream, sums, terms, count):
    """Extend compensated partial sums in place."""
    s = sums[-1]
    comp = mpf(0)
    for _ in range(count):
        t = next(stream)
        new = s + t
        if abs(s) >= abs(t):
            comp += (s - new) + t
        else:
            comp += (t - new) + s
        s = new
        terms.append(t)
        sums.append(s + comp)
    return sums, terms


_TAIL_SAFETY = 4
_TAIL_WINDOW = 8


def tail_estimate(spec, N: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """Estimated |sum of terms beyond N| from a C n^-p ln^q n fit of the last
    8 terms, integrated and multiplied by a safety factor of 4."""
    if N < _TAIL_WINDOW + 2:
        raise DomainError(f"N must be at least {_TAIL_WINDOW + 2}")
    src = as_source(spec)
    with working_precision(ctx.mantissa_bits):
        stream = src.make_stream(ctx)
        window = []
        for n in range(1, N + 1):
            t = next(stream)
            if n > N - _TAIL_WINDOW:
                window.append((n, abs(t)))
        mags = [w for _, w in window]
        if any(m == 0 for m in mags):
            raise EstimateUnavailable("zero terms at the truncation point")
        if not all(a >= b for a, b in zip(mags, mags[1:])):
            raise EstimateUnavailable("terms non-monotone at the truncation point")
        best = None
        for qq in (0, 1, 2):
            params, resid = _fit_power_log(window, qq)
            if best is None or resid < best[2]:
                best = (qq, params, resid)
        q, (lnc, pfit), _ = best
        if pfit <= 1:
            raise EstimateUnavailable(f"fitted decay exponent {mp.nstr(mpf(pfit), 4)} <= 1")
        # integral of C x^-p ln^q x from N to infinity, q a small integer
        lnN = mp.log(mpf(N))
        integral = mpf(0)
        fact = 1
        for i in range(q + 1):
            integral += fact * lnN ** (q - i) / mpf(pfit - 1) ** i
            fact *= q - i
        integral *= mp.e**lnc * mpf(N) ** (1 - pfit) / (pfit - 1)
        return float(_TAIL_SAFETY * integral)


def _fit_power_log(window, q):
    """Least-squares fit ln|t_n| = lnC - p ln n + q ln ln n with q fixed.

    Returns ((lnC, p), residual).
    """
    xs = [mp.log(mpf(n)) for n, _ in window]
    ys = [mp.log(t) - q * mp.log(mp.log(mpf(n))) for n, t in window]
    n = len(xs)
    sx = sum(xs)
    sy = sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    denom = n * sxx - sx * sx
    slope = (n * sxy - sx * sy) / denom
    intercept = (sy - slope * sx) / n
    resid = sum((y - (intercept + slope * x)) ** 2 for x, y in zip(xs, ys))
    return (intercept, -slope), resid
