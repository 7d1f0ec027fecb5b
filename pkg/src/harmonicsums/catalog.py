"""Registry of every series identity handled by the package, with numeric and
exact verification drivers.

Each record pairs a left-hand side (a summable series, a finite construct, or
a documented combination of other identities) with an evaluable closed form
and an admissible parameter domain.  verify() sums the series independently of
the closed form; verify_exact() compares exact rational representations for
the finite identities.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from mpmath import mp, mpf

from .errors import ConvergenceError, DomainError, KindError, NotFound
from .precision import DEFAULT_CONTEXT, PrecisionContext, constants, round_to, to_mp, working_precision
from . import harmonic as hn
from .series import Family, SeriesSpec, TermSource, Weight, sum_to_tolerance

__all__ = [
    "IdentityRecord",
    "VerificationReport",
    "list_identities",
    "lookup",
    "closed_form",
    "verify",
    "verify_exact",
    "sweep",
    "run_report",
    "registry_document",
    "REGISTRY_VERSION",
]

REGISTRY_VERSION = "1"

Z_CANONICAL = (0, Fraction(1, 2), 1, Fraction(3, 2), 2, Fraction(1, 4), complex(0.3, 0.7))
M_CANONICAL = (0, 1, 2, 3)


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    kind: str  # infinite_series | finite_sum | derived_scalar
    description: str
    provenance: str
    param_names: tuple
    canonical: tuple
    domain: str = ""
    tol_floor: Optional[float] = None


@dataclass
class VerificationReport:
    id: str
    parameters: dict
    lhs_value: object
    rhs_value: object
    abs_error: float
    rel_error: float
    terms_used: int
    accelerated: bool
    passed: bool
    wall_time: float
    error: Optional[str] = None


@dataclass
class _Entry:
    record: IdentityRecord
    rhs: Optional[Callable] = None  # (params, ctx) -> value
    lhs_spec: Optional[Callable] = None  # (params, ctx) -> SeriesSpec | TermSource
    finite: Optional[Callable] = None  # (params, ctx) -> (lhs_value, rhs_value, size)
    exact: Optional[Callable] = None  # (params) -> (lhs_repr, rhs_repr) coefficient dicts
    derived: Optional[tuple] = None  # ((coeff, id, params), ...)
    validate: Optional[Callable] = None  # (params) -> None or raises DomainError


_REGISTRY: dict[str, _Entry] = {}


def _register(entry: _Entry):
    if entry.record.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {entry.record.id}")
    _REGISTRY[entry.record.id] = entry


# ---------------------------------------------------------------------------
# closed-form building blocks
# ---------------------------------------------------------------------------


def _check_z(params):
    z = params["z"]
    zv = to_mp(z) if not isinstance(z, Fraction) else to_mp(z)
    from .specfun import _is_nonpositive_integer

    if _is_nonpositive_integer(zv) and zv != 0:
        raise DomainError(f"z={z} is a negative integer")
    if mp.re(zv) <= -1:
        raise DomainError(f"series diverges for Re(z) <= -1 (z={z})")


def _check_m(params):
    m = params["m"]
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a non-negative integer (got {m!r})")


class _Env:
    """Evaluation helpers bound to a context."""

    def __init__(self, ctx: PrecisionContext):
        self.ctx = ctx
        c = constants(ctx)
        self.pi = c.pi
        self.ln2 = c.ln2
        self.z2 = c.zeta2
        self.z3 = c.zeta3
        self.z4 = c.zeta4

    def H(self, z):
        return hn.harmonic(z, self.ctx) if to_mp(z) != 0 else mpf(0)

    def Hm(self, m, z):
        return hn.gen_harmonic(m, z, self.ctx) if to_mp(z) != 0 else mpf(0)

    def O(self, m, k):
        return to_mp(hn.odd_harmonic(m, k))

    def invcb(self, m):
        return 1 / mpf(math.comb(2 * m, m))


def _rhs(fn):
    """Wrap a closed form taking (env, **params)."""

    def run(params, ctx):
        env = _Env(ctx)
        with working_precision(ctx.mantissa_bits):
            value = fn(env, **params)
        return round_to(value, ctx)

    return run


# ---------------------------------------------------------------------------
# custom term sources (particular series not expressible as a SeriesSpec)
# ---------------------------------------------------------------------------


def _harmonic_weight_source(offsets, label):
    """sum H_n / prod(n + o)."""

    def stream(ctx):
        n = 1
        h = mpf(0)
        while True:
            h += 1 / mpf(n)
            d = mpf(1)
            for o in offsets:
                d *= n + o
            yield h / d
            n += 1

    return TermSource(stream, decay=len(offsets), log_degree=1, label=label)


def _gen_harmonic_over_power_source(p, q, label):
    """sum H_n^(p) / n^q."""

    def stream(ctx):
        n = 1
        h = mpf(0)
        while True:
            h += 1 / mpf(n) ** p
            yield h / mpf(n) ** q
            n += 1

    return TermSource(stream, decay=q, log_degree=0, label=label)


def _h2_p12_source():
    """sum H_n^(2) / (n(n+1))."""

    def stream(ctx):
        n = 1
        h = mpf(0)
        while True:
            h += 1 / mpf(n) ** 2
            yield h / (mpf(n) * (n + 1))
            n += 1

    return TermSource(stream, decay=2, log_degree=0, label="h2/(n(n+1))")


def _odd_quad_source(offsets, label):
    """sum 4^n (O_n^2 + O_n^(2)) / (prod(n + o) binom(2n, n))."""

    def stream(ctx):
        n = 1
        o1 = mpf(0)
        o2 = mpf(0)
        kern = mpf(2)  # 4 / binom(2, 1)
        while True:
            o1 += 1 / mpf(2 * n - 1)
            o2 += 1 / mpf(2 * n - 1) ** 2
            d = mpf(1)
            for o in offsets:
                d *= n + o
            yield kern * (o1 * o1 + o2) / d
            n += 1
            kern *= 2 * mpf(n) / (2 * n - 1)

    return TermSource(stream, decay=mpf(len(offsets)) - mpf(1) / 2, log_degree=2, label=label)


# ---------------------------------------------------------------------------
# registry construction
# ---------------------------------------------------------------------------


def _series_family(id, description, provenance, family, weight, rhs_fn, tol_floor=None):
    """General-z family over the canonical z grid."""
    _register(
        _Entry(
            record=IdentityRecord(
                id=id,
                kind="infinite_series",
                description=description,
                provenance=provenance,
                param_names=("z",),
                canonical=tuple({"z": z} for z in Z_CANONICAL),
                domain="z complex, Re(z) > -1, z not a negative integer",
            ),
            rhs=_rhs(rhs_fn),
            lhs_spec=lambda params, ctx, f=family, w=weight: SeriesSpec(f, w, z=params["z"]),
            validate=_check_z,
        )
    )


def _half_family(id, description, provenance, family, weight, rhs_fn, tol_floor=1e-8):
    """Half-integer (central binomial) family over the canonical m grid."""
    _register(
        _Entry(
            record=IdentityRecord(
                id=id,
                kind="infinite_series",
                description=description,
                provenance=provenance,
                param_names=("m",),
                canonical=tuple({"m": m} for m in M_CANONICAL),
                domain="m integer >= 0",
                tol_floor=tol_floor,
            ),
            rhs=_rhs(rhs_fn),
            lhs_spec=lambda params, ctx, f=family, w=weight: SeriesSpec(f, w, m=params["m"]),
            validate=_check_m,
        )
    )


def _particular(id, description, provenance, lhs_spec, rhs_fn, tol_floor=None):
    """Parameter-free identity."""
    _register(
        _Entry(
            record=IdentityRecord(
                id=id,
                kind="infinite_series",
                description=description,
                provenance=provenance,
                param_names=(),
                canonical=({},),
                tol_floor=tol_floor,
            ),
            rhs=_rhs(rhs_fn),
            lhs_spec=lhs_spec,
        )
    )


def _spec(family, weight, **kw):
    return lambda params, ctx: SeriesSpec(family, weight, **kw)


def _src(source):
    return lambda params, ctx: source


HALF_TOL = 1e-8

# --- base identity and its weighted derivatives (P2 kernel) ---

_series_family(
    "main",
    "sum 1/(n^2 binom(n+z,n)) = zeta(2) - H_z^(2)",
    "Theorem 1",
    Family.P2,
    Weight.ONE,
    lambda e, z: e.z2 - e.Hm(2, z),
)
_half_family(
    "thm2",
    "sum 4^n/(n^2 binom(2(n+m),n+m) binom(n+m,m)) = (3 zeta(2) - 4 O_m^(2))/binom(2m,m)",
    "Theorem 2",
    Family.P2,
    Weight.ONE,
    lambda e, m: e.invcb(m) * (3 * e.z2 - 4 * e.O(2, m)),
)
_particular(
    "thm2.m0",
    "sum 4^n/(n^2 binom(2n,n)) = pi^2/2",
    "Theorem 2, particular m=0",
    _spec(Family.P2, Weight.ONE, m=0),
    lambda e: e.pi**2 / 2,
    tol_floor=HALF_TOL,
)
_series_family(
    "thm3",
    "sum H_{n+z}/(n^2 binom(n+z,n)) = H_z(zeta(2)-H_z^(2)) + 2(zeta(3)-H_z^(3))",
    "Theorem 3",
    Family.P2,
    Weight.H_SHIFT,
    lambda e, z: e.H(z) * (e.z2 - e.Hm(2, z)) + 2 * (e.z3 - e.Hm(3, z)),
)
_particular(
    "thm3.euler",
    "sum H_n/n^2 = 2 zeta(3)",
    "Theorem 3, particular z=0 (classical Euler sum)",
    _spec(Family.P2, Weight.H_SHIFT, z=0),
    lambda e: 2 * e.z3,
)
_particular(
    "thm3.b4jk2f8",
    "sum H_n/(n^2 (n+1)) = 2 zeta(3) - zeta(2)",
    "Theorem 3, particular via z=1 reduction",
    _src(_harmonic_weight_source((0, 0, 1), "Hn/(n^2(n+1))")),
    lambda e: 2 * e.z3 - e.z2,
)
_particular(
    "thm3.third",
    "sum H_n/(n^2 (n+1)(n+2)) = zeta(3) - 3/4 zeta(2) + 1/4",
    "Theorem 3, third particular",
    _src(_harmonic_weight_source((0, 0, 1, 2), "Hn/(n^2(n+1)(n+2))")),
    lambda e: e.z3 - mpf(3) / 4 * e.z2 + mpf(1) / 4,
)
_half_family(
    "cor1",
    "sum 4^n O_{n+m}/(n^2 ...) = (O_m(3 zeta(2)-4 O_m^(2)) + 7 zeta(3) - 8 O_m^(3))/binom(2m,m)",
    "Corollary 4",
    Family.P2,
    Weight.O_SHIFT,
    lambda e, m: e.invcb(m) * (e.O(1, m) * (3 * e.z2 - 4 * e.O(2, m)) + (7 * e.z3 - 8 * e.O(3, m))),
)
_series_family(
    "quad.z",
    "sum ((H_{n+z}-H_z)^2 + H_{n+z}^(2)-H_z^(2))/(n^2 binom(n+z,n)) = 6 zeta(4) - 6 H_z^(4)",
    "Theorem 5 (quadratic weight)",
    Family.P2,
    Weight.Q_DIFF,
    lambda e, z: 6 * (e.z4 - e.Hm(4, z)),
)
_particular(
    "quad.hyyfilz",
    "sum (H_n^2 + H_n^(2))/n^2 = 6 zeta(4)",
    "Theorem 5, particular z=0",
    _spec(Family.P2, Weight.Q_DIFF, z=0),
    lambda e: 6 * e.z4,
)
_particular(
    "quad.odd",
    "sum 4^n (O_n^2 + O_n^(2))/(n^2 binom(2n,n)) = pi^4/4",
    "Theorem 5, odd particular (published constant corrected: pi^4/4, not pi^2/4)",
    _src(_odd_quad_source((0, 0), "oddquad/n^2")),
    lambda e: e.pi**4 / 4,
    tol_floor=HALF_TOL,
)

# --- symmetry relation and the quadratic Euler sum ---


def _register_sym():
    def check_pq(params):
        p, q = params["p"], params["q"]
        if not (isinstance(p, int) and isinstance(q, int) and p >= 2 and q >= 2):
            raise DomainError("p, q must be integers >= 2")

    def lhs_pair(params, ctx):
        raise KindError  # never called; sym.pq is handled as derived

    _register(
        _Entry(
            record=IdentityRecord(
                id="sym.pq",
                kind="derived_scalar",
                description="sum H_n^(p)/n^q + sum H_n^(q)/n^p = zeta(p) zeta(q) + zeta(p+q)",
                provenance="symmetry remark",
                param_names=("p", "q"),
                canonical=({"p": 2, "q": 3}, {"p": 2, "q": 4}, {"p": 3, "q": 4}),
                domain="integers p, q >= 2",
            ),
            rhs=_rhs(lambda e, p, q: _zeta_int(e, p) * _zeta_int(e, q) + _zeta_int(e, p + q)),
            derived=(
                (1, "_euler.pq", lambda pr: {"p": pr["p"], "q": pr["q"]}),
                (1, "_euler.pq", lambda pr: {"p": pr["q"], "q": pr["p"]}),
            ),
            validate=check_pq,
        )
    )
    _register(
        _Entry(
            record=IdentityRecord(
                id="_euler.pq",
                kind="infinite_series",
                description="sum H_n^(p)/n^q (building block)",
                provenance="symmetry remark",
                param_names=("p", "q"),
                canonical=({"p": 2, "q": 3},),
                domain="integers p >= 1, q >= 2; p + q > 3 when p = 1",
            ),
            rhs=None,
            lhs_spec=lambda params, ctx: _gen_harmonic_over_power_source(
                params["p"], params["q"], f"H^({params['p']})/n^{params['q']}"
            ),
            validate=check_pq,
        )
    )
    _register(
        _Entry(
            record=IdentityRecord(
                id="sym.pp",
                kind="infinite_series",
                description="sum H_n^(p)/n^p = (zeta(p)^2 + zeta(2p))/2",
                provenance="symmetry remark",
                param_names=("p",),
                canonical=({"p": 2}, {"p": 3}),
                domain="integer p >= 2",
            ),
            rhs=_rhs(lambda e, p: (_zeta_int(e, p) ** 2 + _zeta_int(e, 2 * p)) / 2),
            lhs_spec=lambda params, ctx: _gen_harmonic_over_power_source(
                params["p"], params["p"], f"H^({params['p']})/n^{params['p']}"
            ),
            validate=lambda params: None
            if isinstance(params["p"], int) and params["p"] >= 2
            else (_ for _ in ()).throw(DomainError("p must be an integer >= 2")),
        )
    )


def _zeta_int(env, s):
    if s == 2:
        return env.z2
    if s == 3:
        return env.z3
    if s == 4:
        return env.z4
    from .specfun import zeta as _zeta

    return _zeta(s, env.ctx)


_register_sym()

_particular(
    "h2n2",
    "sum H_n^(2)/n^2 = 7/4 zeta(4)",
    "symmetry remark, p=2",
    _src(_gen_harmonic_over_power_source(2, 2, "H2/n^2")),
    lambda e: mpf(7) / 4 * e.z4,
)
_register(
    _Entry(
        record=IdentityRecord(
            id="bowen",
            kind="derived_scalar",
            description="sum H_n^2/n^2 = 17/4 zeta(4), via the quadratic identity minus the p=2 Euler sum",
            provenance="quadratic Euler sum remark",
            param_names=(),
            canonical=({},),
        ),
        rhs=_rhs(lambda e: mpf(17) / 4 * e.z4),
        derived=((1, "quad.hyyfilz", lambda pr: {}), (-1, "sym.pp", lambda pr: {"p": 2})),
    )
)

# --- P12 kernel ---

_series_family(
    "lem.bhasxe8",
    "sum 1/(n(n+1) binom(n+z,n)) = z(H_z^(2) - zeta(2)) + 1",
    "Lemma 6",
    Family.P12,
    Weight.ONE,
    lambda e, z: to_mp(z) * (e.Hm(2, z) - e.z2) + 1,
)
_half_family(
    "thm.halfP12",
    "sum 4^n/(n(n+1) ...) = ((m - 1/2)(4 O_m^(2) - 3 zeta(2)) + 1)/binom(2m,m)",
    "Theorem 7",
    Family.P12,
    Weight.ONE,
    lambda e, m: e.invcb(m) * ((m - mpf(1) / 2) * (4 * e.O(2, m) - 3 * e.z2) + 1),
)
_particular(
    "thm.halfP12.m0",
    "sum 4^n/(n(n+1) binom(2n,n)) = pi^2/4 + 1",
    "Theorem 7, particular m=0",
    _spec(Family.P12, Weight.ONE, m=0),
    lambda e: e.pi**2 / 4 + 1,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP12.m1",
    "sum 4^n/(n(n+1)^2 binom(2(n+1),n+1)) = 3/2 - pi^2/8",
    "Theorem 7, particular m=1",
    _spec(Family.P12, Weight.ONE, m=1),
    lambda e: mpf(3) / 2 - e.pi**2 / 8,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP12.m2",
    "sum 4^n/(n(n+1)^2(n+2) binom(2(n+2),n+2)) = 23/36 - pi^2/16",
    "Theorem 7, particular m=2",
    _spec(Family.P12, Weight.ONE, m=2, scale=Fraction(1, 2)),
    lambda e: mpf(23) / 36 - e.pi**2 / 16,
    tol_floor=HALF_TOL,
)
_series_family(
    "thm.pwogiuk",
    "sum H_{n+z}/(n(n+1) binom(n+z,n)) = (zeta(2)-H_z^(2))(1 - z H_z) + H_z - 2z(zeta(3)-H_z^(3))",
    "Theorem 8",
    Family.P12,
    Weight.H_SHIFT,
    lambda e, z: (e.z2 - e.Hm(2, z)) * (1 - to_mp(z) * e.H(z))
    + e.H(z)
    - 2 * to_mp(z) * (e.z3 - e.Hm(3, z)),
)
_particular(
    "thm.pwogiuk.tgvrkzb",
    "sum H_n/(n(n+1)) = pi^2/6",
    "Theorem 8, particular z=0",
    _spec(Family.P12, Weight.H_SHIFT, z=0),
    lambda e: e.z2,
)
_particular(
    "thm.pwogiuk.v8qrbaf",
    "sum H_n/(n(n+1)^2) = zeta(2) - zeta(3)",
    "Theorem 8, particular via z=1 reduction",
    _src(_harmonic_weight_source((0, 1, 1), "Hn/(n(n+1)^2)")),
    lambda e: e.z2 - e.z3,
)
_particular(
    "rem.n2n12",
    "sum H_n/(n^2(n+1)^2) = 3 zeta(3) - 2 zeta(2)",
    "remark after Theorem 8",
    _src(_harmonic_weight_source((0, 0, 1, 1), "Hn/(n^2(n+1)^2)")),
    lambda e: 3 * e.z3 - 2 * e.z2,
)
_half_family(
    "cor.halfP12odd",
    "sum 4^n O_{n+m}/(n(n+1) ...) closed form in O_m, O_m^(2), O_m^(3)",
    "Corollary 9",
    Family.P12,
    Weight.O_SHIFT,
    lambda e, m: e.invcb(m) / 2 * (3 * e.z2 - 4 * e.O(2, m)) * (1 - e.O(1, m) * (2 * m - 1))
    + e.invcb(m) * e.O(1, m)
    - e.invcb(m) * (2 * m - 1) / 2 * (7 * e.z3 - 8 * e.O(3, m)),
)
_particular(
    "cor.halfP12odd.m0",
    "sum 4^n O_n/(n(n+1) binom(2n,n)) = pi^2/4 + 7/2 zeta(3)",
    "Corollary 9, particular m=0",
    _spec(Family.P12, Weight.O_SHIFT, m=0),
    lambda e: e.pi**2 / 4 + mpf(7) / 2 * e.z3,
    tol_floor=HALF_TOL,
)
_particular(
    "cor.halfP12odd.m1",
    "sum 4^n O_{n+1}/(n(n+1)^2 binom(2(n+1),n+1)) = 5/2 - 7/4 zeta(3)",
    "Corollary 9, particular m=1",
    _spec(Family.P12, Weight.O_SHIFT, m=1),
    lambda e: mpf(5) / 2 - mpf(7) / 4 * e.z3,
    tol_floor=HALF_TOL,
)
_series_family(
    "quad.P12",
    "sum ((H_{n+z}-H_z)^2 + H_{n+z}^(2)-H_z^(2))/(n(n+1) binom(n+z,n)) = 4(zeta(3)-H_z^(3)) - 6z(zeta(4)-H_z^(4))",
    "Theorem 10",
    Family.P12,
    Weight.Q_DIFF,
    lambda e, z: 4 * (e.z3 - e.Hm(3, z)) - 6 * to_mp(z) * (e.z4 - e.Hm(4, z)),
)
_particular(
    "quad.P12.v82402j",
    "sum (H_n^2 + H_n^(2))/(n(n+1)) = 4 zeta(3)",
    "Theorem 10, particular z=0",
    _spec(Family.P12, Weight.Q_DIFF, z=0),
    lambda e: 4 * e.z3,
)
_particular(
    "quad.P12.odd",
    "sum 4^n (O_n^2 + O_n^(2))/(n(n+1) binom(2n,n)) = pi^4/8 + 7 zeta(3)",
    "Theorem 10, odd particular",
    _src(_odd_quad_source((0, 1), "oddquad/(n(n+1))")),
    lambda e: e.pi**4 / 8 + 7 * e.z3,
    tol_floor=HALF_TOL,
)
_particular(
    "rem.xu",
    "sum H_n^(2)/(n(n+1)) = zeta(3) (assumed input)",
    "remark citing a known Euler sum",
    _src(_h2_p12_source()),
    lambda e: e.z3,
)
_register(
    _Entry(
        record=IdentityRecord(
            id="h2.P12",
            kind="derived_scalar",
            description="sum H_n^2/(n(n+1)) = 3 zeta(3), from the quadratic particular minus the assumed input",
            provenance="remark after Theorem 10",
            param_names=(),
            canonical=({},),
        ),
        rhs=_rhs(lambda e: 3 * e.z3),
        derived=((1, "quad.P12.v82402j", lambda pr: {}), (-1, "rem.xu", lambda pr: {})),
    )
)

# --- P123 kernel ---

_series_family(
    "lem.lmcv0zf",
    "sum 1/(n(n+1)(n+2) binom(n+z,n)) = z(z+1)/2 (H_z^(2)-zeta(2)) + z/2 + 1/4",
    "Lemma 11",
    Family.P123,
    Weight.ONE,
    lambda e, z: to_mp(z) * (to_mp(z) + 1) / 2 * (e.Hm(2, z) - e.z2) + to_mp(z) / 2 + mpf(1) / 4,
)
_series_family(
    "lem.dhruknq",
    "sum 1/(n(n+2) binom(n+z,n)) = z(z-1)/2 (zeta(2)-H_z^(2)) - z/2 + 3/4",
    "Lemma 11 proof, intermediate identity",
    Family.P13,
    Weight.ONE,
    lambda e, z: to_mp(z) * (to_mp(z) - 1) / 2 * (e.z2 - e.Hm(2, z)) - to_mp(z) / 2 + mpf(3) / 4,
)
_half_family(
    "thm.halfP123",
    "sum 4^n/(n(n+1)(n+2) ...) = ((m-1/2)(m+1/2)(4 O_m^(2)-3 zeta(2)) + m)/(2 binom(2m,m))",
    "Theorem 12",
    Family.P123,
    Weight.ONE,
    lambda e, m: e.invcb(m)
    / 2
    * ((m - mpf(1) / 2) * (m + mpf(1) / 2) * (4 * e.O(2, m) - 3 * e.z2) + m),
)
_particular(
    "thm.halfP123.m0",
    "sum 4^n/(n(n+1)(n+2) binom(2n,n)) = pi^2/16",
    "Theorem 12, particular m=0",
    _spec(Family.P123, Weight.ONE, m=0),
    lambda e: e.pi**2 / 16,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP123.m1",
    "sum 4^n/(n(n+1)^2(n+2) binom(2(n+1),n+1)) = 1 - 3 pi^2/32",
    "Theorem 12, particular m=1",
    _spec(Family.P123, Weight.ONE, m=1),
    lambda e: 1 - 3 * e.pi**2 / 32,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP123.m2",
    "sum 2*4^n/(n(n+1)^2(n+2)^2 binom(2(n+2),n+2)) = 14/9 - 5 pi^2/32",
    "Theorem 12, particular m=2",
    _spec(Family.P123, Weight.ONE, m=2),
    lambda e: mpf(14) / 9 - 5 * e.pi**2 / 32,
    tol_floor=HALF_TOL,
)
_series_family(
    "thm.l2ciolu",
    "sum H_{n+z}/(n(n+1)(n+2) binom(n+z,n)), closed form with (z/2 + 1/4) H_z",
    "Theorem 13",
    Family.P123,
    Weight.H_SHIFT,
    lambda e, z: (to_mp(z) + mpf(1) / 2 - to_mp(z) * (to_mp(z) + 1) / 2 * e.H(z))
    * (e.z2 - e.Hm(2, z))
    + (to_mp(z) / 2 + mpf(1) / 4) * e.H(z)
    - to_mp(z) * (to_mp(z) + 1) * (e.z3 - e.Hm(3, z))
    - mpf(1) / 2,
)
_particular(
    "thm.l2ciolu.z0",
    "sum H_n/(n(n+1)(n+2)) = pi^2/12 - 1/2",
    "Theorem 13, particular z=0",
    _spec(Family.P123, Weight.H_SHIFT, z=0),
    lambda e: e.pi**2 / 12 - mpf(1) / 2,
)
_particular(
    "thm.l2ciolu.r7il44k",
    "sum H_n/(n(n+1)^2(n+2)) = pi^2/12 + 1/2 - zeta(3)",
    "Theorem 13, particular via z=1 reduction",
    _src(_harmonic_weight_source((0, 1, 1, 2), "Hn/(n(n+1)^2(n+2))")),
    lambda e: e.pi**2 / 12 + mpf(1) / 2 - e.z3,
)
_half_family(
    "thm.halfP123odd",
    "sum 4^n O_{n+m}/(n(n+1)(n+2) ...) closed form",
    "Theorem 14",
    Family.P123,
    Weight.O_SHIFT,
    lambda e, m: e.invcb(m)
    / 2
    * (m - e.O(1, m) * (m - mpf(1) / 2) * (m + mpf(1) / 2))
    * (3 * e.z2 - 4 * e.O(2, m))
    - e.invcb(m)
    / 2
    * ((m - mpf(1) / 2) * (m + mpf(1) / 2) * (7 * e.z3 - 8 * e.O(3, m)) - m * e.O(1, m) + mpf(1) / 2),
)
_particular(
    "thm.halfP123odd.m0",
    "sum 4^n O_n/(n(n+1)(n+2) binom(2n,n)) = 7/8 zeta(3) - 1/4",
    "Theorem 14, particular m=0",
    _spec(Family.P123, Weight.O_SHIFT, m=0),
    lambda e: mpf(7) / 8 * e.z3 - mpf(1) / 4,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP123odd.m1",
    "sum 4^n O_{n+1}/(n(n+1)^2(n+2) binom(2(n+1),n+1)) = pi^2/32 - 21/16 zeta(3) + 11/8",
    "Theorem 14, particular m=1",
    _spec(Family.P123, Weight.O_SHIFT, m=1),
    lambda e: e.pi**2 / 32 - mpf(21) / 16 * e.z3 + mpf(11) / 8,
    tol_floor=HALF_TOL,
)
_series_family(
    "quad.P123",
    "sum quadratic weight/(n(n+1)(n+2) binom(n+z,n)) closed form in H_z^(2..4)",
    "Theorem 15",
    Family.P123,
    Weight.Q_DIFF,
    lambda e, z: (e.Hm(2, z) - e.z2)
    - 2 * (2 * to_mp(z) + 1) * (e.Hm(3, z) - e.z3)
    + 3 * to_mp(z) * (to_mp(z) + 1) * (e.Hm(4, z) - e.z4),
)
_particular(
    "quad.P123.z0",
    "sum (H_n^2 + H_n^(2))/(n(n+1)(n+2)) = 2 zeta(3) - zeta(2)",
    "Theorem 15, particular z=0",
    _spec(Family.P123, Weight.Q_DIFF, z=0),
    lambda e: 2 * e.z3 - e.z2,
)
_particular(
    "quad.P123.odd",
    "sum 4^n (O_n^2 + O_n^(2))/(n(n+1)(n+2) binom(2n,n)) = pi^4/32 - pi^2/8",
    "Theorem 15, odd particular",
    _src(_odd_quad_source((0, 1, 2), "oddquad/(n(n+1)(n+2))")),
    lambda e: e.pi**4 / 32 - e.pi**2 / 8,
    tol_floor=HALF_TOL,
)

# --- P1234 kernel ---

_series_family(
    "lem.vadi1jm",
    "sum 1/(n(n+1)(n+2)(n+3) binom(n+z,n)) = z(z+1)(z+2)/12 (H_z^(2)-zeta(2)) + z^2/12 + 5z/24 + 1/18",
    "Lemma 16",
    Family.P1234,
    Weight.ONE,
    lambda e, z: to_mp(z) * (to_mp(z) + 1) * (to_mp(z) + 2) / 12 * (e.Hm(2, z) - e.z2)
    + to_mp(z) ** 2 / 12
    + 5 * to_mp(z) / 24
    + mpf(1) / 18,
)
_series_family(
    "eq.pv5xq4g",
    "sum 1/(n(n+3) binom(n+z,n)) = z(z-1)(z-2)/6 (H_z^(2)-zeta(2)) + z^2/6 - 7z/12 + 11/18",
    "Lemma 16 proof, intermediate identity",
    Family.P14,
    Weight.ONE,
    lambda e, z: to_mp(z) * (to_mp(z) - 1) * (to_mp(z) - 2) / 6 * (e.Hm(2, z) - e.z2)
    + to_mp(z) ** 2 / 6
    - 7 * to_mp(z) / 12
    + mpf(11) / 18,
)
_half_family(
    "thm.halfP1234",
    "sum 4^n/(n(n+1)(n+2)(n+3) ...) closed form",
    "Theorem 17",
    Family.P1234,
    Weight.ONE,
    lambda e, m: e.invcb(m)
    / 12
    * (m - mpf(1) / 2)
    * (m + mpf(1) / 2)
    * (m + mpf(3) / 2)
    * (4 * e.O(2, m) - 3 * e.z2)
    + e.invcb(m) / 4 * (mpf(m) ** 2 / 3 + mpf(m) / 2 - mpf(1) / 9),
)
_particular(
    "thm.halfP1234.m0",
    "sum 4^n/(n(n+1)(n+2)(n+3) binom(2n,n)) = pi^2/64 - 1/36",
    "Theorem 17, particular m=0",
    _spec(Family.P1234, Weight.ONE, m=0),
    lambda e: e.pi**2 / 64 - mpf(1) / 36,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP1234.m1",
    "sum 4^n/(n(n+1)^2(n+2)(n+3) binom(2(n+1),n+1)) = 29/72 - 5 pi^2/128",
    "Theorem 17, particular m=1",
    _spec(Family.P1234, Weight.ONE, m=1),
    lambda e: mpf(29) / 72 - 5 * e.pi**2 / 128,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP1234.m2",
    "sum 2*4^n/(n(n+1)^2(n+2)^2(n+3) binom(2(n+2),n+2)) = 65/72 - 35 pi^2/384",
    "Theorem 17, particular m=2",
    _spec(Family.P1234, Weight.ONE, m=2),
    lambda e: mpf(65) / 72 - 35 * e.pi**2 / 384,
    tol_floor=HALF_TOL,
)
_series_family(
    "thm.qaytndb",
    "sum H_{n+z}/(n(n+1)(n+2)(n+3) binom(n+z,n)) closed form",
    "Theorem 18",
    Family.P1234,
    Weight.H_SHIFT,
    lambda e, z: (
        to_mp(z) * (to_mp(z) + 1) * (to_mp(z) + 2) / 12 * e.H(z)
        - to_mp(z) * (to_mp(z) + 2) / 4
        - mpf(1) / 6
    )
    * (e.Hm(2, z) - e.z2)
    + to_mp(z) * (to_mp(z) + 1) * (to_mp(z) + 2) / 6 * (e.Hm(3, z) - e.z3)
    + (to_mp(z) ** 2 / 12 + 5 * to_mp(z) / 24 + mpf(1) / 18) * e.H(z)
    - to_mp(z) / 6
    - mpf(5) / 24,
)
_particular(
    "thm.qaytndb.z0",
    "sum H_n/(n(n+1)(n+2)(n+3)) = pi^2/36 - 5/24",
    "Theorem 18, particular z=0",
    _spec(Family.P1234, Weight.H_SHIFT, z=0),
    lambda e: e.pi**2 / 36 - mpf(5) / 24,
)
_half_family(
    "thm.halfP1234odd",
    "sum 4^n O_{n+m}/(n(n+1)(n+2)(n+3) ...) closed form",
    "Theorem 19",
    Family.P1234,
    Weight.O_SHIFT,
    lambda e, m: e.invcb(m)
    / 2
    * (
        mpf(1) / 6 * (m - mpf(1) / 2) * (m + mpf(1) / 2) * (m + mpf(3) / 2) * e.O(1, m)
        - mpf(m) ** 2 / 4
        - mpf(m) / 4
        + mpf(1) / 48
    )
    * (4 * e.O(2, m) - 3 * e.z2)
    + e.invcb(m)
    / 12
    * (m - mpf(1) / 2)
    * (m + mpf(1) / 2)
    * (m + mpf(3) / 2)
    * (8 * e.O(3, m) - 7 * e.z3)
    + e.invcb(m)
    / 2
    * (mpf(1) / 36 * (6 * m**2 + 9 * m - 2) * e.O(1, m) - mpf(m) / 6 - mpf(1) / 8),
)
_particular(
    "thm.halfP1234odd.m0",
    "sum 4^n O_n/(n(n+1)(n+2)(n+3) binom(2n,n)) = 7/32 zeta(3) - pi^2/192 - 1/16",
    "Theorem 19, particular m=0",
    _spec(Family.P1234, Weight.O_SHIFT, m=0),
    lambda e: mpf(7) / 32 * e.z3 - e.pi**2 / 192 - mpf(1) / 16,
    tol_floor=HALF_TOL,
)
_particular(
    "thm.halfP1234odd.m1",
    "sum 4^n O_{n+1}/(n(n+1)^2(n+2)(n+3) binom(2(n+1),n+1)) = 137/288 + pi^2/48 - 35/64 zeta(3)",
    "Theorem 19, particular m=1",
    _spec(Family.P1234, Weight.O_SHIFT, m=1),
    lambda e: mpf(137) / 288 + e.pi**2 / 48 - mpf(35) / 64 * e.z3,
    tol_floor=HALF_TOL,
)
_series_family(
    "quad.P1234",
    "sum quadratic weight/(n(n+1)(n+2)(n+3) binom(n+z,n)) closed form",
    "Theorem 20",
    Family.P1234,
    Weight.Q_DIFF,
    lambda e, z: (to_mp(z) + 1) / 2 * (e.Hm(2, z) - e.z2)
    - (to_mp(z) * (to_mp(z) + 2) + mpf(2) / 3) * (e.Hm(3, z) - e.z3)
    + to_mp(z) * (to_mp(z) + 1) * (to_mp(z) + 2) / 2 * (e.Hm(4, z) - e.z4)
    + mpf(1) / 6,
)
_particular(
    "quad.P1234.z0",
    "sum (H_n^2 + H_n^(2))/(n(n+1)(n+2)(n+3)) = 2/3 zeta(3) - pi^2/12 + 1/6",
    "Theorem 20, particular z=0",
    _spec(Family.P1234, Weight.Q_DIFF, z=0),
    lambda e: mpf(2) / 3 * e.z3 - e.pi**2 / 12 + mpf(1) / 6,
)
_particular(
    "quad.P1234.odd",
    "sum 4^n (O_n^2 + O_n^(2))/(n(n+1)(n+2)(n+3) binom(2n,n)) = pi^4/128 - pi^2/32 - 7/48 zeta(3) + 1/24",
    "Theorem 20, odd particular",
    _src(_odd_quad_source((0, 1, 2, 3), "oddquad/P1234")),
    lambda e: e.pi**4 / 128 - e.pi**2 / 32 - mpf(7) / 48 * e.z3 + mpf(1) / 24,
    tol_floor=HALF_TOL,
)

# --- finite / exact identities ---


def _finite_frisch(params, ctx):
    n, z = params["n"], params["z"]
    lhs = hn.frisch_sum(n, z, ctx)
    rhs = hn.frisch_rhs(n, z, ctx)
    return lhs, rhs, n


def _finite_bs(params, ctx):
    m, n = params["m"], params["n"]
    lhs = hn.finite_binom_sum(m, n, ctx)
    rhs = hn.finite_binom_sum_rhs(m, n, ctx)
    return lhs, rhs, m


def _exact_frisch(params):
    n, z = params["n"], params["z"]
    if not isinstance(z, (int, Fraction)):
        raise KindError("exact check requires rational z")
    return {"1": Fraction(hn.frisch_sum(n, Fraction(z)))}, {"1": Fraction(hn.frisch_rhs(n, Fraction(z)))}


def _exact_bs(params):
    m, n = params["m"], params["n"]
    if not isinstance(n, (int, Fraction)):
        raise KindError("exact check requires rational n")
    return (
        {"1": Fraction(hn.finite_binom_sum(m, Fraction(n)))},
        {"1": Fraction(hn.finite_binom_sum_rhs(m, Fraction(n)))},
    )


def _basis_value(coeffs: dict, ctx) -> object:
    c = constants(ctx)
    basis = {
        "1": mpf(1),
        "ln2": c.ln2,
        "zeta2": c.zeta2,
        "zeta3": c.zeta3,
        "zeta4": c.zeta4,
        "1/pi": 1 / c.pi,
    }
    with working_precision(ctx.mantissa_bits):
        total = mpf(0)
        for name, q in coeffs.items():
            total += to_mp(q) * basis[name]
    return round_to(total, ctx)


def _register_finite(id, description, provenance, param_names, canonical, finite, exact, validate=None):
    _register(
        _Entry(
            record=IdentityRecord(
                id=id,
                kind="finite_sum",
                description=description,
                provenance=provenance,
                param_names=param_names,
                canonical=canonical,
            ),
            finite=finite,
            exact=exact,
            validate=validate,
        )
    )


_register_finite(
    "frisch",
    "sum binom(n,k)(-1)^(k-1) k/(z+k) = 1/binom(n+z,n)",
    "alternating binomial identity used in the Theorem 1 proof",
    ("n", "z"),
    ({"n": 2, "z": 1}, {"n": 5, "z": Fraction(1, 2)}, {"n": 8, "z": Fraction(3, 4)}),
    _finite_frisch,
    _exact_frisch,
)
_register_finite(
    "bs",
    "sum_{k<=m} 1/binom(k+n,k) = 1/(n-1) - n/((n-1) binom(m+n,m+1))",
    "reciprocal-binomial partial sum",
    ("m", "n"),
    ({"m": 3, "n": 2}, {"m": 1, "n": 3}, {"m": 2, "n": Fraction(1, 2)}),
    _finite_bs,
    _exact_bs,
)


def _lemma1_sides(which, params):
    if which == 1:
        k = params["k"]
        lhs = hn.half_integer_harmonic_exact(1, k)
        rhs = {"ln2": Fraction(-2)}
        o = 2 * hn.odd_harmonic(1, k)
        if o:
            rhs["1"] = o
        return lhs, rhs
    if which == 2:
        k = params["k"]
        lhs = hn.half_integer_harmonic_exact(2, k)
        rhs = {"zeta2": Fraction(-2)}
        o = 4 * hn.odd_harmonic(2, k)
        if o:
            rhs["1"] = o
        return lhs, rhs
    if which == 3:
        return hn.half_integer_harmonic_exact(3, 0), {"zeta3": Fraction(-6)}
    if which == 4:
        return hn.half_integer_harmonic_exact(4, 0), {"zeta4": Fraction(-14)}
    # general relation H_{k-1/2}^(m+1) - H_{-1/2}^(m+1) = 2^(m+1) O_k^(m+1)
    m, k = params["m"], params["k"]
    if m not in (1, 2, 3):
        raise DomainError("m must be 1, 2 or 3 (base values cover orders up to 4)")
    full = hn.half_integer_harmonic_exact(m + 1, k)
    base = hn.half_integer_harmonic_exact(m + 1, 0)
    lhs = {key: full.get(key, Fraction(0)) - base.get(key, Fraction(0)) for key in set(full) | set(base)}
    lhs = {key: v for key, v in lhs.items() if v}
    o = Fraction(2 ** (m + 1)) * hn.odd_harmonic(m + 1, k)
    rhs = {"1": o} if o else {}
    return lhs, rhs


def _finite_from_exact(exact_fn):
    def run(params, ctx):
        lhs_c, rhs_c = exact_fn(params)
        return _basis_value(lhs_c, ctx), _basis_value(rhs_c, ctx), 1
    return run


for which, pnames, canon in (
    (1, ("k",), ({"k": 0}, {"k": 1}, {"k": 5})),
    (2, ("k",), ({"k": 0}, {"k": 1}, {"k": 5})),
    (3, (), ({},)),
    (4, (), ({},)),
    (5, ("m", "k"), ({"m": 1, "k": 3}, {"m": 2, "k": 5}, {"m": 3, "k": 4})),
):
    exact_fn = (lambda params, w=which: _lemma1_sides(w, params))
    _register_finite(
        f"lemma1.{which}",
        {
            1: "H_{k-1/2} = 2 O_k - 2 ln 2",
            2: "H_{k-1/2}^(2) = -2 zeta(2) + 4 O_k^(2)",
            3: "H_{-1/2}^(3) = -6 zeta(3)",
            4: "H_{-1/2}^(4) = -14 zeta(4)",
            5: "H_{k-1/2}^(m+1) - H_{-1/2}^(m+1) = 2^(m+1) O_k^(m+1)",
        }[which],
        f"half-integer harmonic relation {which}",
        pnames,
        canon,
        _finite_from_exact(exact_fn),
        exact_fn,
    )


def _lemma2_exact(case):
    def run(params):
        (lc, lp), (rc, rp) = hn.half_integer_binom_exact(case, params["u"], params.get("v", 0))
        def coeffs(c, p):
            if c == 0:
                return {}
            if p == 0:
                return {"1": c}
            if p == -1:
                return {"1/pi": c}
            raise KindError(f"unexpected pi power {p}")
        return coeffs(lc, lp), coeffs(rc, rp)
    return run


_LEMMA2_CANON = {
    "A": ({"u": 3, "v": 2}, {"u": 5, "v": 0}, {"u": 6, "v": 6}),
    "B": ({"u": 0}, {"u": 1}, {"u": 4}),
    "C": ({"u": 1, "v": 2}, {"u": 0, "v": 1}, {"u": 3, "v": 3}),
    "D": ({"u": 2, "v": 1}, {"u": 4, "v": 4}, {"u": 5, "v": 0}),
    "E": ({"u": 0, "v": 1}, {"u": 2, "v": 5}, {"u": 3, "v": 4}),
    "F": ({"u": 0}, {"u": 2}, {"u": 7}),
}
for case in "ABCDEF":
    exact_fn = _lemma2_exact(case)
    note = " (pi restored on the right-hand side)" if case == "C" else ""
    _register_finite(
        f"lemma2.{case}",
        f"half-integer binomial identity, case {case}{note}",
        f"binomial coefficient lemma, identity {case}",
        ("u",) if case in "BF" else ("u", "v"),
        _LEMMA2_CANON[case],
        _finite_from_exact(exact_fn),
        exact_fn,
    )


def _wsum_exact(j):
    def run(params):
        r = params["r"]
        return (
            {"1": hn.weighted_h2_sum(j, r)},
            {"1": hn.weighted_h2_closed_form(j, r)},
        )
    return run


for j in (0, 1, 2):
    exact_fn = _wsum_exact(j)
    _register_finite(
        f"wsum.j{j}",
        f"sum z^{j} H_z^(2) for z = 1..r, closed form",
        f"weighted quadratic-harmonic partial sum (weight z^{j})",
        ("r",),
        ({"r": 1}, {"r": 2}, {"r": 10}),
        _finite_from_exact(exact_fn),
        exact_fn,
    )


# ---------------------------------------------------------------------------
# public drivers
# ---------------------------------------------------------------------------


def lookup(id: str) -> IdentityRecord:
    entry = _REGISTRY.get(id)
    if entry is None:
        raise NotFound(f"unknown identity id {id!r}")
    return entry.record


def list_identities(include_internal: bool = False):
    """All registry records (internal building blocks hidden by default)."""
    return [
        e.record
        for e in _REGISTRY.values()
        if include_internal or not e.record.id.startswith("_")
    ]


def closed_form(id: str, params: dict | None = None, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Evaluate an identity's right-hand side."""
    entry = _entry(id)
    params = params or {}
    if entry.validate:
        entry.validate(params)
    if entry.rhs is None:
        raise KindError(f"identity {id!r} has no closed form")
    return entry.rhs(params, ctx)


def _entry(id: str) -> _Entry:
    entry = _REGISTRY.get(id)
    if entry is None:
        raise NotFound(f"unknown identity id {id!r}")
    return entry


def _eval_lhs(entry: _Entry, params: dict, ctx: PrecisionContext):
    """Returns (value, terms_used, accelerated, achieved_tol)."""
    if entry.lhs_spec is not None:
        spec = entry.lhs_spec(params, ctx)
        res = sum_to_tolerance(spec, ctx)
        return res.value, res.terms_used, res.accelerated, res.achieved_tol
    if entry.finite is not None:
        lhs, _rhs, size = entry.finite(params, ctx)
        return lhs, size, False, 0.0
    if entry.derived is not None:
        total = mpf(0)
        terms = 0
        accelerated = False
        achieved = 0.0
        for coeff, comp_id, mapper in entry.derived:
            comp = _entry(comp_id)
            comp_params = mapper(params)
            if comp.validate:
                comp.validate(comp_params)
            value, used, acc, ach = _eval_lhs(comp, comp_params, ctx)
            total = total + coeff * value
            terms += used
            accelerated = accelerated or acc
            achieved += abs(ach)
        return total, terms, accelerated, achieved
    raise KindError(f"identity {entry.record.id!r} has no evaluable left-hand side")


def verify(id: str, params: dict | None = None, ctx: PrecisionContext = DEFAULT_CONTEXT) -> VerificationReport:
    """Sum the left-hand side independently and compare against the closed form."""
    entry = _entry(id)
    params = dict(params or {})
    start = time.perf_counter()
    if entry.validate:
        try:
            entry.validate(params)
        except DomainError as exc:
            raise DomainError(f"{id}: {exc}") from exc
    try:
        if entry.finite is not None:
            lhs, rhs, size = entry.finite(params, ctx)
            terms, accelerated, achieved = size, False, 0.0
        else:
            lhs, terms, accelerated, achieved = _eval_lhs(entry, params, ctx)
            rhs = entry.rhs(params, ctx)
    except (ConvergenceError, DomainError) as exc:
        raise type(exc)(f"{id}: {exc}") from exc
    with working_precision(ctx.mantissa_bits):
        abs_err = float(abs(lhs - rhs))
        if rhs == 0:
            rel_err = abs_err
            passed = abs_err <= 1e-12
        else:
            rel_err = float(abs(lhs - rhs) / abs(rhs))
            threshold = max(ctx.target_tol, 100 * achieved)
            if entry.record.tol_floor is not None:
                threshold = max(threshold, entry.record.tol_floor)
            passed = rel_err <= threshold
    return VerificationReport(
        id=id,
        parameters=params,
        lhs_value=lhs,
        rhs_value=rhs,
        abs_error=abs_err,
        rel_error=rel_err,
        terms_used=terms,
        accelerated=accelerated,
        passed=passed,
        wall_time=time.perf_counter() - start,
    )


def verify_exact(id: str, params: dict | None = None):
    """Exact comparison of a finite identity over the coefficient basis
    {1, ln2, zeta2, zeta3, zeta4, 1/pi}.

    Returns (equal, lhs_coefficients, rhs_coefficients).
    """
    entry = _entry(id)
    params = dict(params or {})
    if entry.exact is None:
        raise KindError(f"identity {id!r} is not a finite/exact kind")
    if entry.validate:
        entry.validate(params)
    lhs, rhs = entry.exact(params)
    lhs = {k: Fraction(v) for k, v in lhs.items() if v}
    rhs = {k: Fraction(v) for k, v in rhs.items() if v}
    return lhs == rhs, lhs, rhs


def sweep(id: str, grid, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """verify() at every grid point; per-point failures are recorded, not raised."""
    reports = []
    for params in grid:
        try:
            reports.append(verify(id, params, ctx))
        except Exception as exc:  # noqa: BLE001 - sweep must continue
            reports.append(
                VerificationReport(
                    id=id,
                    parameters=dict(params),
                    lhs_value=None,
                    rhs_value=None,
                    abs_error=float("nan"),
                    rel_error=float("nan"),
                    terms_used=0,
                    accelerated=False,
                    passed=False,
                    wall_time=0.0,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    return reports


def run_report(ctx: PrecisionContext = DEFAULT_CONTEXT, ids=None):
    """The full canonical verification suite, ordered by identity id."""
    selected = sorted(ids) if ids else sorted(e.record.id for e in _REGISTRY.values() if not e.record.id.startswith("_"))
    reports = []
    for id in selected:
        entry = _entry(id)
        reports.extend(sweep(id, entry.record.canonical, ctx))
    return reports


def registry_document() -> dict:
    """Versioned JSON-able description of the registry."""
    return {
        "version": REGISTRY_VERSION,
        "identities": [
            {
                "id": r.id,
                "kind": r.kind,
                "description": r.description,
                "provenance": r.provenance,
                "parameters": list(r.param_names),
                "domain": r.domain,
                "canonical": [_params_doc(p) for p in r.canonical],
            }
            for r in list_identities()
        ],
    }


def _params_doc(params: dict) -> dict:
    return {k: format_param(v) for k, v in params.items()}


def format_param(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    if isinstance(v, complex):
        return f"{v.real:g}{v.imag:+g}i"
    return str(v)
