"""Precision management and cached fundamental constants.

All numeric operations in the package are pure functions of their inputs and
an ambient :class:`PrecisionContext`.  Internally everything is computed with
mpmath arbitrary-precision floats at the context's mantissa size plus guard
bits, then rounded back to the context precision.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

GUARD_BITS = 32

# Bernoulli/asymptotic machinery benefits from a single shared lock because the
# global mpmath context is mutated by workprec.
_mp_lock = threading.RLock()


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision, term budget and relative tolerance target."""

    mantissa_bits: int = 128
    max_terms: int = 2_000_000
    target_tol: float = 1e-10

    def __post_init__(self):
        if self.mantissa_bits < 53:
            raise ValueError("mantissa_bits must be >= 53")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")


DEFAULT_CONTEXT = PrecisionContext()


@contextmanager
def working_precision(bits):
    """Run a block at the given mantissa size (plus guard bits)."""
    with _mp_lock:
        with mp.workprec(bits + GUARD_BITS):
            yield


def round_to(value, ctx: PrecisionContext):
    """Round a value (mpf/mpc) to the context's mantissa size."""
    with _mp_lock:
        with mp.workprec(ctx.mantissa_bits):
            return +value


def to_mp(x):
    """Coerce int/float/Fraction/complex/mpf/mpc to an mpmath number."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / mpf(x.denominator)
    if isinstance(x, complex):
        return mp.mpc(x.real, x.imag)
    return mp.mpmathify(x)


class Constants:
    """Fundamental constants evaluated at a context's precision.

    zeta2 and zeta4 are defined through pi (no circularity with the
    alternating-series zeta); zeta3 comes from the accelerated eta series.
    """

    __slots__ = ("pi", "euler_gamma", "ln2", "zeta2", "zeta3", "zeta4")

    def __init__(self, ctx: PrecisionContext):
        from .specfun import _zeta_eta_series  # deferred: avoids import cycle

        with working_precision(ctx.mantissa_bits):
            pi = +mp.pi
            self.euler_gamma = +mp.euler
            self.ln2 = mp.log(2)
            self.pi = pi
            self.zeta2 = pi**2 / 6
            self.zeta4 = pi**4 / 90
            self.zeta3 = _zeta_eta_series(mpf(3))
        for name in self.__slots__:
            setattr(self, name, round_to(getattr(self, name), ctx))


_constants_cache: dict[int, Constants] = {}
_constants_lock = threading.Lock()


def constants(ctx: PrecisionContext = DEFAULT_CONTEXT) -> Constants:
    """Cached constants for the context's mantissa size."""
    key = ctx.mantissa_bits
    with _constants_lock:
        got = _constants_cache.get(key)
    if got is not None:
        return got
    made = Constants(ctx)
    with _constants_lock:
        return _constants_cache.setdefault(key, made)
