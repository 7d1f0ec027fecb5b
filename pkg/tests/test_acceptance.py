"""Acceptance gate: ten end-to-end criteria, one pass/fail line each.

Each test prints ``ACCEPTANCE <n>: PASS/FAIL`` (visible under ``pytest -s`` or
on failure) and asserts the stated tolerances.
"""

import random
import time
from fractions import Fraction

from mpmath import mp, mpf

from harmonicsums import catalog
from harmonicsums.harmonic import gen_harmonic
from harmonicsums.precision import DEFAULT_CONTEXT, PrecisionContext, constants, to_mp, working_precision
from harmonicsums.series import Family, SeriesSpec, Weight, partial_sum, tail_estimate
from harmonicsums.specfun import digamma, digamma_log_series, polygamma

CTX = DEFAULT_CONTEXT


def _line(n, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {n}: {status} — {detail}")
    assert ok, f"acceptance criterion {n} failed: {detail}"


def test_acceptance_1_basel():
    start = time.perf_counter()
    report = catalog.verify("main", {"z": 0}, CTX)
    elapsed = time.perf_counter() - start
    ok = report.passed and report.rel_error <= 1e-10 and elapsed < 1.0
    value = float(report.lhs_value)
    ok = ok and abs(value - 1.6449340668) < 1e-9
    _line(1, ok, f"main z=0 -> {value:.10f} rel={report.rel_error:.2e} t={elapsed:.2f}s")


def test_acceptance_2_euler_sum():
    start = time.perf_counter()
    report = catalog.verify("thm3.euler", {}, CTX)
    elapsed = time.perf_counter() - start
    value = float(report.lhs_value)
    ok = report.passed and report.rel_error <= 1e-10 and elapsed < 2.0
    ok = ok and abs(value - 2.4041138063) < 1e-9
    _line(2, ok, f"thm3.euler -> {value:.10f} rel={report.rel_error:.2e} t={elapsed:.2f}s")


def test_acceptance_3_central_binomial():
    start = time.perf_counter()
    report = catalog.verify("thm2.m0", {}, CTX)
    elapsed = time.perf_counter() - start
    value = float(report.lhs_value)
    ok = report.passed and report.rel_error <= 1e-8 and report.accelerated and elapsed < 5.0
    ok = ok and abs(value - 4.9348022005) < 1e-9
    _line(3, ok, f"thm2.m0 -> {value:.10f} rel={report.rel_error:.2e} accelerated t={elapsed:.2f}s")


def test_acceptance_4_quadratic_euler_sum():
    report = catalog.verify("bowen", {}, CTX)
    value = float(report.lhs_value)
    ok = report.passed and report.rel_error <= 1e-9
    ok = ok and abs(value - 4.5998737434) < 1e-8
    _line(4, ok, f"bowen -> {value:.10f} rel={report.rel_error:.2e} (combination of two series)")


def test_acceptance_5_odd_weight_series():
    report = catalog.verify("cor.halfP12odd.m0", {}, CTX)
    value = float(report.lhs_value)
    with working_precision(CTX.mantissa_bits):
        # pi^2/4 + (7/2) zeta(3) = 6.6746002613...
        expected = float(constants(CTX).pi ** 2 / 4 + mpf(7) / 2 * constants(CTX).zeta3)
    ok = report.passed and report.rel_error <= 1e-8
    ok = ok and abs(value - expected) < 1e-8
    _line(5, ok, f"cor.halfP12odd.m0 -> {value:.10f} (expected {expected:.10f}) rel={report.rel_error:.2e}")


def test_acceptance_6_full_canonical_suite():
    start = time.perf_counter()
    reports = catalog.run_report(CTX)
    elapsed = time.perf_counter() - start
    ids = {r.id for r in reports}
    failed = [r for r in reports if not r.passed]
    ok = len(ids) >= 55 and not failed and elapsed < 180.0
    _line(
        6,
        ok,
        f"report: {len(ids)} identities / {len(reports)} points, "
        f"{len(failed)} failures, t={elapsed:.1f}s",
    )


def test_acceptance_7_exact_suite():
    start = time.perf_counter()
    failures = []
    for n in range(1, 13):
        for p in range(1, 7):
            for q in range(1, 7):
                ok, *_ = catalog.verify_exact("frisch", {"n": n, "z": Fraction(p, q)})
                if not ok:
                    failures.append(("frisch", n, p, q))
    for m in range(1, 21):
        for nn in (2, 3, 5, Fraction(1, 2)):
            ok, *_ = catalog.verify_exact("bs", {"m": m, "n": nn})
            if not ok:
                failures.append(("bs", m, nn))
    for case in "ACDEF":
        for u in range(0, 11):
            for v in range(0, 11):
                try:
                    params = {"u": u} if case == "F" else {"u": u, "v": v}
                    ok, *_ = catalog.verify_exact(f"lemma2.{case}", params)
                except Exception:
                    continue  # outside the case's domain
                if not ok:
                    failures.append((case, u, v))
    for j in (0, 1, 2):
        for r in range(1, 101):
            ok, *_ = catalog.verify_exact(f"wsum.j{j}", {"r": r})
            if not ok:
                failures.append(("wsum", j, r))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    _line(7, ok, f"exact suite: {len(failures)} failures, t={elapsed:.1f}s")


def test_acceptance_8_property_suites():
    problems = []
    # digamma recurrence at 1000 random points
    rng = random.Random(20260823)
    with working_precision(CTX.mantissa_bits):
        for _ in range(1000):
            z = complex(rng.uniform(0.05, 50.0), rng.uniform(-20.0, 20.0))
            lhs = digamma(complex(z.real + 1, z.imag), CTX)
            rhs = digamma(z, CTX) + 1 / to_mp(z)
            if float(abs(lhs - rhs) / abs(rhs)) >= 10 * CTX.target_tol:
                problems.append(("digamma", z))
    # polygamma vs central finite differences
    h = 1e-5
    for r in (1, 2, 3):
        for z in (0.75, 1.5, 4.0):
            with working_precision(CTX.mantissa_bits):
                approx = (polygamma(r - 1, z + h, CTX) - polygamma(r - 1, z - h, CTX)) / (2 * h)
                err = float(abs(polygamma(r, z, CTX) - approx) / abs(approx))
            if err >= 1e-6:
                problems.append(("polygamma", r, z))
    # Lemma-1-style closure: closed form vs polygamma route, k <= 100, m <= 4
    from harmonicsums.harmonic import half_integer_harmonic

    for m in (1, 2, 3, 4):
        for k in range(0, 101, 4):
            closed = half_integer_harmonic(m, k, CTX)
            direct = gen_harmonic(m, Fraction(2 * k - 1, 2), CTX)
            with working_precision(CTX.mantissa_bits):
                err = float(abs(closed - direct) / abs(direct))
            if err >= 10 * CTX.target_tol:
                problems.append(("closure", m, k))
    # log-series error decreasing in depth
    for z in (1, 2, 3):
        with working_precision(CTX.mantissa_bits):
            truth = mp.psi(0, mpf(z))
            errs = [float(abs(digamma_log_series(z, d, CTX) - truth)) for d in (1, 2, 4, 8)]
        if not all(b <= a for a, b in zip(errs, errs[1:])):
            problems.append(("logseries", z))
    _line(8, not problems, f"property suites: {len(problems)} violations")


def test_acceptance_9_complex_domain():
    z = complex(0.3, 0.7)
    report = catalog.verify("main", {"z": z}, CTX)
    # independent RHS route: polygamma-based generalized harmonic number
    with working_precision(CTX.mantissa_bits):
        rhs = constants(CTX).zeta2 - gen_harmonic(2, z, CTX)
        cross = float(abs(report.lhs_value - rhs) / abs(rhs))
    ok = report.passed and report.rel_error <= 1e-10 and cross <= 1e-10
    _line(9, ok, f"main z=0.3+0.7i rel={report.rel_error:.2e} cross-check={cross:.2e}")


def test_acceptance_10_tail_estimator_honesty():
    checks = []
    # (spec, N, true tail oracle)
    spec1 = SeriesSpec(Family.P2, Weight.ONE, z=0)
    true1 = float(polygamma(1, 1001, CTX))
    checks.append(("P2 z=0 N=1000", tail_estimate(spec1, 1000, CTX), true1))
    spec2 = SeriesSpec(Family.P1234, Weight.ONE, z=0)
    true2 = 1.0 / (3 * 101 * 102 * 103)  # telescoping remainder
    checks.append(("P1234 z=0 N=100", tail_estimate(spec2, 100, CTX), true2))
    spec3 = SeriesSpec(Family.P2, Weight.ONE, m=0)
    with working_precision(CTX.mantissa_bits):
        true3 = float(constants(CTX).pi ** 2 / 2 - partial_sum(spec3, 10_000, CTX))
    checks.append(("P2 half m=0 N=1e4", tail_estimate(spec3, 10_000, CTX), true3))
    bad = []
    for label, est, true in checks:
        base = est / 4.0  # the estimator's documented x4 safety factor
        if not (true / 4 <= base <= 4 * true):
            bad.append((label, est, true))
    detail = "; ".join(f"{label}: est/true={est / true:.3f}" for label, est, true in checks)
    _line(10, not bad, f"tail estimates ({detail})")
