"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the bare report, or
through pytest, where the lines are repeated in the terminal summary.
"""

import math
import sys
import time

import numpy as np

from goldie_lab.beurling import CircleRho, beurling_kernel, circle_inverse, circle_op, eta_rho, homomorphism_residual
from goldie_lab.errors import DegenerateExponent, NotANormingSequence
from goldie_lab.goldie import GoldieParams, gfe_residual, kappa_eval
from goldie_lab.quadrature import abel_integral_closed, abel_integral_quad, abel_ratio, tail_parts_identity_check
from goldie_lab.reduction import Case, ReducedSystem, reconstruct, reduce
from goldie_lab.stable import (PitmanParams, StableParams, chfe_residual, from_pitman, identify_exponent,
                               modulus_scale_invariance, norming)

RESULTS: list[str] = []
SEED = 20261014


def report(n: int, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def _rng(n):
    return np.random.default_rng(SEED + n)


def _random_complex(rng, radius, size):
    return radius * np.sqrt(rng.uniform(0, 1, size)) * np.exp(1j * rng.uniform(-np.pi, np.pi, size))


def test_criterion_01_goldie_exactness():
    rng = _rng(1)
    k0 = _random_complex(rng, 2.0, 1000)
    g0 = _random_complex(rng, 0.5, 1000)
    xy = rng.uniform(-10, 10, (1000, 2))
    worst = 0.0
    for a, b, (x, y) in zip(k0, g0, xy):
        p = GoldieParams(a, b)
        corners = [(x, y), (10, 10), (-10, 10), (10, -10), (-10, -10)]
        worst = max(worst, max(abs(gfe_residual(p, u, v)) for u, v in corners))
    assert report(1, worst < 1e-10, f"max |GFE residual| = {worst:.2e} over 1000 kernels (< 1e-10)")


def _random_stable(rng):
    f1 = complex(rng.uniform(-3, -0.05), rng.uniform(-3, 3))
    kappa = complex(_random_complex(rng, 3.0, 1)[0])
    return StableParams(f1, kappa, rng.uniform(-0.9, 1.0))


def test_criterion_02_chfe_exactness():
    rng = _rng(2)
    worst, where = 0.0, None
    for _ in range(1000):
        p = _random_stable(rng)
        for n in (int(rng.integers(2, 51)), 50):
            t = float(rng.uniform(0, 10)) or 10.0
            for tt in (t, 10.0):
                r = abs(chfe_residual(p, n, tt))
                if r > worst:
                    worst, where = r, (p, n, tt)
    p, n, t = where
    assert report(2, worst < 1e-9, f"max |n f(t) - f(a_n t) - i b_n t| = {worst:.2e} over 1000 laws (< 1e-9), "
                                   f"at gamma = {p.gamma:.3f}, n = {n}, t = {t:.3g}")


def test_criterion_03_reduction_round_trip():
    rng = _rng(3)
    worst = 0.0
    for _ in range(100):
        f1 = complex(rng.uniform(-3, -0.05), rng.uniform(-3, 3))
        r = ReducedSystem(Case.CASE2, complex(_random_complex(rng, 3.0, 1)[0]), rng.uniform(-0.9, 1.0))
        r2 = reduce(reconstruct(r, f1))
        p = StableParams(f1, r.kappa_K, r.gamma)
        p2 = reconstruct(reduce(p), f1)
        worst = max(worst, abs(r2.kappa_K - r.kappa_K), abs(r2.gamma - r.gamma),
                    abs(p2.f1 - p.f1), abs(p2.kappa - p.kappa), abs(p2.gamma - p.gamma))
    assert report(3, worst <= 1e-12, f"max component difference = {worst:.2e} over 100 systems (<= 1e-12)")


def test_criterion_04_location_constant():
    p = from_pitman(PitmanParams(1.0, 0.0, 1.0, 0.5))
    b2 = norming(p, 2).b_n
    r = abs(chfe_residual(p, 2, 1.0))
    ok = abs(b2 - 4) < 1e-12 and r < 1e-10
    assert report(4, ok, f"b_2 = {b2.real:.15g}{b2.imag:+.1e}i, residual(2, 1) = {r:.2e}")


def test_criterion_05_log_unification():
    worst = 0.0
    for lam in (1.0, 2.0, -3.0):
        for g in (1e-8, -1e-8):
            p = from_pitman(PitmanParams(1.0, 0.0, lam, 1.0 + g))
            for n in range(2, 101):
                target = lam * n * math.log(n)
                worst = max(worst, abs(norming(p, n).b_n - target) / abs(target))
    assert report(5, worst <= 1e-6, f"max relative |b_n - lam n log n| = {worst:.2e} (<= 1e-6)")


def test_criterion_06_appendix_ratio():
    details, ok = [], True
    for k in (0.25, 0.5, 0.75):
        start = time.perf_counter()
        r = abel_ratio(k, "extrapolated")
        dt = time.perf_counter() - start
        ok &= r.rel_err < 1e-6 and dt < 5
        details.append(f"k={k}: rel {r.rel_err:.1e} in {dt:.2f}s")
    diff = abs(abel_integral_quad(0.5, 1.0).value - abel_integral_closed(0.5, 1.0))
    ok &= diff < 1e-8
    details.append(f"closed vs quad at (0.5, 1): {diff:.1e}")
    assert report(6, ok, "; ".join(details))


def test_criterion_07_parts_identity():
    a = tail_parts_identity_check(0.5, 0.1, 50)
    b = tail_parts_identity_check(1.5, 0.01, 100)
    assert report(7, a < 1e-9 and b < 1e-9, f"residuals {a:.1e}, {b:.1e} (< 1e-9)")


def test_criterion_08_exponent_identification():
    worst = max(abs(identify_exponent([n ** k for n in range(1, 51)]) - k) for k in (-1, 0.5, 1, 2))
    try:
        identify_exponent([1.0] * 20)
        degenerate = False
    except DegenerateExponent:
        degenerate = True
    try:
        identify_exponent([1, 2, 3, 5])
        nonmult = False
    except NotANormingSequence:
        nonmult = True
    ok = worst < 1e-10 and degenerate and nonmult
    assert report(8, ok, f"max |k error| = {worst:.1e}; a_n = 1 rejected: {degenerate}; "
                         f"non-multiplicative rejected: {nonmult}")


def test_criterion_09_circle_groups():
    rng = _rng(9)
    worst = 0.0
    for rho in (0, 1, 1j, 2 - 1j):
        g = CircleRho(rho)
        count = 0
        while count < 1000:
            a, b, c = _random_complex(rng, 2.0, 3)
            if rho != 0 and min(abs(1 + rho * z) for z in (a, b, c)) < 0.1:
                continue
            count += 1
            ab = circle_op(g, a, b)
            assoc = abs(circle_op(g, ab, c) - circle_op(g, a, circle_op(g, b, c))) / max(1, abs(circle_op(g, ab, c)))
            ident = max(abs(circle_op(g, a, 0) - a), abs(circle_op(g, 0, a) - a))
            inv = circle_inverse(g, a)
            inverse = abs(circle_op(g, a, inv)) / max(1, abs(a), abs(inv))
            iso = abs(eta_rho(rho, a) * eta_rho(rho, b) - eta_rho(rho, ab)) / max(1, abs(eta_rho(rho, ab)))
            worst = max(worst, assoc, ident, inverse, iso)
    hom = 0.0
    for _ in range(1000):
        p = _random_stable(rng)
        if abs(p.kappa) < 1e-3:
            continue
        s, t = rng.uniform(0.5, 20, 2)
        hom = max(hom, abs(homomorphism_residual(p, s, t)))
    ok = worst < 1e-12 and hom < 1e-10
    assert report(9, ok, f"group/isomorphism residual {worst:.1e} (< 1e-12); homomorphism {hom:.1e} (< 1e-10)")


def test_criterion_10_beurling_kernel():
    e = beurling_kernel(math.log, lambda x: x, 1.0)
    log_err = abs(e.value - math.log(2))
    lin = 0.0
    converged = e.converged
    for c in (0.5, 2.0, -1.5, 3 + 0j):
        for t in (0.25, 1.0, 3.0):
            est = beurling_kernel(lambda x, c=c: c * x, lambda x: 1.0, t)
            converged &= est.converged
            lin = max(lin, abs(est.value - kappa_eval(GoldieParams(c, 0), t)))
    ok = log_err < 1e-6 and lin < 1e-8 and converged
    assert report(10, ok, f"|K_log(1) - log 2| = {log_err:.1e} (< 1e-6); linear kernels {lin:.1e} (< 1e-8)")


def test_criterion_11_scale_invariance():
    laws = [from_pitman(PitmanParams(1.0, 0.0, 0.0, 0.5)),
            StableParams(-1.0, complex(-0.5, 1.0), -0.5),
            from_pitman(PitmanParams(2.0, 1.0, -1.0, 1.7))]
    grid = [0.1 * j for j in range(1, 101)]
    ok = True
    for p in laws:
        for c in (0.5, 0.9, 1.0, 1.1, 2.0):
            ok &= modulus_scale_invariance(p, c, grid, tol=1e-9) == (c == 1.0)
    assert report(11, ok, "modulus invariant iff c = 1 for 3 laws, c in {0.5, 0.9, 1, 1.1, 2}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
