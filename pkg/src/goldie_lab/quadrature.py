"""Damped Fresnel-type Gamma integrals and the tangent ratio.

For ``0 < k < 1`` and ``delta > 0``, with ``theta = arctan(1/delta)``,

    int_0^inf x**-k e^{-delta x} (cos x - i sin x) dx
        = Gamma(1-k) (1 + delta**2)**(-(1-k)/2) [cos((1-k) theta) - i sin((1-k) theta)],

and as ``delta -> 0`` the ratio of the cosine integral to the sine integral
tends to ``cot((1-k) pi/2) = tan(pi k/2)``.

The direct quadrature integrates ``[0, pi]`` after the substitution
``x = u**(1/(1-k))``, which cancels the ``x**-k`` singularity exactly, and
then sums half-period integrals over ``[m pi, (m+1) pi]``.  The partial sums
alternate and are accelerated with iterated Aitken sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._numerics import as_real
from .accel import extrapolate_to_zero, iterated_aitken
from .errors import ConvergenceError, InputError

__all__ = [
    "QuadratureResult",
    "AbelRatioResult",
    "gamma_real",
    "abel_integral_closed",
    "abel_integral_quad",
    "abel_ratio",
    "tail_parts_identity_check",
    "integrate",
]

# Lanczos approximation, g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_GL_LO = np.polynomial.legendre.leggauss(20)
_GL_HI = np.polynomial.legendre.leggauss(40)
_MAX_DEPTH = 50
_ACCEL_DEPTH = 12
_EPS = float(np.finfo(float).eps)


def gamma_real(x) -> float:
    """Gamma function for real ``x > 0`` (about 1e-15 relative on (0, 2))."""
    x = as_real(x, "x")
    if x <= 0:
        raise InputError(f"gamma_real needs x > 0, got {x!r}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_real(1.0 - x))
    if x > 171.6:
        raise OverflowError(f"Gamma({x}) exceeds the double range")
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    tt = z + _LANCZOS_G + 0.5
    # split the power to keep tt**(z+0.5) finite up to x ~ 171
    half = tt ** (0.5 * (z + 0.5))
    return math.sqrt(2.0 * math.pi) * half * (half * math.exp(-tt)) * acc


def _check_k(k, upper=1.0) -> float:
    k = as_real(k, "k")
    if not (0.0 < k < upper):
        raise InputError(f"k must lie in (0, {upper:g}), got {k!r}")
    return k


def abel_integral_closed(k, delta) -> complex:
    """Closed form of ``int_0^inf x**-k e^{-delta x}(cos x - i sin x) dx``.

    ``delta = 0`` is the Abel limit: ``theta = pi/2`` and unit modulus factor.
    """
    k = _check_k(k)
    delta = as_real(delta, "delta")
    if delta < 0:
        raise InputError(f"delta must be >= 0, got {delta!r}")
    theta = math.atan2(1.0, delta)
    mod = gamma_real(1.0 - k) * (1.0 + delta * delta) ** (-(1.0 - k) / 2.0)
    return complex(mod * math.cos((1.0 - k) * theta), -mod * math.sin((1.0 - k) * theta))


# -- adaptive Gauss-Legendre ----------------------------------------------------

def _gl(f, a, b, rule):
    x, w = rule
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return half * float(np.dot(w, f(mid + half * x)))


def integrate(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, tol: float = 1e-14,
              ) -> tuple[float, float, int]:
    """Adaptive bisection with 20/40-point Gauss-Legendre panels.

    ``f`` must accept numpy arrays.  Returns ``(value, abs_err, evaluations)``.
    """
    total = 0.0
    err = 0.0
    evals = 0
    stack = [(a, b, tol, 0)]
    while stack:
        lo, hi, tl, depth = stack.pop()
        lo_v = _gl(f, lo, hi, _GL_LO)
        hi_v = _gl(f, lo, hi, _GL_HI)
        evals += 60
        e = abs(hi_v - lo_v)
        # below a few ulps of the panel value further bisection only chases rounding
        if e <= tl or e <= 64 * _EPS * abs(hi_v) or depth >= _MAX_DEPTH:
            total += hi_v
            err += e
            continue
        mid = 0.5 * (lo + hi)
        stack.append((lo, mid, tl / 2, depth + 1))
        stack.append((mid, hi, tl / 2, depth + 1))
    return total, err, evals


def _panels(f, m0: int, count: int) -> tuple[np.ndarray, float, int]:
    """Integrals of ``f`` over ``[m pi, (m+1) pi]`` for ``m = m0..m0+count-1``."""
    a = np.pi * np.arange(m0, m0 + count, dtype=float)[:, None]
    half = 0.5 * np.pi
    out = []
    for x, w in (_GL_LO, _GL_HI):
        out.append(half * (f(a + half + half * x[None, :]) @ w))
    return out[1], float(np.max(np.abs(out[1] - out[0]))), count * 60


@dataclass(frozen=True)
class QuadratureResult:
    """``value = cos part - i * sin part``, matching :func:`abel_integral_closed`."""

    value: complex
    abs_err: float
    evaluations: int

    @property
    def cos_part(self) -> float:
        return self.value.real

    @property
    def sin_part(self) -> float:
        return -self.value.imag


@dataclass(frozen=True)
class AbelRatioResult:
    k: float
    ratio: float
    reference: float
    rel_err: float
    method: str = "closed"
    abs_err: float = 0.0


def _one_part(trig, k, delta, tol, panels, max_panels):
    p = 1.0 / (1.0 - k)

    def head(u):
        x = u ** p
        return p * np.exp(-delta * x) * trig(x)

    def tail(x):
        return x ** -k * np.exp(-delta * x) * trig(x)

    h, h_err, evals = integrate(head, 0.0, math.pi ** (1.0 - k), tol * 1e-3)
    terms = np.empty(0)
    panel_err = 0.0
    while True:
        m0 = terms.size + 1
        new, e, n_ev = _panels(tail, m0, panels if terms.size == 0 else terms.size)
        evals += n_ev
        panel_err = max(panel_err, e)
        terms = np.concatenate([terms, new])
        sums = h + np.cumsum(terms)
        if abs(terms[-1]) <= 1e-17 * max(1.0, abs(sums[-1])):
            value, acc_err = float(sums[-1]), float(abs(terms[-1]))
        else:
            est, acc_err, _ = iterated_aitken(sums, _ACCEL_DEPTH)
            value = est.real
        total_err = acc_err + h_err + panel_err * terms.size
        if total_err <= tol:
            return value, total_err, evals
        if terms.size >= max_panels:
            raise ConvergenceError(
                f"half-period series not converged after {terms.size} panels (err {total_err:.2g})",
                partial=(value, total_err, evals))


def abel_integral_quad(k, delta, tol: float = 1e-10, panels: int = 32,
                       max_panels: int = 4096) -> QuadratureResult:
    """Direct quadrature of both damped integrals.

    The number of half-period panels doubles from ``panels`` until the
    combined truncation, acceleration and panel error is below ``tol``.

    Raises:
        ConvergenceError: budget exhausted; ``partial`` holds the last
            :class:`QuadratureResult`.
    """
    k = _check_k(k)
    delta = as_real(delta, "delta")
    if delta < 0:
        raise InputError(f"delta must be >= 0, got {delta!r}")
    if tol < 1e-10:
        raise InputError(f"tol must be >= 1e-10, got {tol!r}")
    parts = {}
    failure = None
    for name, trig in (("cos", np.cos), ("sin", np.sin)):
        try:
            parts[name] = _one_part(trig, k, delta, tol / 2, panels, max_panels)
        except ConvergenceError as exc:
            parts[name] = exc.partial
            failure = exc
    (c, ce, cn), (s, se, sn) = parts["cos"], parts["sin"]
    result = QuadratureResult(complex(c, -s), ce + se, cn + sn)
    if failure is not None:
        raise ConvergenceError(str(failure), result)
    return result


def abel_ratio(k, method: str = "closed", tol: float = 1e-10) -> AbelRatioResult:
    """Ratio of the cosine to the sine integral at ``delta = 0``.

    ``closed`` uses the Gamma closed form, ``quad`` the direct undamped
    quadrature, and ``extrapolated`` evaluates the damped quadrature ratio
    at ``delta = 2**-j``, ``j = 2..12``, and extrapolates polynomially to
    ``delta = 0``.
    """
    k = _check_k(k)
    ref = math.tan(math.pi * k / 2.0)
    err = 0.0
    if method == "closed":
        v = abel_integral_closed(k, 0.0)
        ratio = v.real / -v.imag
    elif method == "quad":
        q = abel_integral_quad(k, 0.0, tol)
        ratio = q.cos_part / q.sin_part
        err = abs(ratio) * q.abs_err * (1 / abs(q.cos_part) + 1 / abs(q.sin_part))
    elif method == "extrapolated":
        deltas = [2.0 ** -j for j in range(2, 13)]
        ratios = []
        noise = 0.0
        for d in deltas:
            q = abel_integral_quad(k, d, tol)
            r = q.cos_part / q.sin_part
            ratios.append(r)
            noise = max(noise, abs(r) * q.abs_err * (1 / abs(q.cos_part) + 1 / abs(q.sin_part)))
        value, err = extrapolate_to_zero(deltas, ratios)
        ratio = value.real
        err += noise
    else:
        raise InputError(f"unknown method {method!r}; choose closed, quad or extrapolated")
    return AbelRatioResult(k, ratio, ref, abs(ratio - ref) / abs(ref), method, err)


def tail_parts_identity_check(k, delta, T, tol: float = 1e-13) -> float:
    """Residual of the integration-by-parts identity for the sine tail.

    Compares direct quadrature of ``int_1^T x**-k e^{-delta x} sin x dx``
    with the boundary terms at 1 and ``T`` minus
    ``k int_1^T e^{-delta x}(delta sin x + cos x) x**-(k+1) dx/(1+delta**2)``.
    Valid for any ``k > 0``.
    """
    k = as_real(k, "k")
    delta = as_real(delta, "delta")
    T = as_real(T, "T")
    if k <= 0:
        raise InputError(f"k must be > 0, got {k!r}")
    if T <= 1:
        raise InputError(f"T must be > 1, got {T!r}")
    d2 = 1.0 + delta * delta

    def split(f):
        # one piece per half period keeps every panel free of many oscillations
        edges = np.unique(np.concatenate([[1.0], np.arange(1, int(T / np.pi) + 1) * np.pi, [T]]))
        edges = edges[(edges >= 1.0) & (edges <= T)]
        return sum(integrate(f, lo, hi, tol)[0] for lo, hi in zip(edges[:-1], edges[1:]))

    lhs = split(lambda x: x ** -k * np.exp(-delta * x) * np.sin(x))
    boundary = (math.exp(-delta) * (delta * math.sin(1.0) + math.cos(1.0)) / d2
                - math.exp(-delta * T) * (delta * math.sin(T) + math.cos(T)) / (T ** k * d2))
    remainder = split(lambda x: np.exp(-delta * x) * (delta * np.sin(x) + np.cos(x)) / (x ** (k + 1) * d2))
    return abs(lhs - (boundary - k * remainder))
