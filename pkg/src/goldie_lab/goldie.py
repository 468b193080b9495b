"""Goldie kernels and residuals of the Goldie functional equation.

The continuous solutions of

    kappa(x + y) - kappa(x) = gamma(x) kappa(y),    kappa(0) = 0,

are ``gamma(u) = exp(gamma0 u)`` and ``kappa(x) = kappa0 * H(gamma0, x)`` with
``H(g, x) = (exp(g x) - 1)/g`` (read as ``x`` at ``g = 0``).  The
multiplicative form ``K(st) - K(s) = G(s) K(t)``, ``K(1) = 0`` is obtained by
``s = e^u``: ``G(s) = s**gamma0`` and ``K(s) = kappa0 * H(gamma0, log s)``.

Complex ``gamma0`` is accepted throughout.  Every logarithm of a complex
quantity is the principal branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._numerics import as_complex, as_real, expm1_ratio
from .errors import IllPosedSample, InputError, TrivialSolution

__all__ = [
    "GoldieParams",
    "GoldieFit",
    "h_gamma",
    "kappa_eval",
    "gamma_aux_eval",
    "gfe_residual",
    "mult_kernel",
    "mult_aux",
    "gfe_mult_residual",
    "fit_goldie",
]

FIT_TOL = 1e-12


@dataclass(frozen=True)
class GoldieParams:
    """Constants ``(kappa0, gamma0)`` of a Goldie kernel.

    ``kappa0 == 0`` encodes the trivial solution.
    """

    kappa0: complex
    gamma0: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "kappa0", as_complex(self.kappa0, "kappa0"))
        object.__setattr__(self, "gamma0", as_complex(self.gamma0, "gamma0"))

    @property
    def is_trivial(self) -> bool:
        return self.kappa0 == 0


@dataclass(frozen=True)
class GoldieFit:
    """Result of :func:`fit_goldie`.

    ``max_residual`` is the largest ``|kappa_eval(params, x) - value|`` over
    all samples, including the ones not used by the two-point estimate.
    """

    params: GoldieParams
    max_residual: float
    step: float


def h_gamma(gamma0, x) -> complex:
    """``(exp(gamma0 x) - 1)/gamma0`` under the l'Hospital convention."""
    return complex(expm1_ratio(as_complex(gamma0, "gamma0"), as_real(x, "x")))


def kappa_eval(p: GoldieParams, x) -> complex:
    x = as_real(x, "x")
    if x == 0.0 or p.kappa0 == 0:
        return 0j
    return p.kappa0 * h_gamma(p.gamma0, x)


def gamma_aux_eval(p: GoldieParams, x) -> complex:
    """Auxiliary function ``exp(gamma0 x)``."""
    return cmath.exp(p.gamma0 * as_real(x, "x"))


def gfe_residual(p: GoldieParams, x, y) -> complex:
    """``kappa(x+y) - kappa(x) - gamma(x) kappa(y)``."""
    x = as_real(x, "x")
    y = as_real(y, "y")
    return kappa_eval(p, x + y) - kappa_eval(p, x) - gamma_aux_eval(p, x) * kappa_eval(p, y)


def _positive(v, name):
    v = as_real(v, name)
    if v <= 0:
        raise InputError(f"{name} must be > 0, got {v!r}")
    return v


def mult_kernel(p: GoldieParams, s) -> complex:
    """Multiplicative kernel ``K(s) = kappa0 (s**gamma0 - 1)/gamma0``."""
    s = _positive(s, "s")
    if s == 1.0 or p.kappa0 == 0:
        return 0j
    return p.kappa0 * h_gamma(p.gamma0, math.log(s))


def mult_aux(p: GoldieParams, s) -> complex:
    """Multiplicative auxiliary ``G(s) = s**gamma0``."""
    return cmath.exp(p.gamma0 * math.log(_positive(s, "s")))


def gfe_mult_residual(p: GoldieParams, s, t) -> complex:
    """``K(st) - K(s) - G(s) K(t)`` for the closed-form kernel of ``p``."""
    s = _positive(s, "s")
    t = _positive(t, "t")
    return mult_kernel(p, s * t) - mult_kernel(p, s) - mult_aux(p, s) * mult_kernel(p, t)


def fit_goldie(samples: Iterable[Sequence], fit_tol: float = FIT_TOL,
               grid_tol: float = 1e-9) -> GoldieFit:
    """Recover ``(kappa0, gamma0)`` from kernel samples on ``x = h, 2h, 3h, ...``.

    Two grid points suffice: ``exp(gamma0 h) = kappa(2h)/kappa(h) - 1``.  If
    that ratio is within ``fit_tol`` of 2 the additive kernel ``gamma0 = 0``
    is returned.  Remaining samples only feed ``max_residual``.

    Args:
        samples: pairs ``(x, value)``, sorted by ``x``.
        fit_tol: tolerance for snapping to the additive case.
        grid_tol: relative tolerance for the uniform-grid check.

    Raises:
        InputError: fewer than three samples or a non-uniform grid.
        TrivialSolution: every value is zero.
        IllPosedSample: ``kappa(h) == 0`` while ``kappa(2h) != 0``.
    """
    pts = [(as_real(x, "x"), as_complex(v, "value")) for x, v in samples]
    if len(pts) < 3:
        raise InputError(f"need at least 3 samples, got {len(pts)}")
    h = pts[0][0]
    if h <= 0:
        raise InputError(f"grid must start at x = h > 0, got {h!r}")
    for i, (x, _) in enumerate(pts):
        if abs(x - (i + 1) * h) > grid_tol * (i + 1) * h:
            raise InputError(f"samples are not on the grid h, 2h, ...: x[{i}] = {x!r}, h = {h!r}")
    if all(v == 0 for _, v in pts):
        raise TrivialSolution("all samples vanish; kappa == 0 is the trivial solution")
    k1, k2 = pts[0][1], pts[1][1]
    if k1 == 0:
        raise IllPosedSample("kappa(h) = 0 with nonzero later samples; gamma0 is not identifiable")

    ratio = k2 / k1
    if abs(ratio - 2.0) < fit_tol:
        params = GoldieParams(k1 / h, 0j)
    else:
        if ratio == 1.0:
            raise IllPosedSample("kappa(2h) = kappa(h) forces exp(gamma0 h) = 0")
        gamma0 = cmath.log(ratio - 1.0) / h
        params = GoldieParams(k1 / h_gamma(gamma0, h), gamma0)

    resid = max(abs(kappa_eval(params, x) - v) for x, v in pts)
    return GoldieFit(params, resid, h)
