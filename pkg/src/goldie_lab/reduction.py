"""Reduction of the characteristic functional equation to the Goldie equation.

With ``F(t) = f(t)/t`` the equation becomes ``F(st) = F(t) G(s) + H(s)``.
When ``f(1) != 0`` (case 2) the normalised ``F~ = F/f(1)`` gives
``K = F~ - 1`` solving ``K(st) - K(s) = K(t) G(s)`` with ``K(1) = 0``, and
``H~ = F~ - G`` eliminates ``H``.  For the closed-form family this is

    K(t) = kappa (t**gamma - 1)/gamma,  G(s) = s**gamma,
    H~(t) = (kappa - gamma)(t**gamma - 1)/gamma.

Case 1 (``f(1) = 0``) has ``K = F = H`` and is kept only as a flagged,
non-invertible form.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._numerics import as_complex, as_real
from .errors import InputError, NoReconstruction
from .goldie import h_gamma
from .stable import StableParams

__all__ = [
    "Case",
    "ReducedSystem",
    "reduce",
    "reconstruct",
    "dagger_residual",
    "h_tilde_gfe_check",
]


class Case(str, enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"


def _positive(v, name):
    v = as_real(v, name)
    if v <= 0:
        raise InputError(f"{name} must be > 0, got {v!r}")
    return v


@dataclass(frozen=True)
class ReducedSystem:
    """The pair ``(K, G)`` plus the constant of ``H~``.

    ``K`` is parametrised by ``(kappa_K, gamma)`` and ``G`` by ``gamma``.
    ``h_tilde_const`` is always ``kappa_K - gamma`` for case 2.
    """

    case: Case
    kappa_K: complex
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "case", Case(self.case))
        object.__setattr__(self, "kappa_K", as_complex(self.kappa_K, "kappa_K"))
        object.__setattr__(self, "gamma", as_real(self.gamma, "gamma"))

    @property
    def h_tilde_const(self) -> complex:
        if self.case is Case.CASE1:
            return 0j
        return self.kappa_K - self.gamma

    def K(self, t) -> complex:
        t = _positive(t, "t")
        return self.kappa_K * h_gamma(self.gamma, math.log(t))

    def G(self, s) -> float:
        return _positive(s, "s") ** self.gamma

    def H_tilde(self, t) -> complex:
        t = _positive(t, "t")
        return self.h_tilde_const * h_gamma(self.gamma, math.log(t))


def reduce(p: StableParams) -> ReducedSystem:
    """Map a solution to its reduced system; case 1 iff ``f1 == 0``."""
    if p.f1 == 0:
        # f == 0 for the closed form, so K = F = H == 0.
        return ReducedSystem(Case.CASE1, 0j, p.gamma)
    return ReducedSystem(Case.CASE2, p.kappa, p.gamma)


def reconstruct(r: ReducedSystem, f1) -> StableParams:
    """Inverse of :func:`reduce`: ``f(t) = f1 t (1 + K(t))``.

    Raises:
        NoReconstruction: for case-1 systems or ``f1 == 0``.
    """
    f1 = as_complex(f1, "f1")
    if r.case is Case.CASE1:
        raise NoReconstruction("case-1 systems (f(1) = 0) do not determine a stable law")
    if f1 == 0:
        raise NoReconstruction("f1 = 0 would produce a case-1 system")
    return StableParams(f1, r.kappa_K, r.gamma)


def dagger_residual(r: ReducedSystem, f1, s, t) -> complex:
    """``F(st) - F(t) G(s) - H(s)`` with ``F`` and ``H`` rebuilt from ``r``.

    Case 2 uses ``F = f1 (1 + K)`` and ``H = f1 (F~ - G)``; case 1 uses
    ``F = H = K``.
    """
    f1 = as_complex(f1, "f1")
    s = _positive(s, "s")
    t = _positive(t, "t")
    if r.case is Case.CASE1:
        F = r.K
        H = r.K
    else:
        def F(x):
            return f1 * (1.0 + r.K(x))

        def H(x):
            return f1 * (1.0 + r.K(x) - r.G(x))
    return F(s * t) - F(t) * r.G(s) - H(s)


def h_tilde_gfe_check(r: ReducedSystem, s, t) -> complex:
    """Residual of ``H~(st) - H~(s) - H~(t) G(s)`` (case 2)."""
    if r.case is not Case.CASE2:
        raise InputError("h_tilde_gfe_check needs a case-2 system")
    s = _positive(s, "s")
    t = _positive(t, "t")
    return r.H_tilde(s * t) - r.H_tilde(s) - r.H_tilde(t) * r.G(s)
