"""Stable-law log-characteristic functions and their norming constants.

For ``t > 0`` the continuous solutions of the characteristic functional
equation ``phi(t)**n = phi(a_n t) exp(i b_n t)`` with ``f(1) != 0`` are

    f(t) = log phi(t) = f1 * t * (1 + kappa * (t**gamma - 1)/gamma),

i.e. ``f1 (A t**alpha + B t)`` with ``A = kappa/gamma``, ``B = 1 - A`` and
``alpha = gamma + 1``; at ``gamma = 0`` this reads ``f1 (t + kappa t log t)``.

Substituting back gives ``a_n = n**k`` with ``k = 1/alpha`` and

    b_n = -i f1 B (n - n**k) = lam (n - n**k)/gamma,    lam = i f1 (kappa - gamma),

which is ``lam n log n`` at ``gamma = 0``.  ``lam`` is the Pitman location
parameter; ``b_n`` is real exactly when ``lam`` is.  Note that ``lam`` is
built from ``kappa - gamma`` (the constant of ``H~ = F~ - G``), not from
``kappa`` itself: ``kappa = gamma`` gives ``f = f1 t**alpha``, a strictly
stable law with every ``b_n = 0``.

Residual checks run in mpmath at ``dps`` digits by default.  ``a_n t``
reaches ~1e17 for ``gamma`` near -1, so double precision cannot resolve an
absolute residual of 1e-9 there.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath
import numpy as np

from ._numerics import EPS_SWITCH, as_complex, as_real
from .errors import DegenerateExponent, InadmissibleParameters, InputError, NotANormingSequence
from .goldie import h_gamma

__all__ = [
    "StableParams",
    "PitmanParams",
    "NormingConstants",
    "Triviality",
    "from_pitman",
    "to_pitman",
    "log_cf",
    "cf",
    "norming",
    "gamma_pitman",
    "chfe_residual",
    "chfe_exp_residual",
    "multiplicativity_defect",
    "identify_exponent",
    "modulus_scale_invariance",
    "classify_modulus_samples",
    "classify_triviality",
]

RESIDUAL_DPS = 50
MULT_TOL = 1e-9
K_TOL = 1e-9


@dataclass(frozen=True)
class StableParams:
    """Canonical parameters ``(f1, kappa, gamma)`` of a continuous solution.

    ``f1 = log phi(1)``, ``kappa`` is the constant of the Goldie kernel
    ``K(t) = kappa (t**gamma - 1)/gamma`` and ``gamma = alpha - 1`` is real.
    """

    f1: complex
    kappa: complex
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "f1", as_complex(self.f1, "f1"))
        object.__setattr__(self, "kappa", as_complex(self.kappa, "kappa"))
        object.__setattr__(self, "gamma", as_real(self.gamma, "gamma"))
        if self.gamma + 1.0 <= 0.0:
            raise InputError(f"alpha = gamma + 1 must be > 0, got gamma = {self.gamma!r}")

    @property
    def alpha(self) -> float:
        return self.gamma + 1.0

    @property
    def k(self) -> float:
        return 1.0 / (self.gamma + 1.0)

    @property
    def A(self) -> complex:
        if self.gamma == 0.0:
            raise ZeroDivisionError("A = kappa/gamma is undefined at gamma = 0; use the t log t form")
        return self.kappa / self.gamma

    @property
    def B(self) -> complex:
        return 1.0 - self.A

    @property
    def lam(self) -> complex:
        """Location parameter ``i f1 (kappa - gamma)``."""
        return 1j * self.f1 * (self.kappa - self.gamma)

    @property
    def is_degenerate(self) -> bool:
        """Case ``f(1) = 0``: no stable-law semantics."""
        return self.f1 == 0


@dataclass(frozen=True)
class PitmanParams:
    """``f(1) = -c + i y``, location parameter ``lam`` and exponent ``alpha``."""

    c: float
    y: float
    lam: float
    alpha: float

    def __post_init__(self):
        for name in ("c", "y", "lam", "alpha"):
            object.__setattr__(self, name, as_real(getattr(self, name), name))
        if self.c <= 0:
            raise InputError(f"c must be > 0, got {self.c!r}")
        if self.alpha <= 0:
            raise InputError(f"alpha must be > 0, got {self.alpha!r}")


@dataclass(frozen=True)
class NormingConstants:
    n: int
    a_n: float
    b_n: complex


class Triviality(str, enum.Enum):
    TRIVIAL_ZERO = "trivial_zero"
    TRIVIAL_UNIMODULAR = "trivial_unimodular"
    NONTRIVIAL = "nontrivial"


def from_pitman(q: PitmanParams) -> StableParams:
    f1 = complex(-q.c, q.y)
    gamma = q.alpha - 1.0
    return StableParams(f1, gamma + (-1j * q.lam) / f1, gamma)


def to_pitman(p: StableParams, tol: float = 1e-12) -> PitmanParams:
    """Inverse of :func:`from_pitman`.

    Raises:
        InadmissibleParameters: ``|Im lam| > tol`` or ``Re f1 >= 0``.
    """
    if p.f1.real >= 0:
        raise InadmissibleParameters(f"Re f1 must be < 0 (c > 0), got f1 = {p.f1!r}")
    lam = p.lam
    if abs(lam.imag) > tol:
        raise InadmissibleParameters(f"location parameter lam = {lam!r} is not real (tol {tol:g})")
    return PitmanParams(-p.f1.real, p.f1.imag, lam.real, p.alpha)


# -- evaluation -------------------------------------------------------------

def _positive(t, name="t") -> float:
    t = as_real(t, name)
    if t <= 0:
        raise InputError(f"{name} must be > 0, got {t!r}")
    return t


def log_cf(p: StableParams, t) -> complex:
    """``f(t) = log phi(t)`` for ``t > 0``."""
    t = _positive(t)
    if t == 1.0:
        return p.f1
    return p.f1 * t * (1.0 + p.kappa * h_gamma(p.gamma, math.log(t)))


def cf(p: StableParams, t) -> complex:
    """``phi(t)`` on the whole line, with ``phi(-t) = conj(phi(t))``."""
    t = as_real(t, "t")
    if t == 0.0:
        return 1 + 0j
    f = log_cf(p, abs(t))
    try:
        v = cmath.exp(f)
    except OverflowError:
        # |phi| <= 1 for a genuine law, so this only happens far outside admissibility
        raise InadmissibleParameters(f"|phi({t!r})| = exp({f.real:.4g}) overflows; not a characteristic function")
    return v if t > 0 else v.conjugate()


def _b_n(p: StableParams, n: int) -> complex:
    if n == 1:
        return 0j
    L = math.log(n)
    g = p.gamma
    if abs(g) >= EPS_SWITCH:
        n_minus_nk = -n * math.expm1((p.k - 1.0) * L)
        return -1j * p.f1 * p.B * n_minus_nk
    # (n - n**k)/gamma = n/(1+gamma) * (exp(g' L) - 1)/g',  g' = -gamma/(1+gamma)
    return p.lam * (n / (1.0 + g)) * h_gamma(-g / (1.0 + g), L)


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    return int(n)


def norming(p: StableParams, n) -> NormingConstants:
    n = _check_n(n)
    return NormingConstants(n, float(n) ** p.k, _b_n(p, n))


def gamma_pitman(p: StableParams, n) -> complex:
    """``b_n / n``; tends to ``lam log n`` as ``gamma -> 0``."""
    c = norming(p, n)
    return c.b_n / c.n


# -- extended precision -------------------------------------------------------

def _mp_parts(p: StableParams):
    return mpmath.mpc(p.f1), mpmath.mpc(p.kappa), mpmath.mpf(p.gamma)


def _mp_log_cf(f1, kappa, gamma, t):
    L = mpmath.log(t)
    ratio = L if gamma == 0 else mpmath.expm1(gamma * L) / gamma
    return f1 * t * (1 + kappa * ratio)


def _mp_norming(f1, kappa, gamma, n):
    k = 1 / (gamma + 1)
    a_n = mpmath.mpf(n) ** k
    if n == 1:
        return a_n, mpmath.mpc(0)
    lam = 1j * f1 * (kappa - gamma)
    L = mpmath.log(n)
    if gamma == 0:
        return a_n, lam * n * L
    # -i f1 B (n - n**k) = lam (n - n**k)/gamma, with n - n**k by expm1 so tiny gamma keeps its digits
    return a_n, lam * (-n * mpmath.expm1(-gamma / (1 + gamma) * L)) / gamma


def chfe_residual(p: StableParams, n, t, dps: int | None = RESIDUAL_DPS) -> complex:
    """Log-domain residual ``n f(t) - f(a_n t) - i b_n t``.

    With ``dps=None`` everything is evaluated in double precision, in which
    case the residual carries rounding of order ``1e-16 * |b_n t|``.
    """
    n = _check_n(n)
    t = _positive(t)
    if dps is None:
        c = norming(p, n)
        return n * log_cf(p, t) - log_cf(p, c.a_n * t) - 1j * c.b_n * t
    with mpmath.workdps(dps):
        f1, kappa, gamma = _mp_parts(p)
        tt = mpmath.mpf(t)
        a_n, b_n = _mp_norming(f1, kappa, gamma, n)
        r = n * _mp_log_cf(f1, kappa, gamma, tt) - _mp_log_cf(f1, kappa, gamma, a_n * tt) - 1j * b_n * tt
        return complex(r)


def chfe_exp_residual(p: StableParams, n, t, dps: int = RESIDUAL_DPS) -> float:
    """Exponential-domain residual ``|phi(t)**n - phi(a_n t) exp(i b_n t)|``.

    Branch free, but weaker than :func:`chfe_residual`: the absolute error
    scales with ``|phi(t)|**n`` and the result saturates to ``inf`` when that
    exceeds the double range.
    """
    n = _check_n(n)
    t = _positive(t)
    with mpmath.workdps(dps):
        f1, kappa, gamma = _mp_parts(p)
        tt = mpmath.mpf(t)
        a_n, b_n = _mp_norming(f1, kappa, gamma, n)
        lhs = mpmath.exp(n * _mp_log_cf(f1, kappa, gamma, tt))
        rhs = mpmath.exp(_mp_log_cf(f1, kappa, gamma, a_n * tt) + 1j * b_n * tt)
        return float(abs(lhs - rhs))


# -- norming sequences (discrete Cauchy exponential equation) ---------------

def _sequence(a: Sequence[float]) -> np.ndarray:
    arr = np.asarray([as_real(v, f"a[{i + 1}]") for i, v in enumerate(a)], dtype=float)
    if arr.size < 3:
        raise InputError(f"need a_1..a_N with N >= 3, got N = {arr.size}")
    if np.any(arr <= 0):
        raise InputError("norming constants must be > 0")
    return arr


def multiplicativity_defect(a: Sequence[float]) -> float:
    """``max |a_mn - a_m a_n| / a_mn`` over ``2 <= m <= n``, ``mn <= N``."""
    arr = _sequence(a)
    N = arr.size
    worst = 0.0
    for m in range(2, N + 1):
        for n in range(m, N // m + 1):
            amn = arr[m * n - 1]
            worst = max(worst, abs(amn - arr[m - 1] * arr[n - 1]) / amn)
    return float(worst)


def identify_exponent(a: Sequence[float], mult_tol: float = MULT_TOL, k_tol: float = K_TOL) -> float:
    """Exponent ``k`` of a norming sequence ``a_n = n**k`` (``a[0]`` is ``a_1``).

    ``k`` is the least-squares slope through the origin of ``log a_n``
    against ``log n``.

    Raises:
        InputError: fewer than 3 terms, non-positive terms or ``a_1 != 1``.
        NotANormingSequence: ``a_mn != a_m a_n`` beyond ``mult_tol``.
        DegenerateExponent: ``|k| < k_tol``.
    """
    arr = _sequence(a)
    if abs(arr[0] - 1.0) > mult_tol:
        raise InputError(f"a_1 must equal 1, got {arr[0]!r}")
    defect = multiplicativity_defect(arr)
    if defect > mult_tol:
        raise NotANormingSequence(f"a_mn != a_m a_n: relative defect {defect:.3g} > {mult_tol:g}")
    logn = np.log(np.arange(2, arr.size + 1))
    k = float(np.dot(logn, np.log(arr[1:])) / np.dot(logn, logn))
    if abs(k) < k_tol:
        raise DegenerateExponent(f"k = {k:.3g}: a_n == 1 gives only trivial solutions")
    return k


# -- triviality ---------------------------------------------------------------

def modulus_scale_invariance(p: StableParams, c, grid: Iterable[float], tol: float = 1e-9) -> bool:
    """Whether ``||phi(c t)| - |phi(t)|| <= tol`` at every grid point."""
    c = _positive(c, "c")
    pts = [_positive(t, "grid point") for t in grid]
    if not pts:
        raise InputError("grid must be non-empty")
    worst = max(abs(math.exp(log_cf(p, c * t).real) - math.exp(log_cf(p, t).real)) for t in pts)
    return worst <= tol


def classify_modulus_samples(moduli: Iterable[float], tol: float = 1e-12) -> Triviality:
    """Classify sampled values of ``|phi|``."""
    m = np.asarray(list(moduli), dtype=float)
    if m.size == 0:
        raise InputError("no samples")
    if np.all(np.abs(m) <= tol):
        return Triviality.TRIVIAL_ZERO
    if np.all(np.abs(m - 1.0) <= tol):
        return Triviality.TRIVIAL_UNIMODULAR
    return Triviality.NONTRIVIAL


def classify_triviality(p: StableParams, grid: Iterable[float] | None = None,
                        tol: float = 1e-12) -> Triviality:
    """Probe ``|phi|`` on a grid (default 60 points in [0.05, 20]).

    ``trivial_zero`` cannot occur for the closed-form family since
    ``|phi| = exp(Re f) > 0``; it is reachable through
    :func:`classify_modulus_samples` only.  ``f1 = 0`` reports as unimodular.
    """
    pts = np.geomspace(0.05, 20.0, 60) if grid is None else list(grid)
    return classify_modulus_samples((math.exp(log_cf(p, t).real) for t in pts), tol)
