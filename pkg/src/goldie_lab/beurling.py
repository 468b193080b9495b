"""Beurling kernels, self-neglecting limits and the circle groups.

Limits as ``x -> infinity`` are estimated along a geometric schedule
``x_j = 2**j`` (``j = 10..40`` by default).  Three estimators run side by
side on the raw terms: the raw values, Aitken's delta-squared (suited to
corrections geometric in ``j``, i.e. powers of ``1/x``) and polynomial
extrapolation in ``1/log x`` (suited to logarithmic corrections).  An
estimator has converged once its last three values agree within ``tol``;
the first one to do so wins, in that order.  This is a finite-range
surrogate for a limit: a non-converged verdict is conclusive only on the
probed range.

The circle operation ``a o b = a + b + rho a b`` makes
``C_rho = {x : 1 + rho x != 0}`` a group, and ``eta_rho(x) = 1 + rho x`` is
an isomorphism onto the non-zero complex numbers under multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ._numerics import as_complex, as_real
from .accel import aitken, extrapolate_to_zero
from .errors import CarrierError, InputError
from .goldie import GoldieFit, fit_goldie
from .reduction import reduce
from .stable import StableParams

__all__ = [
    "CircleRho",
    "GeometricSchedule",
    "LimitEstimate",
    "DEFAULT_SCHEDULE",
    "eta_rho",
    "bfe_residual",
    "circle_op",
    "circle_inverse",
    "homomorphism_residual",
    "estimate_limit",
    "estimate_eta",
    "is_self_neglecting",
    "beurling_kernel",
    "fit_kernel",
    "named_F",
    "named_phi",
]

LIMIT_TOL = 1e-8
_LOGPOLY_POINTS = 8


@dataclass(frozen=True)
class CircleRho:
    """The circle group with parameter ``rho``; ``rho = 0`` is ``(C, +)``."""

    rho: complex

    def __post_init__(self):
        object.__setattr__(self, "rho", as_complex(self.rho, "rho"))

    def contains(self, a) -> bool:
        a = as_complex(a, "a")
        return abs(1.0 + self.rho * a) > 1e-14 * max(1.0, abs(self.rho * a))


def eta_rho(rho, t) -> complex:
    return 1.0 + as_complex(rho, "rho") * as_complex(t, "t")


def bfe_residual(rho, u, v) -> complex:
    """``eta(u + v eta(u)) - eta(u) eta(v)`` for ``eta = eta_rho``."""
    eu = eta_rho(rho, u)
    return eta_rho(rho, as_complex(u, "u") + as_complex(v, "v") * eu) - eu * eta_rho(rho, v)


def _member(g: CircleRho, a, name) -> complex:
    a = as_complex(a, name)
    if not g.contains(a):
        raise CarrierError(f"{name} = {a!r} equals -1/rho for rho = {g.rho!r}")
    return a


def circle_op(g: CircleRho, a, b) -> complex:
    a = _member(g, a, "a")
    b = _member(g, b, "b")
    return a + eta_rho(g.rho, a) * b


def circle_inverse(g: CircleRho, a) -> complex:
    a = _member(g, a, "a")
    return -a / (1.0 + g.rho * a)


def homomorphism_residual(p: StableParams, s, t) -> complex:
    """``K(st) - K(s) o_rho K(t)`` with ``rho = gamma/kappa``.

    At ``gamma = 0`` the additive residual ``K(st) - K(s) - K(t)`` is
    returned instead (``K = kappa log``).
    """
    s = as_real(s, "s")
    t = as_real(t, "t")
    if s <= 0 or t <= 0:
        raise InputError("s and t must be > 0")
    r = reduce(p)
    Ks, Kt, Kst = r.K(s), r.K(t), r.K(s * t)
    if p.gamma == 0.0:
        return Kst - Ks - Kt
    if p.kappa == 0:
        raise InputError("rho = gamma/kappa is undefined for kappa = 0")
    return Kst - circle_op(CircleRho(p.gamma / p.kappa), Ks, Kt)


# -- limits -----------------------------------------------------------------

@dataclass(frozen=True)
class GeometricSchedule:
    base: float = 2.0
    start: int = 10
    stop: int = 40

    def __post_init__(self):
        if self.base <= 1 or self.stop < self.start + 2:
            raise InputError("schedule needs base > 1 and at least three points")

    def points(self) -> list[float]:
        return [float(self.base) ** j for j in range(self.start, self.stop + 1)]


DEFAULT_SCHEDULE = GeometricSchedule()


@dataclass(frozen=True)
class LimitEstimate:
    t: float
    value: complex
    error_bound: float
    converged: bool
    evaluations: int
    method: str = "raw"


class _Counted:
    def __init__(self, fn):
        self.fn = fn
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        return self.fn(x)


def _settled(hist: list[complex], tol: float) -> bool:
    return len(hist) >= 3 and abs(hist[-1] - hist[-2]) <= tol and abs(hist[-2] - hist[-3]) <= tol


def estimate_limit(term: Callable[[float], complex], schedule: GeometricSchedule = DEFAULT_SCHEDULE,
                   tol: float = LIMIT_TOL, t: float = 0.0,
                   counters: Sequence[_Counted] = ()) -> LimitEstimate:
    """Estimate ``lim term(x)`` along ``schedule``; never raises on non-convergence."""
    xs: list[float] = []
    raw: list[complex] = []
    hist: dict[str, list[complex]] = {"raw": [], "aitken": [], "log-poly": []}

    def result(method, converged):
        h = hist[method]
        err = abs(h[-1] - h[-2]) if len(h) >= 2 else math.inf
        return LimitEstimate(t, complex(h[-1]), float(err), converged,
                             sum(c.calls for c in counters) or len(raw), method)

    for x in schedule.points():
        try:
            v = complex(term(x))
        except InputError:
            raise
        except (ArithmeticError, ValueError):
            break
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            break
        xs.append(x)
        raw.append(v)
        hist["raw"].append(v)
        if len(raw) >= 3:
            hist["aitken"].append(complex(aitken(raw[-3:])[-1]))
        if len(raw) >= 4:
            m = min(len(raw), _LOGPOLY_POINTS)
            u = [1.0 / math.log(xx) for xx in xs[-m:]]
            hist["log-poly"].append(extrapolate_to_zero(u, raw[-m:])[0])
        for method in ("raw", "aitken", "log-poly"):
            if _settled(hist[method], tol):
                return result(method, True)

    if not raw:
        return LimitEstimate(t, 0j, math.inf, False, sum(c.calls for c in counters), "raw")
    candidates = [m for m in hist if len(hist[m]) >= 2] or ["raw"]
    best = min(candidates, key=lambda m: abs(hist[m][-1] - hist[m][-2]) if len(hist[m]) >= 2 else math.inf)
    return result(best, False)


def estimate_eta(phi: Callable[[float], float], t, schedule: GeometricSchedule = DEFAULT_SCHEDULE,
                 tol: float = LIMIT_TOL) -> LimitEstimate:
    """Estimate ``eta(t) = lim phi(x + t phi(x))/phi(x)``."""
    t = as_real(t, "t")
    f = _Counted(phi)

    def term(x):
        px = f(x)
        if not px > 0:
            raise InputError(f"phi must be positive, phi({x!r}) = {px!r}")
        return f(x + t * px) / px

    return estimate_limit(term, schedule, tol, t, (f,))


def is_self_neglecting(phi: Callable[[float], float], t_grid: Iterable[float], tol: float = 1e-6,
                       schedule: GeometricSchedule = DEFAULT_SCHEDULE) -> bool:
    """Finite-range test of ``phi(x + t phi(x))/phi(x) -> 1`` and ``phi(x) = o(x)``.

    A ``False`` is conclusive on the probed range; ``True`` is evidence only.
    """
    grid = [as_real(t, "t") for t in t_grid]
    if not grid:
        raise InputError("t_grid must be non-empty")
    for t in grid:
        est = estimate_eta(phi, t, schedule, tol)
        if not est.converged or abs(est.value - 1.0) > tol:
            return False
    order = estimate_limit(lambda x: phi(x) / x, schedule, tol)
    return order.converged and abs(order.value) <= tol


def beurling_kernel(F: Callable[[float], float], phi: Callable[[float], float], t,
                    schedule: GeometricSchedule = DEFAULT_SCHEDULE, tol: float = LIMIT_TOL) -> LimitEstimate:
    """Estimate ``K_F(t) = lim F(x + t phi(x)) - F(x)``."""
    t = as_real(t, "t")
    cF = _Counted(F)
    cphi = _Counted(phi)
    return estimate_limit(lambda x: cF(x + t * cphi(x)) - cF(x), schedule, tol, t, (cF, cphi))


def fit_kernel(estimates: Sequence[LimitEstimate]) -> GoldieFit:
    """Fit a Goldie kernel to converged estimates on a uniform ``t`` grid.

    ``max_residual`` of the result reports how far the estimates are from
    the exponential family; kernels of self-equivarying ``phi`` need not
    belong to it.
    """
    est = list(estimates)
    if len(est) < 3:
        raise InputError("need at least three estimates")
    bad = [e.t for e in est if not e.converged]
    if bad:
        raise InputError(f"unconverged estimates at t = {bad}")
    return fit_goldie([(e.t, e.value) for e in est])


# -- named functions for the CLI -----------------------------------------------

def _split(token: str) -> tuple[str, float | None]:
    name, _, arg = token.partition(":")
    if not arg:
        return name, None
    try:
        return name, float(arg)
    except ValueError:
        raise InputError(f"bad numeric argument in {token!r}") from None


def named_F(token: str) -> Callable[[float], float]:
    """``linear:c``, ``log`` or ``power:p``."""
    name, arg = _split(token)
    if name == "linear" and arg is not None:
        return lambda x: arg * x
    if name == "log" and arg is None:
        return math.log
    if name == "power" and arg is not None:
        return lambda x: x ** arg
    raise InputError(f"unknown F {token!r}; choose linear:c, log or power:p")


def named_phi(token: str) -> Callable[[float], float]:
    """``const:c``, ``identity``, ``sqrt``, ``reciprocal`` or ``x-over-log``."""
    name, arg = _split(token)
    if name == "const" and arg is not None:
        if arg <= 0:
            raise InputError("const:c needs c > 0")
        return lambda x: arg
    table = {
        "identity": lambda x: x,
        "sqrt": math.sqrt,
        "reciprocal": lambda x: 1.0 / x,
        "x-over-log": lambda x: x / math.log(x),
    }
    if arg is None and name in table:
        return table[name]
    raise InputError(f"unknown phi {token!r}; choose const:c, identity, sqrt, reciprocal or x-over-log")
