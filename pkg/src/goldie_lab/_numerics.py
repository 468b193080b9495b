"""Small numerical helpers: complex expm1 and finiteness checks."""

from __future__ import annotations

import cmath
import math

from .errors import InputError

# Below this modulus of the rate, (e^{gx}-1)/g is taken from its Taylor series.
EPS_SWITCH = 1e-6


def as_complex(z, name: str = "value") -> complex:
    """Coerce to ``complex`` and reject NaN/inf components."""
    try:
        z = complex(z)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name} must be a number, got {z!r}") from exc
    if not cmath.isfinite(z):
        raise InputError(f"{name} must be finite, got {z!r}")
    return z


def as_real(x, name: str = "value") -> float:
    if isinstance(x, complex):
        if x.imag != 0:
            raise InputError(f"{name} must be real, got {x!r}")
        x = x.real
    try:
        x = float(x)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name} must be a real number, got {x!r}") from exc
    if not math.isfinite(x):
        raise InputError(f"{name} must be finite, got {x!r}")
    return x


def cexpm1(z: complex) -> complex:
    """``exp(z) - 1`` without cancellation for small ``|z|``."""
    a, b = z.real, z.imag
    if b == 0.0:
        return complex(math.expm1(a), 0.0)
    s = math.sin(0.5 * b)
    re = math.expm1(a) * math.cos(b) - 2.0 * s * s
    im = math.exp(a) * math.sin(b)
    return complex(re, im)


def expm1_ratio(rate: complex, x: float) -> complex:
    """``(exp(rate*x) - 1)/rate``, equal to ``x`` at ``rate == 0``.

    For ``|rate| < EPS_SWITCH`` the cubic Taylor polynomial is used; the
    extra ``|rate*x|`` guard keeps the truncation error negligible for
    large ``|x|``, where ``cexpm1`` is accurate anyway.
    """
    if abs(rate) < EPS_SWITCH and abs(rate * x) < 1e-3:
        return x + rate * x * x / 2.0 + rate * rate * x ** 3 / 6.0
    return cexpm1(rate * x) / rate
