"""Sequence acceleration: Aitken's delta-squared and polynomial extrapolation."""

from __future__ import annotations

from typing import Sequence

import numpy as np

__all__ = ["aitken", "iterated_aitken", "extrapolate_to_zero"]


def aitken(seq: Sequence[complex]) -> np.ndarray:
    """One Aitken delta-squared sweep; output is two entries shorter.

    Where the second difference vanishes to rounding the sequence has
    already settled and the original entry is kept.
    """
    s = np.asarray(seq, dtype=complex)
    if s.size < 3:
        return s[:0]
    d1 = s[2:] - s[1:-1]
    d2 = d1 - (s[1:-1] - s[:-2])
    scale = np.maximum(np.abs(s[2:]), np.abs(s[1:-1]))
    ok = np.abs(d2) > 64 * np.finfo(float).eps * np.maximum(scale, np.finfo(float).tiny)
    out = s[2:].copy()
    out[ok] = s[2:][ok] - d1[ok] ** 2 / d2[ok]
    return out


def iterated_aitken(seq: Sequence[complex], depth: int = 12) -> tuple[complex, float, int]:
    """Repeated Aitken sweeps on partial sums.

    Returns ``(estimate, error, level)``: the last entry of the level whose
    final two entries agree best, that disagreement as the error, and the
    level index (0 is the raw sequence).
    """
    level = np.asarray(seq, dtype=complex)
    if level.size == 0:
        raise ValueError("empty sequence")
    if level.size == 1:
        return complex(level[-1]), float("inf"), 0
    best = (complex(level[-1]), float(abs(level[-1] - level[-2])), 0)
    for lvl in range(1, depth + 1):
        level = aitken(level)
        if level.size < 2:
            break
        err = float(abs(level[-1] - level[-2]))
        if err < best[1]:
            best = (complex(level[-1]), err, lvl)
    return best


def _neville_at_zero(x: np.ndarray, p: np.ndarray) -> complex:
    p = p.copy()
    n = x.size
    for m in range(1, n):
        for i in range(n - m):
            j = i + m
            p[i] = (x[j] * p[i] - x[i] * p[i + 1]) / (x[j] - x[i])
    return complex(p[0])


def extrapolate_to_zero(h: Sequence[float], values: Sequence[complex]) -> tuple[complex, float]:
    """Polynomial extrapolation to ``h = 0`` by Neville's scheme.

    Returns the value of the interpolant through all points and, as an
    error estimate, its distance to the interpolant that omits the point
    farthest from zero.
    """
    x = np.asarray(h, dtype=float)
    p = np.asarray(values, dtype=complex)
    if x.size == 0:
        raise ValueError("no points")
    value = _neville_at_zero(x, p)
    if x.size == 1:
        return value, float("inf")
    keep = np.arange(x.size) != int(np.argmax(np.abs(x)))
    return value, float(abs(value - _neville_at_zero(x[keep], p[keep])))
