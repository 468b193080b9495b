"""Parameter files (JSON) and sample tables (CSV).

A parameter file is a flat JSON object in one of two shapes::

    {"c": 1.0, "y": 0.0, "lambda": 1.0, "alpha": 0.5}            # Pitman form
    {"f1": [-1.0, 0.0], "kappa": [-0.5, 1.0], "gamma": -0.5}     # canonical form

Sample tables are CSV with a header row: ``x,re,im`` for complex kernel
samples or ``n,a_n`` for norming sequences.  The first column must be
strictly increasing.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

from .errors import InputError
from .stable import PitmanParams, StableParams, from_pitman

__all__ = [
    "PITMAN_KEYS",
    "CANONICAL_KEYS",
    "parse_params",
    "load_params",
    "params_to_json",
    "load_kernel_samples",
    "load_sequence",
]

PITMAN_KEYS = frozenset({"c", "y", "lambda", "alpha"})
CANONICAL_KEYS = frozenset({"f1", "kappa", "gamma"})


def _read(source) -> str:
    if isinstance(source, Path):
        return source.read_text()
    return str(source)


def _number(obj, field):
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise InputError(f"field {field!r}: expected a number, got {obj!r}")
    if not math.isfinite(obj):
        raise InputError(f"field {field!r}: must be finite")
    return float(obj)


def _pair(obj, field) -> complex:
    if not (isinstance(obj, list) and len(obj) == 2):
        raise InputError(f"field {field!r}: expected [re, im], got {obj!r}")
    return complex(_number(obj[0], f"{field}[0]"), _number(obj[1], f"{field}[1]"))


def parse_params(obj) -> StableParams:
    """Validate a decoded parameter object."""
    if not isinstance(obj, dict):
        raise InputError("parameters must be a JSON object")
    keys = set(obj)
    if keys == PITMAN_KEYS:
        q = PitmanParams(*(_number(obj[k], k) for k in ("c", "y", "lambda", "alpha")))
        return from_pitman(q)
    if keys == CANONICAL_KEYS:
        return StableParams(_pair(obj["f1"], "f1"), _pair(obj["kappa"], "kappa"),
                            _number(obj["gamma"], "gamma"))
    if keys & PITMAN_KEYS and keys & CANONICAL_KEYS:
        raise InputError(f"fields {sorted(keys)} mix the Pitman and canonical shapes")
    expected = PITMAN_KEYS if len(keys & PITMAN_KEYS) >= len(keys & CANONICAL_KEYS) else CANONICAL_KEYS
    missing = sorted(expected - keys)
    extra = sorted(keys - expected)
    detail = []
    if missing:
        detail.append(f"missing field(s) {missing}")
    if extra:
        detail.append(f"unexpected field(s) {extra}")
    raise InputError("; ".join(detail))


def load_params(source) -> StableParams:
    """Parse a parameter file from a :class:`~pathlib.Path` or a JSON string."""
    text = _read(source)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_params(obj)


def _pair_json(z: complex) -> list[float]:
    return [z.real, z.imag]


def params_to_json(p: StableParams) -> dict:
    """Canonical-form object accepted by :func:`parse_params`."""
    return {"f1": _pair_json(p.f1), "kappa": _pair_json(p.kappa), "gamma": p.gamma}


def _rows(text: str, columns: tuple[str, ...]) -> list[tuple[int, list[float]]]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise InputError("empty table") from None
    if tuple(header) != columns:
        raise InputError(f"line 1: header must be {','.join(columns)}, got {','.join(header)}")
    rows = []
    for raw in reader:
        line = reader.line_num
        if not raw or all(not c.strip() for c in raw):
            continue
        if len(raw) != len(columns) or any(not c.strip() for c in raw):
            raise InputError(f"line {line}: expected {len(columns)} fields, got {raw!r}")
        try:
            vals = [float(c) for c in raw]
        except ValueError:
            raise InputError(f"line {line}: non-numeric field in {raw!r}") from None
        if not all(math.isfinite(v) for v in vals):
            raise InputError(f"line {line}: non-finite field")
        if rows and vals[0] <= rows[-1][1][0]:
            raise InputError(f"line {line}: first column must be strictly increasing")
        rows.append((line, vals))
    if not rows:
        raise InputError("table has no data rows")
    return rows


def load_kernel_samples(source) -> list[tuple[float, complex]]:
    """``x,re,im`` table -> ``[(x, re + i im), ...]``."""
    return [(v[0], complex(v[1], v[2])) for _, v in _rows(_read(source), ("x", "re", "im"))]


def load_sequence(source) -> list[float]:
    """``n,a_n`` table with ``n = 1..N`` -> ``[a_1, ..., a_N]``."""
    rows = _rows(_read(source), ("n", "a_n"))
    for i, (line, (n, _)) in enumerate(rows, start=1):
        if n != i:
            raise InputError(f"line {line}: expected n = {i}, got {n:g}")
    return [v[1] for _, v in rows]
