"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 equation violated, 4 degenerate
input.  Grid outputs are JSON lines, scalar reports a single JSON object.

If ``GOLDIE_LAB_PRECISION`` is set to a float in (0, 1) it replaces the
default of every ``--tol`` flag; an explicit ``--tol`` still wins.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path
from typing import Sequence

from . import beurling, goldie, quadrature, reduction, stable
from .errors import DegeneracyError, EquationViolation, GoldieLabError, InputError
from .fileio import load_kernel_samples, load_params, load_sequence, params_to_json

ENV_PRECISION = "GOLDIE_LAB_PRECISION"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3
EXIT_DEGENERATE = 4

DEFAULT_TOLS = {
    "chfe-check": 1e-9,
    "identify": stable.MULT_TOL,
    "kernel": beurling.LIMIT_TOL,
    "appendix": 1e-10,
    "goldie-fit": goldie.FIT_TOL,
}


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _float_list(text: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not vals or not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"expected finite numbers, got {text!r}")
    return vals


def _env_tol() -> float | None:
    raw = os.environ.get(ENV_PRECISION)
    if raw is None or raw == "":
        return None
    try:
        v = float(raw)
    except ValueError:
        raise InputError(f"{ENV_PRECISION}={raw!r} is not a number") from None
    if not (0.0 < v < 1.0):
        raise InputError(f"{ENV_PRECISION}={raw!r} must lie in (0, 1)")
    return v


def _tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = _env_tol()
    return env if env is not None else DEFAULT_TOLS[args.command]


# -- commands ---------------------------------------------------------------

def cmd_eval(args, out) -> int:
    p = load_params(args.params)
    for t in args.t:
        f = 0j if t == 0 else stable.log_cf(p, abs(t))
        if t < 0:
            f = f.conjugate()
        _emit({"t": t, "f": _pair(f), "phi": _pair(stable.cf(p, t))}, out)
    return EXIT_OK


def cmd_chfe_check(args, out) -> int:
    p = load_params(args.params)
    if args.n_max < 1:
        raise InputError("--n-max must be >= 1")
    tol = _tol(args)
    worst, where = -1.0, None
    for n in range(1, args.n_max + 1):
        for t in args.t_grid:
            if t <= 0:
                raise InputError(f"--t-grid values must be > 0, got {t}")
            r = abs(stable.chfe_residual(p, n, t, dps=args.dps))
            if r > worst:
                worst, where = r, {"n": n, "t": t}
    warnings = []
    lam = p.lam
    if abs(lam.imag) > 1e-12:
        warnings.append(f"b_n complex: Im lambda = {lam.imag:.6g}; the equation holds but the law is inadmissible")
    passed = worst < tol
    _emit({"max_residual": worst, "argmax": where, "pass": passed, "tol": tol,
           "warnings": warnings, "params": params_to_json(p)}, out)
    return EXIT_OK if passed else EXIT_VIOLATION


def cmd_identify(args, out) -> int:
    a = load_sequence(args.samples)
    tol = _tol(args)
    k = stable.identify_exponent(a, mult_tol=tol, k_tol=args.k_tol)
    _emit({"k": k, "mult_residual": stable.multiplicativity_defect(a)}, out)
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    p = load_params(args.params)
    r = reduction.reduce(p)
    obj = {"case": r.case.value, "kappa_K": _pair(r.kappa_K), "gamma": r.gamma,
           "G_exponent": r.gamma, "h_tilde_const": _pair(r.h_tilde_const)}
    if r.case is reduction.Case.CASE2:
        obj["params"] = params_to_json(reduction.reconstruct(r, p.f1))
    _emit(obj, out)
    return EXIT_OK


def cmd_goldie_fit(args, out) -> int:
    samples = load_kernel_samples(args.samples)
    fit = goldie.fit_goldie(samples, fit_tol=_tol(args))
    _emit({"kappa0": _pair(fit.params.kappa0), "gamma0": _pair(fit.params.gamma0),
           "max_residual": fit.max_residual, "step": fit.step}, out)
    return EXIT_OK


def cmd_kernel(args, out) -> int:
    F = beurling.named_F(args.F)
    phi = beurling.named_phi(args.phi)
    tol = _tol(args)
    for t in args.t:
        est = beurling.beurling_kernel(F, phi, t, tol=tol)
        _emit({"t": est.t, "value": _pair(est.value), "error_bound": est.error_bound,
               "converged": est.converged, "evaluations": est.evaluations, "method": est.method}, out)
    return EXIT_OK


def cmd_appendix(args, out) -> int:
    tol = _tol(args)
    if args.delta is not None:
        closed = quadrature.abel_integral_closed(args.k, args.delta)
        q = quadrature.abel_integral_quad(args.k, args.delta, tol)
        _emit({"k": args.k, "delta": args.delta, "closed": _pair(closed), "quad": _pair(q.value),
               "abs_err": q.abs_err, "evaluations": q.evaluations,
               "difference": abs(q.value - closed)}, out)
        return EXIT_OK
    r = quadrature.abel_ratio(args.k, args.method, tol)
    _emit({"k": r.k, "method": r.method, "ratio": r.ratio, "abs_err": r.abs_err,
           "reference": r.reference, "rel_err": r.rel_err}, out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

class _HelpFormatter(argparse.ArgumentDefaultsHelpFormatter):
    """Show defaults, except for flags whose unset value is resolved later."""

    def _get_help_string(self, action):
        if action.default is None:
            return action.help or ""
        return super()._get_help_string(action)


def _add_tol(sp, command):
    sp.add_argument("--tol", type=float, default=None,
                    help=f"tolerance (default {DEFAULT_TOLS[command]:g}, or ${ENV_PRECISION})")


class _SubParser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("formatter_class", _HelpFormatter)
        super().__init__(*args, **kwargs)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="goldie-lab",
                                 description="Stable laws, Goldie kernels and Beurling limits.",
                                 epilog=f"{ENV_PRECISION}, if set to a float in (0, 1), replaces every --tol default.",
                                 formatter_class=_HelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_SubParser)

    sp = sub.add_parser("eval", help="evaluate f = log phi and phi on a t grid (JSON lines)")
    sp.add_argument("params", type=Path)
    sp.add_argument("--t", type=_float_list, default=[1.0], help="comma-separated t values")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("chfe-check", help="max |n f(t) - f(a_n t) - i b_n t| over a grid")
    sp.add_argument("params", type=Path)
    sp.add_argument("--n-max", type=int, default=50, help="largest n checked")
    sp.add_argument("--t-grid", type=_float_list, default=[0.1, 0.5, 1.0, 2.0, 5.0, 10.0],
                    help="comma-separated t > 0")
    sp.add_argument("--dps", type=int, default=stable.RESIDUAL_DPS,
                    help="working decimal digits for the residual")
    _add_tol(sp, "chfe-check")
    sp.set_defaults(func=cmd_chfe_check)

    sp = sub.add_parser("identify", help="exponent k of a norming sequence (CSV n,a_n)")
    sp.add_argument("samples", type=Path)
    sp.add_argument("--k-tol", type=float, default=stable.K_TOL,
                    help="|k| below this is degenerate")
    _add_tol(sp, "identify")
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("reduce", help="reduced Goldie system (K, G, H~) of a parameter file")
    sp.add_argument("params", type=Path)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("goldie-fit", help="fit (kappa0, gamma0) to kernel samples (CSV x,re,im)")
    sp.add_argument("samples", type=Path)
    _add_tol(sp, "goldie-fit")
    sp.set_defaults(func=cmd_goldie_fit)

    sp = sub.add_parser("kernel", help="Beurling kernel lim F(x + t phi(x)) - F(x)")
    sp.add_argument("--F", required=True, help="linear:c | log | power:p")
    sp.add_argument("--phi", required=True, help="const:c | identity | sqrt | reciprocal | x-over-log")
    sp.add_argument("--t", type=_float_list, default=[1.0], help="comma-separated t values")
    _add_tol(sp, "kernel")
    sp.set_defaults(func=cmd_kernel)

    sp = sub.add_parser("appendix", help="cosine/sine Gamma-integral ratio tan(pi k/2)")
    sp.add_argument("--k", type=float, required=True)
    sp.add_argument("--method", choices=("closed", "quad", "extrapolated"), default="closed",
                    help="how the integrals are evaluated")
    sp.add_argument("--delta", type=float, default=None,
                    help="report both integrals at this damping instead of the ratio")
    _add_tol(sp, "appendix")
    sp.set_defaults(func=cmd_appendix)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EquationViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except DegeneracyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except GoldieLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
