"""Stable-law characteristic functions, Goldie kernels and Beurling limits.

The submodules are usable on their own:

- :mod:`goldie_lab.goldie`: the Goldie equation, its exponential solutions and fitting
- :mod:`goldie_lab.stable`: stable laws, norming constants and the characteristic functional equation
- :mod:`goldie_lab.reduction`: the map from stable parameters to a Goldie system and back
- :mod:`goldie_lab.beurling`: Beurling kernels, self-neglecting limits, circle groups
- :mod:`goldie_lab.quadrature`: damped oscillatory Gamma integrals and their tangent ratio
"""

from . import accel, beurling, goldie, quadrature, reduction, stable
from .beurling import (CircleRho, GeometricSchedule, LimitEstimate, beurling_kernel, estimate_eta,
                       homomorphism_residual, is_self_neglecting)
from .errors import (CarrierError, ConvergenceError, DegeneracyError, DegenerateExponent,
                     EquationViolation, GoldieLabError, IllPosedSample, InadmissibleParameters,
                     InputError, NoReconstruction, NotANormingSequence, TrivialSolution)
from .fileio import load_params, params_to_json, parse_params
from .goldie import GoldieFit, GoldieParams, fit_goldie, gfe_residual, kappa_eval
from .quadrature import abel_integral_closed, abel_integral_quad, abel_ratio, gamma_real
from .reduction import Case, ReducedSystem, reconstruct, reduce
from .stable import (PitmanParams, StableParams, cf, chfe_residual, from_pitman, identify_exponent,
                     log_cf, norming, to_pitman)

__all__ = [
    "accel",
    "beurling",
    "goldie",
    "quadrature",
    "reduction",
    "stable",
    "abel_integral_closed",
    "abel_integral_quad",
    "abel_ratio",
    "beurling_kernel",
    "CarrierError",
    "Case",
    "cf",
    "chfe_residual",
    "CircleRho",
    "ConvergenceError",
    "DegeneracyError",
    "DegenerateExponent",
    "EquationViolation",
    "estimate_eta",
    "fit_goldie",
    "from_pitman",
    "gamma_real",
    "GeometricSchedule",
    "gfe_residual",
    "GoldieFit",
    "GoldieLabError",
    "GoldieParams",
    "homomorphism_residual",
    "identify_exponent",
    "IllPosedSample",
    "InadmissibleParameters",
    "InputError",
    "is_self_neglecting",
    "kappa_eval",
    "LimitEstimate",
    "load_params",
    "log_cf",
    "NoReconstruction",
    "norming",
    "NotANormingSequence",
    "params_to_json",
    "parse_params",
    "PitmanParams",
    "reconstruct",
    "reduce",
    "ReducedSystem",
    "StableParams",
    "to_pitman",
    "TrivialSolution",
]

__version__ = "0.1.0"
