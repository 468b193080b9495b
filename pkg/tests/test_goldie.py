import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ORACLE
from goldie_lab.errors import IllPosedSample, InputError, TrivialSolution
from goldie_lab.goldie import (GoldieParams, fit_goldie, gamma_aux_eval, gfe_mult_residual,
                               gfe_residual, h_gamma, kappa_eval, mult_aux, mult_kernel)

finite = st.floats(-2, 2, allow_nan=False)
cplx = st.builds(complex, finite, finite)
small_gamma = st.builds(complex, st.floats(-0.5, 0.5), st.floats(-2, 2))
params = st.builds(GoldieParams, cplx, small_gamma)
coord = st.floats(-10, 10)


def test_h_gamma_additive_limit():
    assert h_gamma(0, 3) == 3


def test_h_gamma_unit():
    assert h_gamma(1, 1) == pytest.approx(math.e - 1, rel=1e-15)


def test_h_gamma_near_zero_matches_oracle():
    assert abs(h_gamma(1e-9, 2) - ORACLE["h_gamma_1e-9_2"]) <= 1e-15 * 2


@pytest.mark.parametrize("x", [-10.0, -3.0, -0.1, 0.5, 2.0, 10.0])
def test_h_gamma_continuous_across_switch(x):
    below = h_gamma(1e-6 * (1 - 1e-9), x)
    above = h_gamma(1e-6 * (1 + 1e-9), x)
    assert abs(below - above) <= 1e-12 * abs(above) + 1e-15 * abs(x) ** 3


@given(st.floats(-1e-8, 1e-8), st.floats(-10, 10))
def test_h_gamma_series_near_zero(eps, x):
    assert abs(h_gamma(eps, x) - x - eps * x * x / 2) <= 1e-12 * abs(x)


def test_kappa_eval_zero_point():
    assert kappa_eval(GoldieParams(3 + 4j, 2 - 1j), 0) == 0


def test_kappa_eval_oracle():
    assert kappa_eval(GoldieParams(2, 0.5), 2) == pytest.approx(ORACLE["kappa_2_05_2"], rel=1e-14)


def test_kappa_eval_trivial():
    assert kappa_eval(GoldieParams(0, 1.5), 7.0) == 0


@pytest.mark.parametrize("g0,x,expected", [(0, 5, 1.0), (1, 1, math.e), (-0.5, 2, math.exp(-1))])
def test_gamma_aux_examples(g0, x, expected):
    assert gamma_aux_eval(GoldieParams(1, g0), x) == pytest.approx(expected, rel=1e-15)


def test_gamma_aux_at_origin():
    assert gamma_aux_eval(GoldieParams(1, 3 - 2j), 0) == 1


@pytest.mark.parametrize("p,x,y", [
    (GoldieParams(1 + 1j, 0.3), 0, 0),
    (GoldieParams(2, 0.5), 1, 2),
    (GoldieParams(1 + 1j, -1), 3, -2),
])
def test_gfe_residual_examples(p, x, y):
    assert abs(gfe_residual(p, x, y)) < 1e-12


def test_gfe_mult_identity_point():
    assert gfe_mult_residual(GoldieParams(2 - 1j, 0.7j), 1, 1) == 0


def test_gfe_mult_square_root_kernel():
    p = GoldieParams(0.5, 0.5)
    assert mult_kernel(p, 36) == pytest.approx(5)
    assert mult_kernel(p, 4) + mult_aux(p, 4) * mult_kernel(p, 9) == pytest.approx(5)
    assert abs(gfe_mult_residual(p, 4, 9)) < 1e-14


def test_gfe_mult_logarithm():
    assert abs(gfe_mult_residual(GoldieParams(1, 0), math.e, math.e)) < 1e-15


@pytest.mark.parametrize("s,t", [(0, 1), (1, -2), (-1, -1)])
def test_gfe_mult_rejects_nonpositive(s, t):
    with pytest.raises(InputError):
        gfe_mult_residual(GoldieParams(1, 1), s, t)


@settings(max_examples=1000, deadline=None)
@given(params, coord, coord)
def test_gfe_residual_vanishes(p, x, y):
    assert abs(gfe_residual(p, x, y)) < 1e-10


@settings(max_examples=500, deadline=None)
@given(st.builds(GoldieParams, cplx, st.builds(complex, finite, finite)), coord, coord)
def test_gfe_residual_small_relative_to_terms(p, x, y):
    # with Re gamma0 up to 2 the terms reach e**40; rounding is then relative to their size
    scale = max(1.0, abs(kappa_eval(p, x + y)), abs(kappa_eval(p, x)),
                abs(gamma_aux_eval(p, x) * kappa_eval(p, y)))
    assert abs(gfe_residual(p, x, y)) < 1e-13 * scale


@settings(max_examples=300, deadline=None)
@given(params, st.floats(0.1, 100), st.floats(0.1, 100))
def test_gfe_mult_residual_vanishes(p, s, t):
    assert abs(gfe_mult_residual(p, s, t)) < 1e-10


@settings(max_examples=300, deadline=None)
@given(params, st.floats(-4, 4), st.floats(-4, 4))
def test_additive_and_multiplicative_forms_agree(p, x, y):
    assert abs(gfe_mult_residual(p, math.exp(x), math.exp(y)) - gfe_residual(p, x, y)) < 1e-12


def test_fit_additive():
    fit = fit_goldie([(1, 3), (2, 6), (3, 9)])
    assert fit.params.gamma0 == 0
    assert fit.params.kappa0 == pytest.approx(3)
    assert fit.max_residual < 1e-14


def test_fit_exponential():
    p = GoldieParams(2, 0.5)
    fit = fit_goldie([(x, kappa_eval(p, x)) for x in (1, 2, 3)])
    assert abs(fit.params.kappa0 - 2) < 1e-10
    assert abs(fit.params.gamma0 - 0.5) < 1e-10


def test_fit_trivial():
    with pytest.raises(TrivialSolution):
        fit_goldie([(1, 0), (2, 0), (3, 0)])


def test_fit_ill_posed():
    with pytest.raises(IllPosedSample):
        fit_goldie([(1, 0), (2, 1), (3, 2)])


@pytest.mark.parametrize("samples", [
    [(1, 1), (2, 2)],
    [(1, 1), (2, 2), (4, 4)],
    [(0, 0), (1, 1), (2, 2)],
])
def test_fit_rejects_bad_grids(samples):
    with pytest.raises(InputError):
        fit_goldie(samples)


@settings(max_examples=300, deadline=None)
@given(st.builds(complex, st.floats(0.2, 3), st.floats(-3, 3)),
       st.builds(complex, st.floats(-2, 2), st.floats(-2, 2)).filter(lambda g: abs(g) <= 2),
       st.floats(0.05, 1))
def test_fit_round_trip(k0, g0, h):
    # the principal log recovers gamma0 only when |Im gamma0 h| < pi, which |gamma0| <= 2, h <= 1 ensures
    p = GoldieParams(k0, g0)
    fit = fit_goldie([(j * h, kappa_eval(p, j * h)) for j in range(1, 6)])
    q = fit.params
    # below the snapping tolerance the additive kernel is returned, still within 1e-8 of gamma0
    assert abs(q.gamma0 - g0) < 1e-8
    assert abs(q.kappa0 - k0) < 1e-8


def test_fit_reports_residual_for_non_family_samples():
    fit = fit_goldie([(t, math.log1p(t)) for t in (1, 2, 3, 4)])
    assert fit.max_residual > 1e-3


def test_params_reject_nonfinite():
    with pytest.raises(InputError):
        GoldieParams(float("nan"))
    with pytest.raises(InputError):
        GoldieParams(1, cmath.inf)
