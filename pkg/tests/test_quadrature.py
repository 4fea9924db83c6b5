import math

import mpmath
import pytest

from hypratio.continuation import Bank
from hypratio.errors import ConvergenceError, ParameterError
from hypratio.quadrature import DOUBLE_EXPONENTIAL, GAUSS_JACOBI, Density, QuadratureConfig, cauchy_transform
from hypratio.ratio_theory import RealPolynomial
from hypratio.representation import Weight, build_representation, cauchy_integral
from hypratio.special_core import Params, Precision, Shift

PREC = Precision()


def beta_density(p, q):
    ctx = PREC.ctx
    return Density(lambda t, s: ctx.power(t, p) * ctx.power(s, q), PREC, alpha=p, beta=q)


def beta_closed_form(p, q, z, power=1):
    with mpmath.workdps(30):
        if isinstance(z, tuple):
            x, bank = z
            z = mpmath.mpc(x, 1e-40 if bank is Bank.UPPER else -1e-40)
        return complex(mpmath.beta(p + 1, q + 1) * mpmath.hyp2f1(power, p + 1, p + q + 2, z))


POINTS = [-5.0, -0.5, 0.3, 0.97 + 0.0j, 0.5 + 0.5j, 3 - 2j, 1.2 + 1e-3j, 40j]


@pytest.mark.parametrize("p, q", [(0.0, 0.0), (-0.5, 0.3), (1.7, -0.6), (2.0, 3.5)])
@pytest.mark.parametrize("power", [1, 2])
def test_beta_kernel_off_the_cut(p, q, power):
    h = beta_density(p, q)
    for z in POINTS:
        value = cauchy_transform(h, z, power=power).value
        exact = beta_closed_form(p, q, z, power)
        assert abs(value - exact) <= 1e-9 * max(1, abs(exact)), z


@pytest.mark.parametrize("bank", [Bank.UPPER, Bank.LOWER])
def test_beta_kernel_on_the_banks(bank):
    h = beta_density(-0.3, 0.4)
    for x in (1.05, 2.0, 9.0):
        value = cauchy_transform(h, x, bank).value
        exact = beta_closed_form(-0.3, 0.4, (x, bank))
        assert abs(value - exact) <= 1e-9 * abs(exact)


def test_log_endpoint_density():
    # t^-1 / log(t)^2 integrates to 1 over (0, 1/e]; the map has to reach far into the tail
    ctx = PREC.ctx
    h = Density(lambda t, s: 1 / (t * ctx.log(t / ctx.e) ** 2), PREC, alpha=-1.0, beta=0.0)
    assert h.log_ends
    value = cauchy_transform(h, 0.0).value
    assert value == pytest.approx(1.0, abs=1e-9)


def test_schemes_agree_on_the_first_example():
    params, shift = Params(0.5, 0.7, 1.0), Shift(1, 1, 1)
    rep = build_representation(params, shift, "pole-free")
    de = QuadratureConfig(scheme=DOUBLE_EXPONENTIAL)
    gj = QuadratureConfig(scheme=GAUSS_JACOBI)
    for z in (-1.0, 0.4 + 0.3j, -7 + 2j):
        a = cauchy_integral(rep.weight, rep.T, z, de, params=params, shift=shift)
        b = cauchy_integral(rep.weight, rep.T, z, gj, params=params, shift=shift)
        assert abs(a - b) <= 1e-9 * abs(a)


def test_zero_weight_integrates_to_zero():
    w = Weight(RealPolynomial(()), 0.0, 0.0)
    assert cauchy_integral(w, RealPolynomial.one(), -1.0, params=Params(0.5, 0.7, 1.0), shift=Shift()) == 0


def test_failures_are_reported():
    with pytest.raises(ConvergenceError) as info:
        cauchy_transform(beta_density(-0.5, -0.5), 0.3, config=QuadratureConfig(max_levels=2))
    assert info.value.gap > 0
    with pytest.raises(ParameterError):
        cauchy_transform(beta_density(0, 0), 2.0)
    with pytest.raises(ParameterError):
        cauchy_transform(beta_density(0, 0), 0.5, power=3)
    with pytest.raises(ParameterError):
        cauchy_transform(beta_density(0, 0), 2.0, Bank.UPPER, QuadratureConfig(scheme=GAUSS_JACOBI))


def test_config_validation():
    with pytest.raises(ParameterError):
        QuadratureConfig(abs_tol=0)
    with pytest.raises(ParameterError):
        QuadratureConfig(max_levels=0)
    with pytest.raises(ParameterError):
        QuadratureConfig(scheme="simpson")


def test_result_is_deterministic():
    h = beta_density(0.2, 0.7)
    first = cauchy_transform(h, 0.3 + 0.4j)
    again = cauchy_transform(beta_density(0.2, 0.7), 0.3 + 0.4j)
    assert first == again
    assert first.level >= 3 and first.nodes > 0 and math.isfinite(first.gap)
