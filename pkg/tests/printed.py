"""Closed integral forms for particular ratios, written out term by term.

Each density is coded independently of the representation builder; only the
quadrature engine and ``|2F1(a, b; c; 1/t)|^2`` are shared.
"""

import math

from hypratio.continuation import cut_modulus_squared
from hypratio.quadrature import Density, cauchy_transform
from hypratio.special_core import Precision

PREC = Precision()
G = math.gamma


def _density(params, t_power, extra=None):
    a, b, c = params.as_tuple()
    ctx = PREC.ctx

    def fn(t, s):
        out = ctx.power(t, t_power) * ctx.power(s, c - a - b) / cut_modulus_squared(params, s / t, PREC)
        return out if extra is None else out * extra(t)

    # |F(x)|^2 behaves like x^(-2 min(a, b)) at infinity and like (x-1)^(2 min(c-a-b, 0)) at 1
    return Density(fn, PREC, alpha=t_power - 2 * min(a, b), beta=abs(c - a - b))


def _integral(params, z, t_power, extra=None, bank=None, power=1):
    return cauchy_transform(_density(params, t_power, extra), z, bank, power=power).value


def example1(params, z, bank=None):
    a, b, c = params.as_tuple()
    K = G(c) * G(c + 1) / (G(a + 1) * G(b + 1) * G(c - a) * G(c - b))
    return 1 / (1 - z) + z / (z - 1) * K * _integral(params, z, a + b, bank=bank)


def example2(params, z, bank=None):
    a, b, c = params.as_tuple()
    Q = (c - min(a, b) - 1) / (c - 1)
    K = G(c) * G(c - 1) / (G(a) * G(b) * G(c - a) * G(c - b))
    return Q + (1 - Q) / (1 - z) + z / (z - 1) * K * _integral(params, z, a + b - 1, bank=bank)


def _gauss_constant(params):
    a, b, c = params.as_tuple()
    K = G(c) * G(c + 1) / (G(a) * G(b + 1) * G(c - b) * G(c - a + 1))
    return c * max(b - a, 0.0) / (b * (c - a)), K


def example3(params, z, bank=None):
    """The pole-free Gauss ratio form."""
    a, b, c = params.as_tuple()
    const, K = _gauss_constant(params)
    return const + K * _integral(params, z, a + b - 1, bank=bank)


def example3_multiplier(params, z, beta1):
    a, b, c = params.as_tuple()
    const, K = _gauss_constant(params)
    pole = beta1 * (b * (c - a) - c * max(b - a, 0.0)) / (b * (c - a) * (beta1 - z))
    integral = _integral(params, z, a + b - 1, extra=lambda t: 1 - t * beta1)
    return const + pole + z / (z - beta1) * K * integral


def example3_residue(params, z, beta1, residue):
    a, b, c = params.as_tuple()
    const, K = _gauss_constant(params)
    return const + residue / (z - beta1) + K * _integral(params, z, a + b - 1)


def stieltjes_r001(params, z):
    a, b, c = params.as_tuple()
    K = G(c) * G(c + 1) / (G(a) * G(b) * G(c - a + 1) * G(c - b + 1))
    return c / (c - min(a, b)) - K * _integral(params, z, a + b - 1)
