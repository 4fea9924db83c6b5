"""Integral representations of ``R(z) = 2F1(a+n1, b+n2; c+m; z) / 2F1(a, b; c; z)``.

A representation has the shape::

    R(z) = Q(z) + sum_{k < N+d} g_k z^k / ((1-z)^M T(z))
                + z^(N+d) / ((z-1)^M T(z)) * int_0^1 h(t) dt / (1 - z t)

where ``Q`` is a real rational function, ``T`` a real monic polynomial whose
roots are poles of ``R``, ``g_k`` are Taylor coefficients of
``(1-z)^M T(z) (R(z) - Q(z))`` at the origin, and ``h`` is the boundary
imaginary part of ``R`` carried over to ``(0, 1)`` by ``x = 1/t``.

Three strategies fill in ``Q`` and ``T``:

* ``pole-free``: ``Q = 0`` and ``T = 1``; needs a base function without zeros.
* ``q-correction``: ``T = 1`` and ``Q`` holds the limit at infinity plus the
  principal parts at the poles.
* ``t-multiplier``: ``T`` vanishes at the poles and ``Q`` is the limit at
  infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .continuation import Bank, CutPlanePoint, as_point, cut_modulus_squared, hyp2f1
from .errors import DegenerateError, MultiplicityError, ParameterError, PoleError
from .quadrature import Density, QuadratureConfig, cauchy_transform
from .ratio_theory import (
    RealPolynomial,
    derive_indices,
    effective_weight,
    eta,
    infinity_constant,
    select_MN,
    zeta,
)
from .special_core import DEFAULT_PRECISION, Params, Precision, Shift, reciprocal_gamma, to_mp
from .zeros import locate_zeros, pole_free_condition

__all__ = [
    "RationalFunction",
    "Weight",
    "Representation",
    "POLE_FREE",
    "Q_CORRECTION",
    "T_MULTIPLIER",
    "ratio_direct",
    "ratio_taylor_coeffs",
    "ratio_derivatives_fdb",
    "schwarz_sum_numerator",
    "schwarz_reconstruct",
    "t_multiplier_laurent",
    "build_representation",
    "eval_representation",
    "eval_representation_detail",
    "cauchy_integral",
    "gauss_ratio_repr",
    "ratio_010",
    "product_r111_r001",
    "product_stieltjes2",
    "limit_constant_abc",
]

POLE_FREE = "pole-free"
Q_CORRECTION = "q-correction"
T_MULTIPLIER = "t-multiplier"
_ALIASES = {
    "pole-free": POLE_FREE,
    "polefree": POLE_FREE,
    "q": Q_CORRECTION,
    "q-correction": Q_CORRECTION,
    "t": T_MULTIPLIER,
    "t-multiplier": T_MULTIPLIER,
    "auto": "auto",
}

MAX_TAYLOR_ORDER = 64
MAX_FDB_ORDER = 12
NEAR_CUT = 1e-6
_COMMON_ROOT_TOL = 1e-10
_LOG_TOL = 1e-9


# --------------------------------------------------------------------------
# rational part


@dataclass(frozen=True)
class RationalFunction:
    """``numerator / denominator`` with real coefficients.

    ``poles`` optionally keeps the partial fraction data ``(beta, residue)``
    the function was assembled from, one entry per pole.
    """

    numerator: RealPolynomial
    denominator: RealPolynomial = RealPolynomial.one()
    poles: tuple = ()

    def __post_init__(self):
        if self.denominator.is_zero():
            raise ParameterError("denominator of a rational function must not vanish identically")
        if self.numerator.degree >= 1 and self.denominator.degree >= 1 and not self.numerator.is_zero():
            top = np.roots([float(c) for c in reversed(self.numerator.coeffs)])
            bottom = np.roots([float(c) for c in reversed(self.denominator.coeffs)])
            for p in top:
                if np.any(np.abs(bottom - p) <= _COMMON_ROOT_TOL * (1 + abs(p))):
                    raise ParameterError(f"numerator and denominator share the root {p}")

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        v = float(value)
        return cls(RealPolynomial((v,) if v else ()))

    @classmethod
    def from_partial_fractions(cls, constant, poles) -> "RationalFunction":
        """``constant + sum residue / (z - beta)``; non-real poles must come with their conjugates."""
        poles = tuple((complex(b), complex(r)) for b, r in poles)
        if not poles:
            return cls.constant(constant)
        den = np.poly([b for b, _ in poles])
        num = complex(constant) * den
        for i, (_, r) in enumerate(poles):
            rest = np.poly([b for j, (b, _) in enumerate(poles) if j != i]) if len(poles) > 1 else np.array([1.0])
            num = num + np.concatenate([np.zeros(len(den) - len(rest)), r * rest])
        scale = max(1.0, float(np.max(np.abs(num))))
        if np.max(np.abs(num.imag)) > 1e-8 * scale or np.max(np.abs(den.imag)) > 1e-8 * max(1.0, float(np.max(np.abs(den)))):
            raise ParameterError("partial fractions are not closed under conjugation")
        numerator = RealPolynomial(float(c) for c in num.real[::-1])
        numerator = RealPolynomial(_trim(numerator.coeffs))
        return cls(numerator, RealPolynomial(float(c) for c in den.real[::-1]), poles)

    def __call__(self, z):
        d = self.denominator(z)
        if d == 0:
            raise PoleError(f"Q has a pole at {z}", location=complex(z))
        return self.numerator(z) / d

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def taylor(self, n: int) -> list:
        """First ``n`` Taylor coefficients at the origin by series division."""
        num = self.numerator.taylor(n)
        den = self.denominator.taylor(n)
        if den[0] == 0:
            raise PoleError("Q has a pole at the origin", location=0j)
        out = []
        for k in range(n):
            acc = num[k] - sum(den[j] * out[k - j] for j in range(1, k + 1))
            out.append(acc / den[0])
        return out


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# --------------------------------------------------------------------------
# direct evaluation and Taylor data


def ratio_direct(params: Params, shift: Shift, pt, prec: Precision | None = None):
    """``2F1(shifted) / 2F1(base)`` evaluated directly (an mpmath number)."""
    prec = prec or DEFAULT_PRECISION
    pt = as_point(pt)
    ctx = prec.ctx
    den = hyp2f1(params, pt, prec)
    if abs(den) <= ctx.mpf(10) ** (-prec.working_digits):
        raise PoleError(f"the base function vanishes at z = {pt.z}", location=pt.z)
    return hyp2f1(params.shifted(shift), pt, prec) / den


def _gauss_coefficients(params: Params, order: int, prec: Precision) -> list:
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    out = [ctx.one]
    for k in range(order):
        out.append(out[-1] * (a + k) * (b + k) / ((c + k) * (k + 1)))
    return out


def ratio_taylor_coeffs(params: Params, shift: Shift, order: int, prec: Precision | None = None) -> list:
    """Taylor coefficients ``R^(j)(0) / j!`` for ``j <= order`` by power series division."""
    if not 0 <= order <= MAX_TAYLOR_ORDER:
        raise ParameterError(f"order must lie in [0, {MAX_TAYLOR_ORDER}]")
    prec = prec or DEFAULT_PRECISION
    top = _gauss_coefficients(params.shifted(shift), order, prec)
    bottom = _gauss_coefficients(params, order, prec)
    out = []
    for k in range(order + 1):
        out.append(top[k] - sum(bottom[j] * out[k - j] for j in range(1, k + 1)))
    return out


def _convolve(p, q, n):
    return [sum(p[i] * q[k - i] for i in range(k + 1) if i < len(p) and k - i < len(q)) for k in range(n)]


def ratio_derivatives_fdb(params: Params, shift: Shift, order: int, prec: Precision | None = None) -> list:
    """Derivatives ``R^(n)(0)`` for ``n <= order`` from the alternating quotient rule

    ``(u/v)^(n) = sum_k (-1)^k C(n+1, k+1) (u v^k)^(n) / v^(k+1)``

    with ``v(0) = 1``; the derivatives of the products come from the
    Leibniz rule over the Pochhammer coefficients of the two series.
    """
    if not 0 <= order <= MAX_FDB_ORDER:
        raise ParameterError(f"order must lie in [0, {MAX_FDB_ORDER}]")
    prec = prec or DEFAULT_PRECISION
    u = _gauss_coefficients(params.shifted(shift), order, prec)
    v = _gauss_coefficients(params, order, prec)
    n_terms = order + 1
    # products[k][n] = n-th Taylor coefficient of u v^k
    products = [u[:n_terms]]
    for _ in range(order):
        products.append(_convolve(products[-1], v, n_terms))
    out = []
    for n in range(n_terms):
        total = sum((-1) ** k * comb(n + 1, k + 1) * products[k][n] for k in range(n + 1))
        out.append(total * factorial(n))
    return out


# --------------------------------------------------------------------------
# Schwarz reconstruction


def schwarz_sum_numerator(f_taylor, q_coeffs, N: int) -> list:
    """Coefficients of ``P(z) = sum_{k<N} z^k sum_{j<=k} q_{k-j} f_j``.

    The polynomial part of the reconstruction is ``P(z) / q(z)``. Works with
    any number type, including :class:`fractions.Fraction`.
    """
    out = []
    for k in range(N):
        acc = 0
        for j in range(k + 1):
            if j < len(f_taylor) and k - j < len(q_coeffs):
                acc += q_coeffs[k - j] * f_taylor[j]
        out.append(acc)
    return out


def schwarz_reconstruct(
    f_taylor,
    q: RealPolynomial,
    N: int,
    u_integrand,
    z,
    quad: QuadratureConfig | None = None,
    prec: Precision | None = None,
    bank: Bank | None = None,
    alpha: float = 0.0,
    beta: float = 0.0,
):
    """Recover ``f(z)`` from ``N`` Taylor coefficients and ``u = Im f(x + i0) / pi`` on ``(1, oo)``::

        f(z) = P(z) / q(z) + z^N / q(z) * int_1^oo q(x) u(x) dx / ((x - z) x^N)

    ``u_integrand`` is an mpmath callable of ``x``. The integral is taken over
    ``t = 1/x``; ``alpha`` and ``beta`` are the endpoint exponents of the
    transformed density, used by the Gauss-Jacobi scheme only.
    """
    prec = prec or DEFAULT_PRECISION
    z = complex(z)
    qz = q(z)
    if qz == 0:
        raise PoleError(f"q vanishes at z = {z}", location=z)
    poly = schwarz_sum_numerator(list(f_taylor), list(q.coeffs), N)
    value = complex(sum(complex(c) * z**k for k, c in enumerate(poly))) / complex(qz)
    if u_integrand is None:
        return value

    def fn(t, s):
        x = 1 / t
        return q(x) * u_integrand(x) * t ** (N - 1)

    density = Density(fn, prec, alpha, beta)
    integral = cauchy_transform(density, z, bank, quad).value
    return value + z**N / complex(qz) * integral


# --------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class Weight:
    """The boundary density ``B P_r(1/x) x^exp_x (x-1)^exp_x_minus_1`` (before ``T`` and ``|F|^2``)."""

    B_times_Pr: RealPolynomial
    exp_x: float
    exp_x_minus_1: float


@dataclass(frozen=True)
class Representation:
    params: Params
    shift: Shift
    strategy: str
    Q: RationalFunction
    T: RealPolynomial
    M: int
    N: int
    d: int
    taylor: tuple
    weight: Weight
    sum_coeffs: tuple
    prec: Precision = DEFAULT_PRECISION
    logarithmic: bool = False

    @property
    def endpoint_exponents(self) -> tuple[float, float]:
        """Algebraic exponents of the transformed density at ``t = 0`` and ``t = 1``."""
        return _endpoint_exponents(self.params, self.weight, self.d)


def _endpoint_exponents(params: Params, weight: Weight, d: int) -> tuple[float, float]:
    # h(t) = t^(-exp_x - exp_x_minus_1 - d - 1) (1-t)^exp_x_minus_1 ... / |F(1/t)|^2
    at_zero = -weight.exp_x - weight.exp_x_minus_1 - d - 1 + 2 * zeta(params)
    at_one = weight.exp_x_minus_1 - 2 * eta(params)
    return at_zero, at_one


def _is_logarithmic(params: Params) -> bool:
    """Whether the leading term of ``2F1`` at ``z = 1`` or ``z = oo`` carries a logarithm."""
    a, b, c = (float(v) for v in params.as_tuple())
    return abs(c - a - b) <= _LOG_TOL or abs(a - b) <= _LOG_TOL


@lru_cache(maxsize=256)
def _representation_density(params: Params, shift: Shift, weight: Weight, T: RealPolynomial, d: int, prec: Precision):
    reflected = T.reflected(d)
    W = effective_weight(params, shift, prec)

    def fn(t, s):
        ctx = prec.ctx
        t_exp = -ctx.convert(weight.exp_x) - weight.exp_x_minus_1 - d - 1
        mod2 = cut_modulus_squared(params, s / t, prec)
        if mod2 == 0:
            raise PoleError("the base function vanishes on the cut", location=complex(float(1 / t), 0.0))
        return ctx.power(t, t_exp) * ctx.power(s, weight.exp_x_minus_1) * reflected(t) * W(t) / mod2

    alpha, beta = _endpoint_exponents(params, weight, d)
    return Density(fn, prec, alpha, beta)


def _canonical_strategy(strategy) -> str:
    key = str(strategy).strip().lower()
    if key not in _ALIASES:
        raise ParameterError(f"unknown strategy {strategy!r}")
    return _ALIASES[key]


def _check_degenerate(params: Params, prec: Precision):
    if not params.is_degenerate():
        return
    report = locate_zeros(params, prec, shift=Shift(0, 0, 0))
    if any(z.on_cut for z in report.zeros):
        raise DegenerateError("degenerate parameters with a zero of 2F1 on the cut; the boundary density is not integrable")


def _poles_with_residues(params: Params, shift: Shift, prec: Precision):
    if shift.is_zero():
        return []
    report = locate_zeros(params, prec, shift=shift)
    out = []
    for z, res in zip(report.zeros, report.residues):
        if not z.simple or res is None:
            raise MultiplicityError(f"the pole at {z.location} is not simple")
        if z.on_cut:
            raise DegenerateError(f"the ratio has a pole on the cut at {z.location.real}")
        out.append((z.location, res))
        if z.kind == "complex-pair-representative":
            out.append((z.location.conjugate(), complex(res).conjugate()))
    return out


def t_multiplier_laurent(params: Params, shift: Shift, T: RealPolynomial, prec: Precision | None = None) -> list:
    """Coefficients ``A_{d-j} = [z^j] T(z) R(z)`` for ``j < d`` (returned as ``A_1 ... A_d``)."""
    d = T.degree
    if d <= 0:
        return []
    coeffs = ratio_taylor_coeffs(params, shift, d - 1, prec)
    gamma = T.taylor(d)
    first = [float(v) for v in _convolve(gamma, coeffs, d)]
    return [first[d - k] for k in range(1, d + 1)]


def build_representation(
    params: Params,
    shift: Shift,
    strategy="auto",
    prec: Precision | None = None,
    M: int | None = None,
    N: int | None = None,
) -> Representation:
    """Assemble the representation of ``R`` for the given strategy.

    ``auto`` picks ``pole-free`` when the base function has no zeros and
    ``q-correction`` otherwise. ``M`` and ``N`` default to the smallest
    admissible orders; larger values are accepted.
    """
    prec = prec or DEFAULT_PRECISION
    strategy = _canonical_strategy(strategy)
    params.shifted(shift)
    _check_degenerate(params, prec)
    condition = pole_free_condition(params)
    if strategy == "auto":
        strategy = POLE_FREE if condition is not None else Q_CORRECTION
    if strategy == POLE_FREE and condition is None:
        raise ParameterError("the base function has zeros; the pole-free form does not apply")

    limit = None if strategy == POLE_FREE else infinity_constant(params, shift, prec)
    q0 = 0.0 if limit is None else float(limit)
    poles = [] if strategy == POLE_FREE else _poles_with_residues(params, shift, prec)

    if strategy == Q_CORRECTION:
        Q = RationalFunction.from_partial_fractions(q0, poles)
        T = RealPolynomial.one()
    elif strategy == T_MULTIPLIER:
        Q = RationalFunction.constant(q0)
        T = RealPolynomial.from_roots([b for b, _ in poles])
    else:
        Q = RationalFunction.constant(0.0)
        T = RealPolynomial.one()
    d = T.degree

    M_min, N_min = select_MN(
        params,
        shift,
        retain_constant=limit is not None,
        with_poles=strategy == Q_CORRECTION and bool(poles),
    )
    M = M_min if M is None else int(M)
    N = N_min if N is None else int(N)
    if M < M_min or N - M < N_min - M_min or N < 0:
        raise ParameterError(f"(M, N) = ({M}, {N}) is not admissible; the minimal pair is ({M_min}, {N_min})")

    n_sum = N + d
    taylor = []
    if n_sum > 0:
        r_coeffs = [float(v) for v in ratio_taylor_coeffs(params, shift, n_sum - 1, prec)]
        q_coeffs = Q.taylor(n_sum)
        taylor = [r - q for r, q in zip(r_coeffs, q_coeffs)]
    multiplier = RealPolynomial([(-1) ** k * comb(M, k) for k in range(M + 1)]) * T
    sum_coeffs = schwarz_sum_numerator(taylor, list(multiplier.coeffs), n_sum)

    idx = derive_indices(shift)
    a, b, c = (float(v) for v in params.as_tuple())
    weight = Weight(
        B_times_Pr=effective_weight(params, shift, prec),
        exp_x=idx.l - idx.n_low - c - N - d,
        exp_x_minus_1=M + c - a - b - idx.l,
    )
    return Representation(
        params=params,
        shift=shift,
        strategy=strategy,
        Q=Q,
        T=T,
        M=M,
        N=N,
        d=d,
        taylor=tuple(taylor),
        weight=weight,
        sum_coeffs=tuple(float(v) for v in sum_coeffs),
        prec=prec,
        logarithmic=_is_logarithmic(params),
    )


def _evaluation_point(pt) -> CutPlanePoint:
    pt = as_point(pt)
    if pt.bank is None and pt.z.real > 1 and abs(pt.z.imag) < NEAR_CUT:
        raise ParameterError(f"z = {pt.z} is within {NEAR_CUT} of the cut; evaluate on a bank instead")
    return pt


def _integral_result(weight, T, z, quad, prec, params, shift, bank):
    if weight.B_times_Pr.is_zero():
        return None
    if params is None or shift is None:
        raise ParameterError("params and shift are needed to evaluate |2F1|^2 in the density")
    prec = prec or DEFAULT_PRECISION
    density = _representation_density(params, shift, weight, T, max(T.degree, 0), prec)
    return cauchy_transform(density, complex(z), bank, quad)


def cauchy_integral(weight: Weight, T: RealPolynomial, z, quad=None, prec=None, *, params=None, shift=None, bank=None):
    """``int_0^1 h(t) dt / (1 - z t)`` for the density of a representation with the given weight and ``T``."""
    result = _integral_result(weight, T, z, quad, prec, params, shift, bank)
    return 0j if result is None else result.value


def eval_representation_detail(rep: Representation, pt, quad=None, prec=None):
    """Like :func:`eval_representation`, also returning the quadrature result (``None`` without integral)."""
    pt = _evaluation_point(pt)
    prec = prec or rep.prec
    z = pt.z
    if z == 1:
        raise PoleError("z = 1 is a singular point of the representation", location=z)
    Tz = complex(rep.T(z))
    if Tz == 0:
        raise PoleError(f"T vanishes at z = {z}", location=z)
    value = complex(rep.Q(z))
    base = (1 - z) ** rep.M * Tz
    if rep.sum_coeffs:
        value += sum(g * z**k for k, g in enumerate(rep.sum_coeffs)) / base
    result = _integral_result(rep.weight, rep.T, z, quad, prec, rep.params, rep.shift, pt.bank)
    if result is not None:
        value += z ** (rep.N + rep.d) / ((z - 1) ** rep.M * Tz) * result.value
    return value, result


def eval_representation(rep: Representation, pt, quad: QuadratureConfig | None = None, prec: Precision | None = None) -> complex:
    """Evaluate a representation at a point of the cut plane or on a bank."""
    return eval_representation_detail(rep, pt, quad, prec)[0]


# --------------------------------------------------------------------------
# closed forms for particular ratios


@lru_cache(maxsize=128)
def _modulus_density(params: Params, prec: Precision) -> Density:
    """``t^(a+b-1) (1-t)^(c-a-b) / |2F1(a, b; c; 1/t)|^2``."""

    def fn(t, s):
        ctx = prec.ctx
        a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
        return ctx.power(t, a + b - 1) * ctx.power(s, c - a - b) / cut_modulus_squared(params, s / t, prec)

    a, b, c = (float(v) for v in params.as_tuple())
    return Density(fn, prec, a + b - 1 + 2 * zeta(params), c - a - b - 2 * eta(params))


def _integrable(params: Params) -> bool:
    a, b, c = (float(v) for v in params.as_tuple())
    return a + b - 1 + 2 * zeta(params) > -1 and c - a - b - 2 * eta(params) > -1


def _require_pole_free(params: Params):
    if pole_free_condition(params) is None:
        raise ParameterError("none of the conditions I-VI holds; the base function has zeros")


def _stieltjes(params, pt, quad, prec, power):
    pt = _evaluation_point(pt)
    return cauchy_transform(_modulus_density(params, prec), pt.z, pt.bank, quad, power=power).value


def _gamma_quotient(prec, top, bottom):
    ctx = prec.ctx
    out = ctx.one
    for v in top:
        out *= ctx.gamma(v)
    for v in bottom:
        out *= reciprocal_gamma(v, prec)
    return out


def limit_constant_abc(params: Params) -> float:
    """``c / (c - min(a, b))``."""
    a, b, c = (float(v) for v in params.as_tuple())
    return c / (c - min(a, b))


def _prefactor_term(params, pt, quad, prec, K, power):
    if K == 0:
        if not _integrable(params):
            raise ParameterError("the gamma prefactor vanishes against a divergent integral")
        return 0j
    return complex(K) * _stieltjes(params, pt, quad, prec, power)


def gauss_ratio_repr(params: Params, pt, quad: QuadratureConfig | None = None, prec: Precision | None = None) -> complex:
    """``F(a, b+1; c+1; z) / F(a, b; c; z)`` as ``c (b-a)_+ / (b (c-a))`` plus a Stieltjes integral."""
    prec = prec or DEFAULT_PRECISION
    condition = pole_free_condition(params)
    if condition is None:
        raise ParameterError("none of the conditions I-VI holds; the base function has zeros")
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    if condition == "VI" and abs(a - c) <= 1e-12:
        raise ParameterError("a = c is excluded under condition VI")
    if b == 0 or a == c:
        raise ParameterError("the constant term is undefined for b = 0 or a = c")
    constant = c * max(b - a, 0) / (b * (c - a))
    K = _gamma_quotient(prec, (c, c + 1), (a, b + 1, c - b, c - a + 1))
    return complex(constant) + _prefactor_term(params, pt, quad, prec, K, 1)


def ratio_010(params: Params, pt, quad: QuadratureConfig | None = None, prec: Precision | None = None) -> complex:
    """``F(a, b+1; c; z) / F(a, b; c; z)`` through ``((c-1)/b) R_{0,0,-1} - (c-b-1)/b``."""
    prec = prec or DEFAULT_PRECISION
    a, b, c = (float(v) for v in params.as_tuple())
    if b == 0 or c == 1:
        raise ParameterError("b = 0 or c = 1 leaves the contiguous relation undefined")
    rep = build_representation(params, Shift(0, 0, -1), "auto", prec)
    return (c - 1) / b * eval_representation(rep, pt, quad, prec) - (c - b - 1) / b


def product_r111_r001(params: Params, pt, quad: QuadratureConfig | None = None, prec: Precision | None = None) -> complex:
    """``z R_{1,1,1}(z) R_{0,0,1}(z)`` as a constant plus an order-two Stieltjes integral.

    The kernel ``(c + z t (1-c)) / (1 - z t)^2`` is split as
    ``1 / (1 - z t)^2 - (1 - c) / (1 - z t)``.
    """
    prec = prec or DEFAULT_PRECISION
    _require_pole_free(params)
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    if a == 0 or b == 0:
        raise ParameterError("a and b must be nonzero")
    constant = c**2 / (a * b) * (1 - c / (c - min(a, b)))
    K = _gamma_quotient(prec, (c + 1, c + 1), (a + 1, b + 1, c - a + 1, c - b + 1))
    second = _prefactor_term(params, pt, quad, prec, K, 2)
    first = _prefactor_term(params, pt, quad, prec, K, 1)
    return complex(constant) + second - complex(1 - c) * first


def product_stieltjes2(params: Params, pt, quad: QuadratureConfig | None = None, prec: Precision | None = None) -> complex:
    """``R_{0,0,-1}(z) R_{0,0,1}(z)`` as a constant plus an order-two Stieltjes integral."""
    prec = prec or DEFAULT_PRECISION
    _require_pole_free(params)
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    if c == 1:
        raise ZeroDivisionError("c = 1 makes the constant term singular")
    lo = min(a, b)
    constant = c * (c - lo - 1) / ((c - 1) * (c - lo))
    K = _gamma_quotient(prec, (c - 1, c + 1), (a, b, c - a + 1, c - b + 1))
    return complex(constant) + _prefactor_term(params, pt, quad, prec, K, 2)
