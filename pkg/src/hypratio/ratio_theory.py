"""Closed-form ingredients of the ratio ``R(z) = 2F1(a+n1, b+n2; c+m; z) / 2F1(a, b; c; z)``.

Covers the index quantities of a shift, the gamma quotient ``B``, the
exponents that govern the growth of ``R`` at ``z = 1`` and ``z = oo``, the
choice of the Schwarz orders ``(M, N)``, the polynomial ``P_r`` multiplying the
boundary imaginary part, and the imaginary part itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .continuation import Bank, cut_modulus_squared, hyp2f1_boundary
from .errors import FitError, ParameterError, PoleError, SingularTermError
from .special_core import (
    DEFAULT_PRECISION,
    Params,
    Precision,
    Shift,
    hyp4f3_terminating,
    in_n0,
    nearest_integer,
    pochhammer,
    reciprocal_gamma,
    to_mp,
)

__all__ = [
    "RealPolynomial",
    "IndexData",
    "AsymptoticProfile",
    "derive_indices",
    "coefficient_B",
    "eta",
    "zeta",
    "asymptotic_profile",
    "select_MN",
    "leading_at_infinity",
    "infinity_constant",
    "pr_polynomial",
    "effective_weight",
    "pr_fit_from_boundary",
    "boundary_imag",
    "PERTURBATION_STEP",
]

#: Step of the symmetric parameter perturbation used at singular configurations.
PERTURBATION_STEP = 1e-8
# a generic direction moving a, b, c-a, c-b and a-b off the integers at once
_PERTURB_DIRECTION = (1.0, 0.6180339887498949, 0.30901699437494745)
_SINGULAR_DISTANCE = 1e-6
_MN_MARGIN = 1e-9


@dataclass(frozen=True)
class RealPolynomial:
    """Polynomial with real coefficients stored in ascending degree.

    The empty coefficient list is the zero polynomial of degree ``-1``.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "RealPolynomial") -> "RealPolynomial":
        if not self.coeffs or not other.coeffs:
            return RealPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                out[i + j] = out[i + j] + p * q
        return RealPolynomial(out)

    def scale(self, factor) -> "RealPolynomial":
        return RealPolynomial(c * factor for c in self.coeffs)

    def reflected(self, degree: int | None = None) -> "RealPolynomial":
        """Coefficients of ``t^d p(1/t)`` with ``d = degree`` (default: own degree)."""
        d = self.degree if degree is None else degree
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return RealPolynomial(reversed(padded))

    def taylor(self, n: int) -> list:
        """First ``n`` Taylor coefficients at the origin (zero padded)."""
        return list(self.coeffs[:n]) + [0] * max(0, n - len(self.coeffs))

    def as_floats(self) -> "RealPolynomial":
        return RealPolynomial(float(c) for c in self.coeffs)

    @classmethod
    def one(cls) -> "RealPolynomial":
        return cls((1,))

    @classmethod
    def from_roots(cls, roots) -> "RealPolynomial":
        """Monic polynomial with the given roots; complex roots must come in conjugate pairs."""
        coeffs = np.poly(np.asarray(list(roots), dtype=complex))[::-1] if len(roots) else np.array([1.0])
        imag = np.max(np.abs(coeffs.imag)) if coeffs.size else 0.0
        if imag > 1e-9 * max(1.0, float(np.max(np.abs(coeffs)))):
            raise ParameterError("roots do not close under conjugation")
        return cls(float(c) for c in coeffs.real)


@dataclass(frozen=True)
class IndexData:
    n_low: int
    n_high: int
    p: int
    l: int
    r: int


@dataclass(frozen=True)
class AsymptoticProfile:
    eta_base: float
    eta_shifted: float
    zeta_base: float
    zeta_shifted: float


def derive_indices(shift: Shift) -> IndexData:
    n1, n2, m = shift.as_tuple()
    n_low, n_high = min(n1, n2), max(n1, n2)
    p = max(m - n1 - n2, 0)
    l = max(n1 + n2 - m, 0)
    r = l + max(m, 0) - n_low - 1
    return IndexData(n_low, n_high, p, l, r)


def coefficient_B(params: Params, shift: Shift, prec: Precision | None = None):
    """``-Gamma(c) Gamma(c+m) / (Gamma(a) Gamma(b) Gamma(c-a+m-n1) Gamma(c-b+m-n2))``."""
    prec = prec or DEFAULT_PRECISION
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    n1, n2, m = shift.as_tuple()
    params.shifted(shift)  # rejects c + m in -N0
    # differences are formed in mp: near a gamma pole a rounded argument costs all digits
    recips = [reciprocal_gamma(v, prec) for v in (a, b, c - a + m - n1, c - b + m - n2)]
    if any(r == 0 for r in recips):
        return ctx.zero
    out = -ctx.gamma(c) * ctx.gamma(c + m)
    for r in recips:
        out *= r
    return out


def _neg_in_n0(x) -> bool:
    return in_n0(-x)


def eta(params: Params) -> float:
    """Exponent of ``2F1(a, b; c; z)`` as ``z -> 1``."""
    a, b, c = (float(v) for v in params.as_tuple())
    s = c - a - b
    if (_neg_in_n0(a) and in_n0(b - c)) or (_neg_in_n0(b) and in_n0(a - c)):
        return max(s, 0.0)
    if (_neg_in_n0(a) or _neg_in_n0(b)) and not in_n0(a - c) and not in_n0(b - c):
        return 0.0
    if not _neg_in_n0(a) and not _neg_in_n0(b) and (in_n0(a - c) or in_n0(b - c)):
        return s
    return min(s, 0.0)


def zeta(params: Params) -> float:
    """Exponent of ``2F1(a, b; c; -z)`` as ``z -> oo``."""
    a, b, c = (float(v) for v in params.as_tuple())
    if _neg_in_n0(a) and _neg_in_n0(b):
        # both numerator parameters terminate; the shorter one fixes the degree
        return -max(a, b)
    if in_n0(b - c) or _neg_in_n0(a):
        return -a
    if in_n0(a - c) or _neg_in_n0(b):
        return -b
    return -min(a, b)


def asymptotic_profile(params: Params, shift: Shift) -> AsymptoticProfile:
    sp = params.shifted(shift)
    return AsymptoticProfile(eta(params), eta(sp), zeta(params), zeta(sp))


def _smallest_integer_above(x: float, margin: float = _MN_MARGIN) -> int:
    j = nearest_integer(x, margin)
    if j is not None:
        return j + 1
    return math.floor(x) + 1


def select_MN(
    params: Params,
    shift: Shift,
    retain_constant: bool = False,
    with_poles: bool = False,
) -> tuple[int, int]:
    """Smallest admissible Schwarz orders ``(M, N)``.

    ``M > eta(base) - eta(shifted) - 1`` and ``N > M + zeta(shifted) - zeta(base)``.
    With ``retain_constant`` the limit of ``R`` at infinity is subtracted, so a
    zero exponent difference only needs ``N >= M``. With ``with_poles`` the
    subtracted partial fractions decay like ``1/z`` and cap the decay of
    ``R - Q`` there.
    """
    prof = asymptotic_profile(params, shift)
    M = max(0, _smallest_integer_above(prof.eta_base - prof.eta_shifted - 1))
    dz = prof.zeta_shifted - prof.zeta_base
    if with_poles:
        dz = max(dz, -1.0)
    if retain_constant and abs(dz) <= _MN_MARGIN:
        N = M
    else:
        N = max(0, _smallest_integer_above(M + dz))
    return M, N


def leading_at_infinity(params: Params, prec: Precision | None = None):
    """Leading term ``C (-z)^e log(-z)^k`` of ``2F1`` at infinity as ``(C, e, k)``.

    Only non-degenerate parameters are handled; ``None`` otherwise.
    """
    if params.is_degenerate():
        return None
    prec = prec or DEFAULT_PRECISION
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    lo, hi = (a, b) if a <= b else (b, a)
    gc = ctx.gamma(c)
    if abs(hi - lo) <= 1e-12:
        coef = gc * reciprocal_gamma(lo, prec) * reciprocal_gamma(c - lo, prec)
        return coef, -float(lo), 1
    coef = gc * ctx.gamma(hi - lo) * reciprocal_gamma(hi, prec) * reciprocal_gamma(c - lo, prec)
    return coef, -float(lo), 0


def infinity_constant(params: Params, shift: Shift, prec: Precision | None = None):
    """``lim R(z)`` as ``z -> oo`` when it is finite and nonzero-order, else ``None``."""
    base = leading_at_infinity(params, prec)
    top = leading_at_infinity(params.shifted(shift), prec)
    if base is None or top is None:
        return None
    if abs(base[1] - top[1]) > 1e-12 or base[2] != top[2] or base[0] == 0:
        return None
    return top[0] / base[0]


# --------------------------------------------------------------------------
# P_r


def _near_singular(params: Params) -> bool:
    a, b, c = (float(v) for v in params.as_tuple())
    return any(nearest_integer(v, _SINGULAR_DISTANCE) is not None for v in (a, b, c - a, c - b, a - b))


def _perturbed(params: Params, h: float) -> Params:
    da, db, dc = _PERTURB_DIRECTION
    return Params(float(params.a) + h * da, float(params.b) + h * db, float(params.c) + h * dc)


def _k_half(x, y, c, nx, ny, m, j, prec):
    if j + nx < 0:
        return 0
    pref = pochhammer(1 - x, j, prec) * pochhammer(c - x, m + j, prec)
    den = pochhammer(y - x, ny + j + 1, prec) * factorial(j + nx)
    if den == 0:
        raise SingularTermError(f"(b-a) Pochhammer vanishes in K_{j}", index=j, term="prefactor")
    series = hyp4f3_terminating(
        (-j - nx, x, 1 + x - c, x - y - ny - j),
        (x - j, 1 + x - c - m - j, 1 + x - y),
        prec,
    )
    return pref / den * series


def _k_coefficient(params: Params, shift: Shift, j: int, prec: Precision):
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    n1, n2, m = shift.as_tuple()
    try:
        first = _k_half(a, b, c, n1, n2, m, j, prec)
    except SingularTermError as exc:
        raise SingularTermError(f"K_{j}, first term: {exc}", index=j, term="first") from exc
    try:
        second = _k_half(b, a, c, n2, n1, m, j, prec)
    except SingularTermError as exc:
        raise SingularTermError(f"K_{j}, second term: {exc}", index=j, term="second") from exc
    return first + second


def _pr_exact(params: Params, shift: Shift, prec: Precision) -> list:
    idx = derive_indices(shift)
    if idx.r < 0:
        return []
    ctx = prec.ctx
    k_cache = {}
    coeffs = []
    for k in range(idx.r + 1):
        acc = ctx.zero
        for j in range(max(k - idx.p, 0) - idx.n_high, k - idx.n_high + 1):
            if j not in k_cache:
                k_cache[j] = _k_coefficient(params, shift, j, prec)
            acc += (-1) ** (j % 2) * comb(idx.p, k - idx.n_high - j) * k_cache[j]
        coeffs.append((-1) ** ((idx.n_high + k) % 2) * acc)
    return coeffs


def _average_perturbed(fn, params: Params, prec: Precision):
    hi = prec.boosted(30)
    plus = fn(_perturbed(params, PERTURBATION_STEP), hi)
    minus = fn(_perturbed(params, -PERTURBATION_STEP), hi)
    ctx = prec.ctx
    return [ctx.convert((p + q) / 2) for p, q in zip(plus, minus)]


@lru_cache(maxsize=512)
def _pr_cached(params: Params, shift: Shift, prec: Precision) -> tuple:
    if not _near_singular(params):
        try:
            return tuple(_pr_exact(params, shift, prec))
        except SingularTermError:
            pass
    try:
        return tuple(_average_perturbed(lambda p, pr: _pr_exact(p, shift, pr), params, prec))
    except SingularTermError as exc:
        raise SingularTermError(f"P_r stays singular after perturbation: {exc}", index=exc.index, term=exc.term) from exc


def pr_polynomial(params: Params, shift: Shift, prec: Precision | None = None) -> RealPolynomial:
    """The degree-``r`` polynomial ``P_r`` of the boundary formula (zero polynomial for ``r = -1``).

    At configurations where the terminating sums are singular the value is the
    average over a symmetric parameter perturbation of size ``PERTURBATION_STEP``.
    """
    prec = prec or DEFAULT_PRECISION
    params.shifted(shift)
    return RealPolynomial(_pr_cached(params, shift, prec))


def _weight_exact(params: Params, shift: Shift, prec: Precision) -> list:
    B = coefficient_B(params, shift, prec)
    return [B * c for c in _pr_exact(params, shift, prec)]


@lru_cache(maxsize=512)
def _weight_cached(params: Params, shift: Shift, prec: Precision) -> tuple:
    if not _near_singular(params):
        try:
            return tuple(_weight_exact(params, shift, prec))
        except SingularTermError:
            pass
    return tuple(_average_perturbed(lambda p, pr: _weight_exact(p, shift, pr), params, prec))


def effective_weight(params: Params, shift: Shift, prec: Precision | None = None) -> RealPolynomial:
    """The product ``B * P_r`` as a polynomial in ``t = 1/x``.

    This stays finite where ``B`` vanishes and ``P_r`` blows up.
    """
    prec = prec or DEFAULT_PRECISION
    params.shifted(shift)
    return RealPolynomial(_weight_cached(params, shift, prec))


def _boundary_factor(params: Params, idx: IndexData, x, prec: Precision):
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    xx = to_mp(ctx, x)
    return ctx.power(xx, idx.l - idx.n_low - c) * ctx.power(xx - 1, c - a - b - idx.l)


def boundary_imag(params: Params, shift: Shift, x, bank=Bank.UPPER, prec: Precision | None = None):
    """``Im R(x +/- i0)`` for ``x > 1`` from the closed boundary formula."""
    prec = prec or DEFAULT_PRECISION
    bank = Bank.parse(bank)
    ctx = prec.ctx
    xx = to_mp(ctx, x)
    if not xx > 1:
        raise ParameterError(f"boundary_imag needs x > 1, got {x}")
    idx = derive_indices(shift)
    if idx.r < 0:
        return ctx.zero
    W = effective_weight(params, shift, prec)
    mod2 = cut_modulus_squared(params, xx - 1, prec)
    if mod2 == 0 or (params.is_degenerate() and mod2 < ctx.mpf(10) ** (-prec.working_digits)):
        raise PoleError(f"2F1 vanishes on the cut at x = {x}", location=complex(float(xx), 0.0))
    return bank.sign * ctx.pi * W(1 / xx) * _boundary_factor(params, idx, xx, prec) / mod2


def _default_fit_nodes(count: int) -> list[float]:
    # Chebyshev points of t = 1/x inside (0.1, 0.9)
    ts = [0.5 + 0.4 * math.cos(math.pi * (2 * i + 1) / (2 * count)) for i in range(count)]
    return [1.0 / t for t in ts]


def pr_fit_from_boundary(
    params: Params,
    shift: Shift,
    prec: Precision | None = None,
    xs=None,
) -> RealPolynomial:
    """Recover ``P_r`` from directly evaluated boundary values of the ratio.

    ``Im R(x + i0)`` is sampled at ``xs`` (default: ``r + 1`` Chebyshev
    points), the boundary formula is inverted for ``P_r(1/x)`` and the
    resulting Vandermonde system is solved (least squares when
    overdetermined).
    """
    prec = prec or DEFAULT_PRECISION
    ctx = prec.ctx
    idx = derive_indices(shift)
    if idx.r < 0:
        raise ParameterError("shift (0, 0, 0) has no polynomial to fit (r = -1)")
    B = coefficient_B(params, shift, prec)
    if B == 0:
        raise ParameterError("B vanishes; P_r cannot be separated from B")
    if xs is None:
        xs = _default_fit_nodes(idx.r + 1)
    xs = list(xs)
    if len(xs) < idx.r + 1:
        raise ParameterError(f"need at least r + 1 = {idx.r + 1} sample points")

    shifted = params.shifted(shift)
    rows, rhs = [], []
    for x in xs:
        xx = to_mp(ctx, x)
        num = hyp2f1_boundary(shifted, xx, Bank.UPPER, prec)
        den = hyp2f1_boundary(params, xx, Bank.UPPER, prec)
        im_ratio = ctx.im(num / den)
        mod2 = ctx.re(den) ** 2 + ctx.im(den) ** 2
        value = im_ratio * mod2 / (ctx.pi * B * _boundary_factor(params, idx, xx, prec))
        t = 1 / xx
        rows.append([t**k for k in range(idx.r + 1)])
        rhs.append(value)

    cond = float(np.linalg.cond(np.array([[float(v) for v in row] for row in rows])))
    if not np.isfinite(cond) or cond > 1e12:
        raise FitError(f"Vandermonde system is ill-conditioned (cond ~ {cond:.3g})", condition=cond)
    A = ctx.matrix(rows)
    y = ctx.matrix(rhs)
    if len(xs) == idx.r + 1:
        sol = ctx.lu_solve(A, y)
    else:
        sol, _ = ctx.qr_solve(A, y)
    return RealPolynomial(sol[i] for i in range(idx.r + 1))
