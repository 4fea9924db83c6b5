"""Evaluation of 2F1 on the cut plane and on both banks of the cut ``[1, oo)``.

The principal branch is delegated to :func:`mpmath.hyp2f1`, which handles the
linear transformations and the logarithmic connection cases. On the cut,
mpmath returns the limit from the lower half-plane; the upper bank is its
complex conjugate because the parameters are real.

:func:`hyp2f1_ode_oracle` is an independent check: it integrates the
hypergeometric differential equation from a series anchor along a polygonal
path that stays off the cut.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import ConvergenceError, ParameterError
from .special_core import (
    DEFAULT_PRECISION,
    Params,
    Precision,
    hyp2f1_series,
    nearest_integer,
    reciprocal_gamma,
    to_mp,
)

__all__ = [
    "Bank",
    "CutPlanePoint",
    "as_point",
    "hyp2f1",
    "hyp2f1_boundary",
    "hyp2f1_cut",
    "cut_modulus_squared",
    "hyp2f1_derivative",
    "hyp2f1_ode_oracle",
]

# below this distance to z = 1 the cut values use the 1 - z connection formula
NEAR_ONE = 1e-3
_MAX_BOOST_DIGITS = 600


class Bank(enum.Enum):
    """Side of the cut: ``UPPER`` is ``x + i0``, ``LOWER`` is ``x - i0``."""

    UPPER = 1
    LOWER = -1

    @property
    def sign(self) -> int:
        return self.value

    @classmethod
    def parse(cls, value) -> "Bank":
        if isinstance(value, Bank):
            return value
        key = str(value).strip().lower()
        if key in ("upper", "+", "+1", "1", "up"):
            return cls.UPPER
        if key in ("lower", "-", "-1", "down"):
            return cls.LOWER
        raise ParameterError(f"unknown bank {value!r}")


@dataclass(frozen=True)
class CutPlanePoint:
    """A point of ``C \\ [1, oo)`` or a point ``x > 1`` on a named bank."""

    z: complex
    bank: Bank | None = None

    def __post_init__(self):
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        if self.bank is None:
            if z.imag == 0.0 and z.real >= 1.0:
                raise ParameterError(f"z = {z.real} lies on the branch cut; a bank is required")
        else:
            object.__setattr__(self, "bank", Bank.parse(self.bank))
            if z.imag != 0.0 or not z.real > 1.0:
                raise ParameterError("a bank may only be given for real z > 1")

    @classmethod
    def on_cut(cls, x: float, bank) -> "CutPlanePoint":
        return cls(complex(float(x), 0.0), Bank.parse(bank))

    @property
    def cut(self):
        """``(x, bank)`` for boundary points, ``None`` otherwise."""
        if self.bank is None:
            return None
        return self.z.real, self.bank

    def conjugate(self) -> "CutPlanePoint":
        if self.bank is None:
            return CutPlanePoint(self.z.conjugate())
        return CutPlanePoint(self.z, Bank(-self.bank.value))


def as_point(pt) -> CutPlanePoint:
    if isinstance(pt, CutPlanePoint):
        return pt
    return CutPlanePoint(complex(pt))


def _mp_params(ctx, params: Params):
    return tuple(to_mp(ctx, v) for v in params.as_tuple())


def _mp_hyp2f1(ctx, a, b, c, z):
    try:
        return ctx.hyp2f1(a, b, c, z, maxterms=10**6)
    except (ctx.NoConvergence, ZeroDivisionError) as exc:  # pragma: no cover - exercised only on pathological input
        raise ConvergenceError(f"2F1({a}, {b}; {c}; {z}) failed: {exc}") from exc


def hyp2f1(params: Params, pt, prec: Precision | None = None):
    """Principal branch of ``2F1(a, b; c; z)``; bank limits for points on the cut.

    Returns an mpmath number at the working precision.
    """
    prec = prec or DEFAULT_PRECISION
    pt = as_point(pt)
    if pt.bank is not None:
        return hyp2f1_boundary(params, pt.z.real, pt.bank, prec)
    ctx = prec.ctx
    a, b, c = _mp_params(ctx, params)
    z = pt.z
    zz = ctx.mpf(z.real) if z.imag == 0.0 else ctx.mpc(z)
    return _mp_hyp2f1(ctx, a, b, c, zz)


def hyp2f1_boundary(params: Params, x, bank, prec: Precision | None = None):
    """Boundary value ``2F1(a, b; c; x +/- i0)`` for ``x > 1``."""
    prec = prec or DEFAULT_PRECISION
    bank = Bank.parse(bank)
    ctx = prec.ctx
    xx = to_mp(ctx, x)
    if not xx > 1:
        raise ParameterError(f"boundary values need x > 1, got {x}")
    return hyp2f1_cut(params, xx - 1, bank, prec)


def hyp2f1_cut(params: Params, eps, bank, prec: Precision | None = None):
    """``2F1(a, b; c; 1 + eps +/- i0)`` with ``eps > 0`` passed separately.

    Passing ``eps`` rather than ``x`` keeps full relative accuracy in
    ``x - 1`` down to arbitrarily small ``eps``.
    """
    prec = prec or DEFAULT_PRECISION
    bank = Bank.parse(bank)
    ctx = prec.ctx
    e = to_mp(ctx, eps)
    if not e > 0:
        raise ParameterError("eps must be positive")
    a, b, c = _mp_params(ctx, params)
    if e < NEAR_ONE:
        s = c - a - b
        if nearest_integer(s, 1e-6) is None:
            lower = _near_one_connection(params, e, prec)
        else:
            extra = min(_MAX_BOOST_DIGITS, int(-ctx.log10(e)) + 10)
            hi = prec.boosted(extra)
            hctx = hi.ctx
            ha, hb, hc = _mp_params(hctx, params)
            lower = _mp_hyp2f1(hctx, ha, hb, hc, 1 + hctx.convert(e))
            lower = ctx.convert(lower)
    else:
        lower = _mp_hyp2f1(ctx, a, b, c, 1 + e)
    if bank is Bank.LOWER:
        return lower
    return ctx.conj(lower)


def _near_one_connection(params: Params, eps, prec: Precision):
    # lower bank: 1 - z = -eps + i0, so (1 - z)^s = eps^s exp(i pi s)
    ctx = prec.ctx
    a, b, c = _mp_params(ctx, params)
    s = c - a - b
    w = -eps
    first = ctx.gamma(c) * ctx.gamma(s) * reciprocal_gamma(c - a, prec) * reciprocal_gamma(c - b, prec)
    second = ctx.gamma(c) * ctx.gamma(-s) * reciprocal_gamma(a, prec) * reciprocal_gamma(b, prec)
    total = ctx.mpc(0)
    if first != 0:
        total += first * hyp2f1_series(Params(a, b, 1 - s), w, prec)
    if second != 0:
        power = ctx.power(eps, s) * ctx.expjpi(s)
        total += second * power * hyp2f1_series(Params(c - a, c - b, 1 + s), w, prec)
    return total


def cut_modulus_squared(params: Params, eps, prec: Precision | None = None):
    """``|2F1(a, b; c; 1 + eps +/- i0)|^2``; identical on both banks."""
    v = hyp2f1_cut(params, eps, Bank.LOWER, prec)
    ctx = (prec or DEFAULT_PRECISION).ctx
    return ctx.re(v) ** 2 + ctx.im(v) ** 2


def hyp2f1_derivative(params: Params, pt, prec: Precision | None = None):
    """``d/dz 2F1(a, b; c; z) = (ab/c) 2F1(a+1, b+1; c+1; z)``."""
    prec = prec or DEFAULT_PRECISION
    ctx = prec.ctx
    a, b, c = _mp_params(ctx, params)
    if a == 0 or b == 0:
        return ctx.zero
    up = Params(params.a + 1, params.b + 1, params.c + 1)
    return a * b / c * hyp2f1(up, pt, prec)


# --------------------------------------------------------------------------
# ODE oracle

_ANCHOR = 0.25


def _segment_clear(z0: complex, z1: complex, point: complex, clearance: float) -> bool:
    d = z1 - z0
    if d == 0:
        return abs(z0 - point) >= clearance
    s = ((point - z0) * d.conjugate()).real / abs(d) ** 2
    s = min(1.0, max(0.0, s))
    return abs(z0 + s * d - point) >= clearance


def _oracle_path(z: complex, side: int) -> list[complex]:
    z0 = complex(_ANCHOR)
    if _segment_clear(z0, z, 0.0, 0.1) and _segment_clear(z0, z, 1.0, 0.25) and not (z.real > 1 and z.imag == 0):
        return [z0, z]
    h = 0.5j * side
    path = [z0, z0 + h, complex(z.real, 0.0) + h, z]
    out = [path[0]]
    for p in path[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def hyp2f1_ode_oracle(
    params: Params,
    pt,
    prec: Precision | None = None,
    clearance: float = 1e-3,
    rtol: float = 1e-13,
):
    """Value of ``2F1`` obtained by integrating
    ``z(1-z) w'' + (c - (a+b+1) z) w' - ab w = 0`` from ``z0 = 0.25``.

    The path is polygonal, stays at least ``clearance`` away from ``z = 1`` and
    reaches points on the cut from the side named by the bank.
    """
    prec = prec or DEFAULT_PRECISION
    pt = as_point(pt)
    z = pt.z
    if abs(z - 1) < clearance:
        raise ParameterError(f"z = {z} is within the clearance {clearance} of z = 1")
    if abs(z) < 0.05:
        # inside the anchor disc the series is the only sensible route
        return complex(hyp2f1_series(params, z, prec))

    if pt.bank is not None:
        side = pt.bank.sign
    else:
        side = 1 if z.imag >= 0 else -1

    a, b, c = (float(v) for v in params.as_tuple())
    w0 = complex(hyp2f1_series(params, _ANCHOR, prec))
    dw0 = (a * b / c) * complex(hyp2f1_series(Params(a + 1, b + 1, c + 1), _ANCHOR, prec)) if a * b != 0 else 0j
    y = np.array([w0, dw0], dtype=complex)

    path = _oracle_path(z, side)
    for za, zb in zip(path[:-1], path[1:]):
        delta = zb - za

        def rhs(s, yy, za=za, delta=delta):
            zz = za + s * delta
            w, dw = yy
            d2w = (a * b * w - (c - (a + b + 1.0) * zz) * dw) / (zz * (1.0 - zz))
            return np.array([delta * dw, delta * d2w])

        scale = max(1.0, float(np.max(np.abs(y))))
        sol = solve_ivp(rhs, (0.0, 1.0), y, method="DOP853", rtol=rtol, atol=rtol * 1e-3 * scale)
        if not sol.success:
            raise ConvergenceError(f"ODE integration failed on segment {za} -> {zb}: {sol.message}")
        y = sol.y[:, -1]
    return complex(y[0])


def principal_log1m(z: complex, bank: Bank | None = None) -> complex:
    """``log(1 - z)`` with the bank convention ``(1 - z)^s = (x - 1)^s e^{-/+ i pi s}``."""
    if bank is not None:
        x = z.real
        return complex(math.log(x - 1.0), -math.pi * bank.sign)
    return cmath.log(1 - z)
