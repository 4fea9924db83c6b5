"""Zeros of ``2F1(a, b; c; z)`` in the cut plane and the resulting poles of the ratio.

The number of zeros follows from the signs and integer parts of
``a, b, c-a, c-b`` (Runckel's count). Locating them is numerical: the count is
confirmed by the argument principle on a keyhole contour around the cut,
complex zeros are isolated by quadrisection of the upper half-plane and
polished with Newton's method, and real zeros come from a sign scan of the
real function on ``(-oo, 1)``. When the function reduces to a polynomial
(times a power of ``1 - z``) the roots are taken from the companion matrix.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import mpmath
import numpy as np
from scipy.optimize import brentq

from .continuation import Bank, CutPlanePoint, hyp2f1, hyp2f1_derivative
from .errors import AmbiguityError, MultiplicityError, ParameterError, ZeroSearchError
from .special_core import (
    DEFAULT_PRECISION,
    Params,
    Precision,
    Shift,
    in_n0,
    nearest_integer,
    to_mp,
)

__all__ = [
    "XiQuadruple",
    "LocatedZero",
    "ZeroReport",
    "xi_quadruple",
    "runckel_count",
    "pole_free_condition",
    "winding_count",
    "locate_zeros",
    "residue_at_pole",
    "residue_gauss",
    "DEFAULT_RESIDUE_SHIFT",
]

AMBIGUITY_TOL = 1e-9
CONDITION_TOL = 1e-12
# grown by factors of 4 until the count is reached; zeros can sit far out when |a - b| is small
RADIUS_SCHEDULE = tuple(4.0**k for k in range(1, 13))
KEYHOLE_GAP = 1e-4
# zeros can hug z = 1 when a parameter is close to a gamma pole; the gap shrinks on failure
KEYHOLE_GAPS = (KEYHOLE_GAP, 1e-8, 1e-12)
# lower edge of the upper half-plane search box, keeps the box off the real axis
BOX_FLOOR = 1e-6
MULTIPLICITY_TOL = 1e-8
DEFAULT_RESIDUE_SHIFT = Shift(0, 1, 1)

_CONTOUR_PREC = Precision(working_digits=15, series_tolerance=1e-17)
_MAX_ARG_STEP = 0.3
_MAX_BISECT = 40
_FP_LOG_TOL = 1e-6


@dataclass(frozen=True)
class XiQuadruple:
    """``a, b, c-a, c-b`` sorted, with the sign ``S`` of the product of their gamma values."""

    xi: tuple
    S: int


class LocatedZero(NamedTuple):
    location: complex
    kind: str  # "real" or "complex-pair-representative"
    on_cut: bool = False
    simple: bool = True


@dataclass
class ZeroReport:
    count: int
    zeros: list = field(default_factory=list)
    residues: list = field(default_factory=list)
    degenerate: bool = False
    shift: Shift = DEFAULT_RESIDUE_SHIFT
    radius: float | None = None

    def located_count(self) -> int:
        return sum(2 if z.kind == "complex-pair-representative" else 1 for z in self.zeros)


def _gamma_sign(x: float) -> int:
    if x > 0:
        return 1
    return -1 if math.floor(x) % 2 else 1


def xi_quadruple(params: Params) -> XiQuadruple:
    a, b, c = (float(v) for v in params.as_tuple())
    xi = tuple(sorted((a, b, c - a, c - b)))
    S = 1
    for v in xi:
        if not (nearest_integer(v) is not None and nearest_integer(v) <= 0):
            S *= _gamma_sign(v)
    return XiQuadruple(xi, S)


def _degenerate_order(params: Params):
    """``(xi, label)`` for the smallest of ``-a, -b, a-c, b-c`` in N0, else ``None``."""
    a, b, c = (float(v) for v in params.as_tuple())
    found = [(nearest_integer(v), label) for v, label in ((-a, "a"), (-b, "b"), (a - c, "c-a"), (b - c, "c-b")) if in_n0(v)]
    if not found:
        return None
    return min(found)


def runckel_count(params: Params) -> tuple[int, bool]:
    """Number of zeros in the cut plane plus the upper bank, and whether the case is degenerate."""
    deg = _degenerate_order(params)
    if deg is not None:
        return deg[0], True
    q = xi_quadruple(params)
    for v in q.xi:
        k = nearest_integer(v, AMBIGUITY_TOL)
        if k is not None and k <= 0:
            raise AmbiguityError(f"xi = {v!r} is within {AMBIGUITY_TOL} of the integer {k}; the count is unstable")
    x1, x4 = q.xi[0], q.xi[3]
    if x1 > 0:
        return 0, False
    base = math.floor(-x1) + (1 + q.S) // 2
    if x4 > 0:
        return base, False
    return base + q.S * math.floor(1 - x4), False


def pole_free_condition(params: Params) -> str | None:
    """First of the conditions I to VI under which ``2F1`` has no zeros, or ``None``."""
    a, b, c = (float(v) for v in params.as_tuple())
    if c == 0:
        raise ParameterError("c must be nonzero")
    tol = CONDITION_TOL

    def le(x, y):
        return x <= y + tol

    def lt(x, y):
        return x < y - tol

    lo, hi = min(a, b), max(a, b)
    if lt(-1, lo) and le(lo, c) and le(c, hi) and le(hi, 0):
        return "I"
    if lt(-1, lo) and le(lo, 0) and le(0, hi) and le(hi, c):
        return "II"
    if lt(-1, c) and le(c, lo) and le(lo, 0) and le(0, hi) and lt(hi, c + 1):
        return "III"
    if le(0, lo) and le(lo, c) and lt(hi, c + 1):
        return "IV"
    values = (a, b, c, c - a, c - b)
    if all(lt(v, 0) and nearest_integer(v, tol) is None for v in values):
        xi = sorted((a, b, c - a, c - b))
        if math.floor(xi[0]) + 1 == math.floor(xi[3]) and math.floor(xi[1]) == math.floor(xi[2]):
            return "V"
    if any(abs(v) <= tol for v in (a, b, c - a, c - b)):
        return "VI"
    return None


# --------------------------------------------------------------------------
# argument principle


def _value(params: Params, pt, prec: Precision) -> complex:
    """Double precision value for argument tracking.

    Off the cut mpmath's fp context is accurate enough and about ten times
    faster; bank values always go through the multiprecision path because the
    fp context does not follow a fixed bank convention. Integer ``c-a-b`` or
    ``a-b`` (logarithmic connection formulas) also take the multiprecision
    path: fp perturbs the parameters there and loses every digit near ``z = 1``.
    """
    if (isinstance(pt, CutPlanePoint) and pt.bank is not None) or _logarithmic(params):
        return complex(hyp2f1(params, pt, prec))
    z = pt.z if isinstance(pt, CutPlanePoint) else complex(pt)
    try:
        v = complex(mpmath.fp.hyp2f1(float(params.a), float(params.b), float(params.c), z))
    except (ZeroDivisionError, ValueError, mpmath.libmp.NoConvergence):
        v = complex("nan")
    if not cmath.isfinite(v):
        v = complex(hyp2f1(params, CutPlanePoint(z), prec))
    return v


def _logarithmic(params: Params) -> bool:
    a, b, c = (float(v) for v in params.as_tuple())
    return any(nearest_integer(v, _FP_LOG_TOL) is not None for v in (c - a - b, a - b))


def _coord(pt) -> complex:
    return pt.z if isinstance(pt, CutPlanePoint) else complex(pt)


def _track(f, path, samples: int, rho: float = 0.3) -> float:
    """Continuous change of ``arg f(path(t))`` for ``t`` from 0 to 1.

    Besides the bound on the phase increment, steps are kept shorter than
    ``rho`` times the distance to ``z = 1``: the power ``(1 - z)^(c-a-b)``
    turns the phase by whole revolutions over short distances there, which a
    phase test alone cannot see.
    """

    def arc(t0, p0, v0, t1, p1, v1, depth):
        if v0 == 0 or v1 == 0:
            raise ZeroSearchError("contour passes through a zero")
        d = cmath.phase(v1 / v0)
        z0, z1 = _coord(p0), _coord(p1)
        near = min(abs(z0 - 1), abs(z1 - 1))
        if abs(d) <= _MAX_ARG_STEP and abs(z1 - z0) <= rho * near:
            return d
        if depth == 0:
            raise ZeroSearchError("argument jump does not resolve; a zero lies on the contour")
        tm = 0.5 * (t0 + t1)
        pm = path(tm)
        vm = f(pm)
        return arc(t0, p0, v0, tm, pm, vm, depth - 1) + arc(tm, pm, vm, t1, p1, v1, depth - 1)

    ts = np.linspace(0.0, 1.0, samples + 1)
    total = 0.0
    p_prev = path(0.0)
    t_prev, v_prev = 0.0, f(p_prev)
    for t in ts[1:]:
        p = path(float(t))
        v = f(p)
        total += arc(t_prev, p_prev, v_prev, float(t), p, v, _MAX_BISECT)
        t_prev, p_prev, v_prev = float(t), p, v
    return total


def _step_ratio(params: Params) -> float:
    return 0.3 / (1.0 + abs(float(params.c - params.a - params.b)))


def _snap(total: float) -> int:
    w = total / (2 * math.pi)
    k = round(w)
    if abs(w - k) > 0.1:
        raise ZeroSearchError(f"winding number {w:.4f} is not close to an integer")
    return int(k)


def winding_count(params: Params, radius: float, gap: float = KEYHOLE_GAP, prec: Precision = _CONTOUR_PREC) -> int:
    """Zeros of ``2F1`` inside ``|z| < radius`` off the cut, by the argument principle.

    The contour runs along the upper bank from ``1 + gap`` to ``radius``, once
    around the circle, back along the lower bank and clockwise around ``z = 1``.
    """
    if radius <= 1 + gap:
        raise ParameterError("radius must exceed 1 + gap")
    f = lambda pt: _value(params, pt, prec)  # noqa: E731
    span = (radius - 1) / gap

    def upper(t):
        return CutPlanePoint.on_cut(1 + gap * span**t, Bank.UPPER)

    def circle(t):
        if t <= 0.0:
            return CutPlanePoint.on_cut(radius, Bank.UPPER)
        if t >= 1.0:
            return CutPlanePoint.on_cut(radius, Bank.LOWER)
        return CutPlanePoint(radius * cmath.exp(2j * math.pi * t))

    def lower(t):
        return CutPlanePoint.on_cut(1 + gap * span ** (1 - t), Bank.LOWER)

    def small(t):
        if t <= 0.0:
            return CutPlanePoint.on_cut(1 + gap, Bank.LOWER)
        if t >= 1.0:
            return CutPlanePoint.on_cut(1 + gap, Bank.UPPER)
        return CutPlanePoint(1 + gap * cmath.exp(2j * math.pi * (1 - t)))

    rho = _step_ratio(params)
    total = sum(_track(f, path, n, rho) for path, n in ((upper, 48), (circle, 96), (lower, 48), (small, 24)))
    return _snap(total)


def _box_count(f, x0, x1, y0, y1, samples=16, rho=0.3) -> int:
    edges = (
        lambda t: complex(x0 + t * (x1 - x0), y0),
        lambda t: complex(x1, y0 + t * (y1 - y0)),
        lambda t: complex(x1 - t * (x1 - x0), y1),
        lambda t: complex(x0, y1 - t * (y1 - y0)),
    )
    return _snap(sum(_track(f, e, samples, rho) for e in edges))


def _newton(params: Params, z0: complex, prec: Precision, max_iter: int = 60):
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    z = ctx.mpc(z0)
    tol = ctx.mpf(10) ** (3 - prec.working_digits)
    for _ in range(max_iter):
        fz = ctx.hyp2f1(a, b, c, z)
        dz = a * b / c * ctx.hyp2f1(a + 1, b + 1, c + 1, z)
        if dz == 0:
            return None
        step = fz / dz
        z -= step
        if abs(step) <= tol * (1 + abs(z)):
            return z
    return None


def _isolate(params, f, box, count, prec, depth=0):
    x0, x1, y0, y1 = box
    if count == 0:
        return []
    width = max(x1 - x0, y1 - y0)
    centre = complex(0.5 * (x0 + x1), 0.5 * (y0 + y1))
    if count == 1 and width < 0.05 * (1 + abs(centre)):
        z = _newton(params, centre, prec)
        if z is not None:
            zc = complex(z)
            pad = 0.1 * width
            if x0 - pad <= zc.real <= x1 + pad and y0 - pad <= zc.imag <= y1 + pad and zc.imag > 0:
                return [z]
    if depth > 60:
        if count > 1:
            raise MultiplicityError(f"{count} zeros do not separate near {centre}")
        raise ZeroSearchError(f"Newton iteration failed near {centre}")
    for frac in (0.5037, 0.4871, 0.5219):
        xm = x0 + frac * (x1 - x0)
        ym = y0 + frac * (y1 - y0)
        parts = [(x0, xm, y0, ym), (xm, x1, y0, ym), (x0, xm, ym, y1), (xm, x1, ym, y1)]
        try:
            counts = [_box_count(f, *p, rho=_step_ratio(params)) for p in parts]
        except ZeroSearchError:
            continue
        if sum(counts) == count:
            break
    else:
        raise ZeroSearchError(f"quadrisection of box {box} lost zeros")
    out = []
    for p, k in zip(parts, counts):
        out.extend(_isolate(params, f, p, k, prec, depth + 1))
    return out


def _real_zeros(params: Params, radius: float, expected: int, prec: Precision) -> list:
    if expected == 0:
        return []
    def g(s):
        return _value(params, complex(1.0 - math.exp(s)), _CONTOUR_PREC).real

    lo, hi = math.log(1e-10), math.log(1.0 + radius)
    samples = 512
    for _ in range(5):
        ss = np.linspace(lo, hi, samples)
        vals = [g(float(s)) for s in ss]
        brackets = [(ss[i], ss[i + 1]) for i in range(samples - 1) if vals[i] == 0 or vals[i] * vals[i + 1] < 0]
        if len(brackets) == expected:
            break
        samples *= 2
    else:
        raise ZeroSearchError(f"sign scan found {len(brackets)} real zeros, expected {expected}")

    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    roots = []
    for s0, s1 in brackets:
        s = brentq(g, float(s0), float(s1), xtol=1e-15, rtol=4 * np.finfo(float).eps)
        x = ctx.mpf(1) - ctx.exp(ctx.mpf(s))
        # a few Newton steps at full precision
        for _ in range(8):
            fx = ctx.hyp2f1(a, b, c, x)
            dfx = a * b / c * ctx.hyp2f1(a + 1, b + 1, c + 1, x)
            if dfx == 0:
                break
            step = fx / dfx
            x -= step
            if abs(step) <= ctx.mpf(10) ** (3 - prec.working_digits) * (1 + abs(x)):
                break
        roots.append(x)
    return sorted(roots)


def _polynomial_zeros(params: Params, order: int, label: str, prec: Precision) -> list:
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    first, second = {"a": (a, b), "b": (b, a), "c-a": (c - a, c - b), "c-b": (c - b, c - a)}[label]
    first = ctx.mpf(-order)
    coeffs = [ctx.one]
    for k in range(order):
        coeffs.append(coeffs[-1] * (first + k) * (second + k) / ((c + k) * (k + 1)))
    if order == 0:
        return []
    approx = np.roots([float(v) for v in reversed(coeffs)])
    polished = []
    for z0 in approx:
        z = ctx.mpc(complex(z0))
        for _ in range(50):
            pv = ctx.polyval(list(reversed(coeffs)), z, derivative=True)
            if pv[1] == 0:
                break
            step = pv[0] / pv[1]
            z -= step
            if abs(step) <= ctx.mpf(10) ** (3 - prec.working_digits) * (1 + abs(z)):
                break
        polished.append(z)
    return polished


def _classify(z, scale_tol=1e-10) -> LocatedZero | None:
    zc = complex(z)
    if abs(zc.imag) <= scale_tol * (1 + abs(zc)):
        x = zc.real
        return LocatedZero(complex(x, 0.0), "real", on_cut=x > 1.0)
    if zc.imag > 0:
        return LocatedZero(zc, "complex-pair-representative")
    return None


def locate_zeros(params: Params, prec: Precision | None = None, shift: Shift | None = None) -> ZeroReport:
    """Find every zero counted by :func:`runckel_count` together with the
    residues of the ratio with numerator shift ``shift`` (default ``(0, 1, 1)``)
    at them.

    Raises :class:`ZeroSearchError` when fewer zeros are found than counted.
    """
    prec = prec or DEFAULT_PRECISION
    shift = DEFAULT_RESIDUE_SHIFT if shift is None else shift
    nu, degenerate = runckel_count(params)
    report = ZeroReport(count=nu, degenerate=degenerate, shift=shift)
    if nu == 0:
        return report

    if degenerate:
        order, label = _degenerate_order(params)
        found = [_classify(z) for z in _polynomial_zeros(params, order, label, prec)]
        report.zeros = sorted((z for z in found if z is not None), key=lambda z: (z.location.real, z.location.imag))
    else:
        radius = next(
            (R for gap in KEYHOLE_GAPS for R in RADIUS_SCHEDULE if winding_count(params, R, gap) == nu),
            None,
        )
        if radius is None:
            raise ZeroSearchError(f"keyhole count never reached {nu} up to |z| = {RADIUS_SCHEDULE[-1]}")
        report.radius = radius
        f = lambda z: _value(params, z, _CONTOUR_PREC)  # noqa: E731
        box = (-radius, radius, BOX_FLOOR, radius)
        n_upper = _box_count(f, *box, samples=64, rho=_step_ratio(params))
        n_real = nu - 2 * n_upper
        if n_real < 0:
            raise ZeroSearchError(f"upper half-plane holds {n_upper} zeros but only {nu} are counted")
        complex_zeros = _isolate(params, f, box, n_upper, prec)
        zeros = [LocatedZero(complex(x), "real") for x in _real_zeros(params, radius, n_real, prec)]
        zeros += [LocatedZero(complex(z), "complex-pair-representative") for z in complex_zeros]
        report.zeros = sorted(zeros, key=lambda z: (z.location.real, z.location.imag))

    if report.located_count() != nu:
        raise ZeroSearchError(f"located {report.located_count()} zeros, expected {nu}")

    residues, zeros = [], []
    for z in report.zeros:
        if shift.is_zero():
            residues.append(None)
            zeros.append(z)
            continue
        try:
            residues.append(complex(residue_at_pole(params, shift, _point(z), prec)))
            zeros.append(z)
        except MultiplicityError:
            residues.append(None)
            zeros.append(z._replace(simple=False))
    report.zeros, report.residues = zeros, residues
    return report


def _point(z) -> CutPlanePoint:
    if isinstance(z, LocatedZero):
        if z.on_cut:
            return CutPlanePoint.on_cut(z.location.real, Bank.UPPER)
        return CutPlanePoint(z.location)
    if isinstance(z, CutPlanePoint):
        return z
    return CutPlanePoint(complex(z))


def _derivative_scale(params: Params, pt: CutPlanePoint, prec: Precision) -> float:
    z = pt.z
    rho = min(1e-3 * (1 + abs(z)), 0.5 * abs(z - 1))
    angles = (0.0, 0.5, 1.0) if pt.bank is not None else (0.0, 0.5, 1.0, 1.5)
    biggest = 0.0
    for t in angles:
        w = z + rho * cmath.exp(1j * math.pi * t)
        if pt.bank is not None and abs(w.imag) < 1e-300:
            q = CutPlanePoint.on_cut(w.real, pt.bank) if w.real > 1 else CutPlanePoint(complex(w.real, 0.0))
        else:
            q = CutPlanePoint(w)
        biggest = max(biggest, abs(complex(hyp2f1(params, q, prec))))
    return biggest / rho


def residue_at_pole(params: Params, shift: Shift, beta, prec: Precision | None = None):
    """Residue of the ratio at a simple zero ``beta`` of the denominator: numerator over ``F'``."""
    prec = prec or DEFAULT_PRECISION
    if shift.is_zero():
        raise ParameterError("shift (0, 0, 0) gives the constant ratio 1; it has no poles")
    pt = _point(beta)
    deriv = hyp2f1_derivative(params, pt, prec)
    scale = _derivative_scale(params, pt, prec)
    if abs(complex(deriv)) < MULTIPLICITY_TOL * scale:
        raise MultiplicityError(f"the zero at {pt.z} is not simple (|F'| = {abs(complex(deriv)):.3g})")
    return hyp2f1(params.shifted(shift), pt, prec) / deriv


def residue_gauss(params: Params, beta, prec: Precision | None = None):
    """Residue of ``F(a, b+1; c+1; z) / F(a, b; c; z)`` at ``beta`` through the contiguous
    relation ``F' = (ab/c) F(a+1, b+1; c+1; z)``."""
    prec = prec or DEFAULT_PRECISION
    pt = _point(beta)
    a, b, c = params.as_tuple()
    ctx = prec.ctx
    num = hyp2f1(Params(a, b + 1, c + 1), pt, prec)
    den = hyp2f1(Params(a + 1, b + 1, c + 1), pt, prec)
    return to_mp(ctx, c) / (to_mp(ctx, a) * to_mp(ctx, b)) * num / den
