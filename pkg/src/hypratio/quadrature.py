"""Cauchy transforms ``int_0^1 h(t) dt / (1 - z t)`` of densities with algebraic endpoint behaviour.

The default scheme is tanh-sinh (double exponential) quadrature. Density
values times weights do not depend on ``z``; they are computed once per
refinement level in multiprecision and cached as floats, so further evaluation
points only cost a vectorised kernel sum.

When ``1/z`` falls close to ``(0, 1)`` (in particular on the cut itself) the
cubic Taylor polynomial of ``h`` at ``Re(1/z)`` is subtracted and integrated
in closed form, which turns the principal value into an ordinary integral.

A composite Gauss-Jacobi rule with weights matched to the declared endpoint
exponents serves as an independent cross-check away from the cut.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from .continuation import Bank, principal_log1m
from .errors import ConvergenceError, ParameterError
from .special_core import DEFAULT_PRECISION, Precision

__all__ = [
    "QuadratureConfig",
    "QuadResult",
    "Density",
    "cauchy_transform",
    "DOUBLE_EXPONENTIAL",
    "GAUSS_JACOBI",
]

DOUBLE_EXPONENTIAL = "double-exponential"
GAUSS_JACOBI = "gauss-jacobi-composite"
_SCHEMES = (DOUBLE_EXPONENTIAL, GAUSS_JACOBI)

_U_CAP = 10.0
_TAIL = 1e-17
# refinement checks start at this level; coarser levels can agree by accident
_MIN_LEVEL = 3
_NEAR_CUT = 0.1
_SUBTRACT_DEGREE = 3
_LOG_END_TOL = 1e-9


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_levels: int = 12
    scheme: str = DOUBLE_EXPONENTIAL

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ParameterError("quadrature tolerances must be positive")
        if int(self.max_levels) < 1:
            raise ParameterError("max_levels must be positive")
        if self.scheme not in _SCHEMES:
            raise ParameterError(f"unknown quadrature scheme {self.scheme!r}")


@dataclass(frozen=True)
class QuadResult:
    value: complex
    level: int
    gap: float
    nodes: int


class Density:
    """A real density ``h`` on ``(0, 1)`` given as an mpmath callable ``fn(t, s)`` with ``s = 1 - t``.

    ``alpha`` and ``beta`` are the algebraic exponents of ``h`` at ``t = 0``
    and ``t = 1``; only the Gauss-Jacobi scheme uses them. An exponent of
    exactly ``-1`` is only integrable through an extra ``log^-2`` factor, whose
    tail tanh-sinh cannot reach; such densities switch to the steeper map
    ``v = 2 sinh(pi/2 sinh u)`` for ``log(t / (1-t))``.
    """

    def __init__(self, fn: Callable, prec: Precision | None = None, alpha: float = 0.0, beta: float = 0.0):
        self.fn = fn
        self.prec = prec or DEFAULT_PRECISION
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.log_ends = min(abs(self.alpha + 1), abs(self.beta + 1)) < _LOG_END_TOL
        self._lock = threading.Lock()
        self._de_window = None
        self._de_levels: list[tuple] = []
        self._gj_levels: dict[int, tuple] = {}

    def __call__(self, t, s=None):
        ctx = self.prec.ctx
        t = ctx.convert(t)
        return self.fn(t, 1 - t if s is None else ctx.convert(s))

    def taylor(self, t, degree: int) -> np.ndarray:
        """Taylor coefficients ``h^(j)(t) / j!`` for ``j <= degree`` as floats."""
        ctx = self.prec.ctx
        t = ctx.convert(t)
        derivs = ctx.diffs(lambda x: self.fn(x, 1 - x), t, degree)
        return np.array([float(d / math.factorial(j)) for j, d in enumerate(derivs)])

    # tanh-sinh nodes ---------------------------------------------------------

    def _de_node(self, u):
        ctx = self.prec.ctx
        u = ctx.convert(u)
        if self.log_ends:
            inner = ctx.pi / 2 * ctx.sinh(u)
            v = 2 * ctx.sinh(inner)
            dv = ctx.pi * ctx.cosh(u) * ctx.cosh(inner)
        else:
            v = ctx.pi * ctx.sinh(u)
            dv = ctx.pi * ctx.cosh(u)
        # t = 1 / (1 + e^-v) without overflow at either end
        if v >= 0:
            e = ctx.exp(-v)
            t, s = 1 / (1 + e), e / (1 + e)
        else:
            e = ctx.exp(v)
            t, s = e / (1 + e), 1 / (1 + e)
        w = dv * t * s
        if t == 0 or s == 0:
            return float(t), float(s), 0.0, 0.0
        g = self.fn(t, s) * w
        return float(t), float(s), float(g), float(w)

    def _window(self):
        if self._de_window is None:
            # the subtracted Taylor polynomial is integrated with the bare
            # weights, so both g and w have to be negligible at the window edge
            centre = self._de_node(0.0)
            g_max, w_max = abs(centre[2]), abs(centre[3])
            limits = []
            for sign in (1, -1):
                u = 0.0
                while True:
                    u += 0.5
                    node = self._de_node(sign * u)
                    g_max = max(g_max, abs(node[2]))
                    small = abs(node[2]) <= _TAIL * g_max and abs(node[3]) <= _TAIL * w_max
                    if (small and u >= 1.0) or u >= _U_CAP:
                        break
                limits.append(u)
            self._de_window = (limits[1], limits[0])
        return self._de_window

    def de_level(self, k: int):
        """Cumulative node arrays ``(t, s, g, w)`` with step ``2^-(k+1)``."""
        with self._lock:
            lo, hi = self._window()
            while len(self._de_levels) <= k:
                j = len(self._de_levels)
                step = 2.0 ** -(j + 1)
                n_lo, n_hi = int(round(lo / step)), int(round(hi / step))
                idx = range(-n_lo, n_hi + 1)
                if j > 0:
                    idx = [i for i in idx if i % 2]
                new = np.array([self._de_node(i * step) for i in idx], dtype=float).reshape(-1, 4)
                if j > 0:
                    new = np.vstack([self._de_levels[-1], new])
                self._de_levels.append(new)
            return self._de_levels[k], 2.0 ** -(k + 1)

    # composite Gauss-Jacobi nodes ----------------------------------------------

    def gj_level(self, k: int):
        with self._lock:
            if k not in self._gj_levels:
                self._gj_levels[k] = self._build_gj(k)
            return self._gj_levels[k]

    def _build_gj(self, k: int):
        ctx = self.prec.ctx
        n = 8 + 4 * k
        depth = 8 + 4 * k
        xl, wl = roots_legendre(n)
        rows = []

        def legendre(a, b):
            for x, w in zip(xl, wl):
                t = ctx.mpf(a) + (ctx.mpf(b) - a) * (1 + ctx.mpf(x)) / 2
                rows.append((t, 1 - t, (b - a) / 2 * w, None))

        # [0, 1/2] and [1/2, 1] graded geometrically towards the endpoints
        edges = [0.5 * 2.0**-i for i in range(depth)]
        for i in range(depth - 1):
            legendre(edges[i + 1], edges[i])
            b0, b1 = 1 - edges[i], 1 - edges[i + 1]
            for x, w in zip(xl, wl):
                s = ctx.mpf(edges[i + 1]) + (ctx.mpf(edges[i]) - edges[i + 1]) * (1 + ctx.mpf(x)) / 2
                rows.append((1 - s, s, (b1 - b0) / 2 * w, None))
        eps = edges[-1]
        # t^alpha on [0, eps]: weight (1 + x)^alpha after t = eps (1 + x) / 2
        xa, wa = roots_jacobi(n, 0.0, self.alpha)
        for x, w in zip(xa, wa):
            t = ctx.mpf(eps) * (1 + ctx.mpf(x)) / 2
            rows.append((t, 1 - t, (eps / 2) ** (self.alpha + 1) * w, ("t", self.alpha)))
        xb, wb = roots_jacobi(n, self.beta, 0.0)
        for x, w in zip(xb, wb):
            s = ctx.mpf(eps) * (1 - ctx.mpf(x)) / 2
            rows.append((1 - s, s, (eps / 2) ** (self.beta + 1) * w, ("s", self.beta)))

        out = []
        for t, s, w, singular in rows:
            h = self.fn(t, s)
            if singular is not None:
                var, expo = singular
                h = h / ctx.power(t if var == "t" else s, expo)
            out.append((float(t), float(s), float(h * w), float("nan")))
        return np.array(out, dtype=float)


def _kernel_sum(nodes: np.ndarray, z: complex, power: int) -> complex:
    s, g = nodes[:, 1], nodes[:, 2]
    den = (1 - z) + z * s
    return complex(np.sum(g / den**power))


def _subtracted_sum(nodes, z, t_star, taylor, power) -> complex:
    t, s, g, w = nodes[:, 0], nodes[:, 1], nodes[:, 2], nodes[:, 3]
    den = (1 - z) + z * s
    poly = np.polyval(taylor[::-1], t - t_star)
    num = g - poly * w
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(den == 0, 0.0, num / den**power)
    return complex(np.sum(terms))


def _shifted_moments(z: complex, bank: Bank | None, t_star: float, degree: int, power: int) -> list[complex]:
    """``int_0^1 (t - t_star)^j dt / (1 - z t)^power`` for ``j <= degree``."""
    first = [-principal_log1m(z, bank) / z]
    for k in range(degree):
        first.append((first[-1] - 1.0 / (k + 1)) / z)
    moments = first
    if power == 2:
        second = [1 / (1 - z)]
        for k in range(degree):
            second.append((second[-1] - first[k]) / z)
        moments = second
    return [
        sum(math.comb(j, i) * (-t_star) ** (j - i) * moments[i] for i in range(j + 1)) for j in range(degree + 1)
    ]


def _subtraction_point(z: complex, bank: Bank | None):
    if bank is not None:
        return 1.0 / z.real
    if z == 0:
        return None
    p = 1 / z
    if 0 < p.real < 1 and abs(p.imag) < _NEAR_CUT * min(p.real, 1 - p.real):
        return p.real
    return None


def cauchy_transform(
    density: Density,
    z: complex,
    bank: Bank | None = None,
    config: QuadratureConfig | None = None,
    power: int = 1,
) -> QuadResult:
    """``int_0^1 h(t) dt / (1 - z t)^power`` (``power`` 1 or 2); for real ``z > 1`` the bank selects ``z +/- i0``."""
    config = config or QuadratureConfig()
    if power not in (1, 2):
        raise ParameterError("kernel power must be 1 or 2")
    z = complex(z)
    if bank is None and z.imag == 0 and z.real >= 1:
        raise ParameterError("z lies on the cut; a bank is required")
    t_star = _subtraction_point(z, bank)

    if config.scheme == GAUSS_JACOBI:
        if t_star is not None:
            raise ParameterError("the Gauss-Jacobi cross-check needs z away from the cut")
        return _gj_transform(density, z, config, power)

    correction = 0j
    if t_star is not None:
        taylor = density.taylor(t_star, _SUBTRACT_DEGREE)
        moments = _shifted_moments(z, bank, t_star, _SUBTRACT_DEGREE, power)
        correction = sum(c * m for c, m in zip(taylor, moments))

    previous = None
    gap = math.inf
    for k in range(config.max_levels):
        nodes, step = density.de_level(k)
        if t_star is None:
            value = step * _kernel_sum(nodes, z, power)
        else:
            value = step * _subtracted_sum(nodes, z, t_star, taylor, power) + correction
        if previous is not None:
            gap = abs(value - previous)
            if k >= _MIN_LEVEL and gap <= max(config.abs_tol, config.rel_tol * abs(value)):
                return QuadResult(value, k, gap, len(nodes))
        previous = value
    raise ConvergenceError(
        f"tanh-sinh quadrature did not converge in {config.max_levels} levels (last gap {gap:.3g})",
        gap=gap,
    )


def _gj_transform(density: Density, z: complex, config: QuadratureConfig, power: int) -> QuadResult:
    previous = None
    gap = math.inf
    for k in range(min(config.max_levels, 6)):
        nodes = density.gj_level(k)
        value = _kernel_sum(nodes, z, power)
        if previous is not None:
            gap = abs(value - previous)
            if gap <= max(config.abs_tol, config.rel_tol * abs(value)):
                return QuadResult(value, k, gap, len(nodes))
        previous = value
    raise ConvergenceError(f"Gauss-Jacobi composite rule did not converge (last gap {gap:.3g})", gap=gap)
