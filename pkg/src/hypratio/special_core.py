"""Scalar building blocks: parameter records, precision handling, Pochhammer
symbols, the reciprocal gamma function and power-series hypergeometric sums.

All arithmetic runs in an :class:`mpmath.MPContext` owned by the calling
thread, so different threads can use different working precisions without
touching mpmath's global state.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Real

import mpmath

from .errors import ConvergenceError, ParameterError, SingularTermError

__all__ = [
    "INTEGER_TOL",
    "Params",
    "Shift",
    "Precision",
    "DEFAULT_PRECISION",
    "nearest_integer",
    "is_nonpositive_integer",
    "in_n0",
    "to_mp",
    "rising_factorial",
    "pochhammer",
    "reciprocal_gamma",
    "hyp2f1_series",
    "hyp4f3_terminating",
]

#: Distance below which a real parameter is treated as an exact integer.
INTEGER_TOL = 1e-12

_local = threading.local()


def _context(dps: int) -> mpmath.ctx_mp.MPContext:
    cache = getattr(_local, "contexts", None)
    if cache is None:
        cache = _local.contexts = {}
    ctx = cache.get(dps)
    if ctx is None:
        ctx = mpmath.MPContext()
        ctx.dps = dps
        cache[dps] = ctx
    return ctx


def nearest_integer(x, tol: float = INTEGER_TOL) -> int | None:
    """Return ``round(x)`` when ``x`` lies within ``tol`` of it, else ``None``."""
    xf = float(x)
    k = round(xf)
    if abs(xf - k) <= tol:
        return int(k)
    return None


def is_nonpositive_integer(x, tol: float = INTEGER_TOL) -> bool:
    """True when ``x`` belongs to ``-N0 = {0, -1, -2, ...}``."""
    k = nearest_integer(x, tol)
    return k is not None and k <= 0


def in_n0(x, tol: float = INTEGER_TOL) -> bool:
    """True when ``x`` belongs to ``N0 = {0, 1, 2, ...}``."""
    k = nearest_integer(x, tol)
    return k is not None and k >= 0


@dataclass(frozen=True)
class Precision:
    """Working precision for every mpmath computation in the package.

    ``series_tolerance`` is the relative size of a term below which power
    series are truncated; ``max_terms`` bounds the number of terms summed.
    """

    working_digits: int = 30
    series_tolerance: float = 1e-32
    max_terms: int = 50_000

    def __post_init__(self):
        if int(self.working_digits) < 1:
            raise ParameterError("working_digits must be positive")
        if not self.series_tolerance > 0:
            raise ParameterError("series_tolerance must be positive")
        if int(self.max_terms) < 1:
            raise ParameterError("max_terms must be >= 1")

    @property
    def ctx(self):
        """Thread-local mpmath context running at ``working_digits``."""
        return _context(int(self.working_digits))

    def boosted(self, extra_digits: int) -> "Precision":
        return Precision(
            working_digits=int(self.working_digits) + int(extra_digits),
            series_tolerance=self.series_tolerance * 10.0 ** (-int(extra_digits)),
            max_terms=self.max_terms,
        )


DEFAULT_PRECISION = Precision()


def to_mp(ctx, x):
    """Convert ints, floats, fractions and mpmath numbers into ``ctx`` numbers."""
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    if isinstance(x, complex):
        return ctx.mpc(x)
    return ctx.convert(x)


def _check_real(name, x):
    if isinstance(x, (Real, Fraction)):
        return x
    if isinstance(x, mpmath.mpf) or type(x).__name__ == "mpf":
        return x
    raise ParameterError(f"{name} must be real, got {x!r}")


@dataclass(frozen=True)
class Params:
    """Real parameters ``(a, b, c)`` of the base function ``2F1(a, b; c; z)``."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            _check_real(name, getattr(self, name))
        if is_nonpositive_integer(self.c):
            raise ParameterError(f"c = {self.c} is a non-positive integer; 2F1 is undefined")

    def shifted(self, shift: "Shift") -> "Params":
        return Params(self.a + shift.n1, self.b + shift.n2, self.c + shift.m)

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def is_degenerate(self) -> bool:
        """Some of ``a, b, c-a, c-b`` lies in ``-N0``."""
        a, b, c = self.a, self.b, self.c
        return any(is_nonpositive_integer(v) for v in (a, b, c - a, c - b))


@dataclass(frozen=True)
class Shift:
    """Integer offsets ``(n1, n2, m)`` of the numerator function."""

    n1: int = 0
    n2: int = 0
    m: int = 0

    def __post_init__(self):
        for name in ("n1", "n2", "m"):
            v = getattr(self, name)
            if not isinstance(v, Integral):
                raise ParameterError(f"{name} must be an integer, got {v!r}")

    def as_tuple(self):
        return (self.n1, self.n2, self.m)

    def is_zero(self) -> bool:
        return self.n1 == 0 and self.n2 == 0 and self.m == 0


def rising_factorial(a, n: int, prec: Precision | None = None):
    """Pochhammer symbol ``(a)_n = a (a+1) ... (a+n-1)`` for ``n >= 0``."""
    if n < 0:
        raise ParameterError("rising_factorial needs n >= 0; use pochhammer for negative n")
    ctx = (prec or DEFAULT_PRECISION).ctx
    x = to_mp(ctx, a)
    out = ctx.one
    for k in range(int(n)):
        out *= x + k
    return out


def pochhammer(x, n: int, prec: Precision | None = None):
    """``Gamma(x+n)/Gamma(x)`` for any integer ``n`` (negative allowed).

    For ``n < 0`` this is ``1/((x-1)(x-2)...(x+n))``; a vanishing factor raises
    :class:`SingularTermError`.
    """
    ctx = (prec or DEFAULT_PRECISION).ctx
    if n >= 0:
        return rising_factorial(x, n, prec)
    xm = to_mp(ctx, x)
    den = ctx.one
    for k in range(1, -int(n) + 1):
        den *= xm - k
    if den == 0:
        raise SingularTermError(f"pochhammer({x}, {n}) has a pole", index=n)
    return 1 / den


def reciprocal_gamma(x, prec: Precision | None = None):
    """``1/Gamma(x)``; exactly zero at ``x`` in ``-N0``."""
    ctx = (prec or DEFAULT_PRECISION).ctx
    if is_nonpositive_integer(x, tol=0.0):
        return ctx.zero
    return ctx.rgamma(to_mp(ctx, x))


def hyp2f1_series(params: Params, z, prec: Precision | None = None):
    """Partial sum of the Gauss series at ``z``.

    The series is summed until three consecutive terms fall below
    ``series_tolerance`` relative to the partial sum. Terminating series
    (``-a`` or ``-b`` in ``N0``) are summed exactly for any ``z``.
    """
    prec = prec or DEFAULT_PRECISION
    ctx = prec.ctx
    a, b, c = (to_mp(ctx, v) for v in params.as_tuple())
    zz = to_mp(ctx, z)

    degrees = [-k for k in (nearest_integer(params.a), nearest_integer(params.b)) if k is not None and k <= 0]
    if degrees:
        n_stop = min(degrees)
        term = ctx.one
        total = ctx.one
        for n in range(n_stop):
            term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * zz
            total += term
        return total

    if abs(zz) >= 1:
        raise ParameterError(f"hyp2f1_series needs |z| < 1 for a non-terminating series, got |z| = {float(abs(zz))}")

    tol = prec.series_tolerance
    term = ctx.one
    total = ctx.one
    small = 0
    for n in range(prec.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * zz
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small == 3:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"2F1 series did not converge in {prec.max_terms} terms at |z| = {float(abs(zz))}",
        gap=float(abs(term)),
    )


def hyp4f3_terminating(top, bottom, prec: Precision | None = None):
    """Terminating ``4F3(top; bottom; 1)`` whose first top entry is in ``-N0``.

    Only the terms up to the termination index are formed; a bottom
    Pochhammer that vanishes earlier raises :class:`SingularTermError`.
    """
    if len(top) != 4 or len(bottom) != 3:
        raise ParameterError("hyp4f3_terminating needs four top and three bottom parameters")
    n = nearest_integer(top[0])
    if n is None or n > 0:
        raise ParameterError(f"first top parameter must be a non-positive integer, got {top[0]!r}")
    prec = prec or DEFAULT_PRECISION
    ctx = prec.ctx
    up = [to_mp(ctx, v) for v in top]
    up[0] = ctx.mpf(n)
    lo = [to_mp(ctx, v) for v in bottom]
    term = ctx.one
    total = ctx.one
    for k in range(-n):
        den = lo[0] + k
        den = den * (lo[1] + k) * (lo[2] + k)
        if den == 0:
            raise SingularTermError(
                f"bottom Pochhammer vanishes at index {k + 1} of a 4F3 terminating at {-n}",
                index=k + 1,
                term="4F3",
            )
        term *= (up[0] + k) * (up[1] + k) * (up[2] + k) * (up[3] + k) / (den * (k + 1))
        total += term
    return total
