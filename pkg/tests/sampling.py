"""Seeded parameter samplers shared by the test modules."""

import math

import numpy as np

from hypratio import Params, Shift
from hypratio.zeros import pole_free_condition

MARGIN = 0.03


def _clear(values, margin=MARGIN):
    return all(abs(v - round(v)) >= margin for v in values)


def generic(params: Params, margin=MARGIN) -> bool:
    a, b, c = params.as_tuple()
    return _clear((a, b, c, c - a, c - b, a - b, c - a - b), margin)


def _draw(rng, condition):
    if condition == "I":
        lo = rng.uniform(-0.95, -0.1)
        hi = rng.uniform(lo + 0.05, -0.02)
        c = rng.uniform(lo, hi)
    elif condition == "II":
        lo = rng.uniform(-0.95, -0.05)
        hi = rng.uniform(0.05, 2.5)
        c = rng.uniform(hi, hi + 2.0)
    elif condition == "III":
        c = rng.uniform(-0.95, -0.1)
        lo = rng.uniform(c, -0.02)
        hi = rng.uniform(0.02, c + 1)
    else:
        c = rng.uniform(0.2, 3.5)
        lo = rng.uniform(0.02, c)
        hi = rng.uniform(lo, c + 1)
    a, b = (lo, hi) if rng.random() < 0.5 else (hi, lo)
    return Params(float(a), float(b), float(c))


def pole_free_params(rng, count, conditions=("I", "II", "III", "IV")):
    """``count`` generic triples spread over the pole-free conditions I-IV."""
    out = []
    i = 0
    while len(out) < count:
        cond = conditions[i % len(conditions)]
        p = _draw(rng, cond)
        if generic(p) and pole_free_condition(p) is not None:
            out.append(p)
            i += 1
    return out


def random_shift(rng, params, bound=3, nonzero=True):
    while True:
        s = Shift(*(int(v) for v in rng.integers(-bound, bound + 1, size=3)))
        if nonzero and s.is_zero():
            continue
        cm = params.c + s.m
        if abs(cm - round(cm)) < MARGIN and round(cm) <= 0:
            continue
        return s


def circle_grid():
    """20 points ``r e^{i theta}`` off the cut, a few of them close to it."""
    pts = []
    for r in (0.5, 0.95, 2.0, 12.0):
        for theta in (0.15, 1.1, 2.0, math.pi, -2.6):
            pts.append(r * complex(math.cos(theta), math.sin(theta)))
    return pts


def rng(seed):
    return np.random.default_rng(seed)
