"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import cmath
import math
import time

import numpy as np
import pytest

import printed
from hypratio.continuation import Bank, CutPlanePoint, hyp2f1, hyp2f1_boundary, principal_log1m
from hypratio.ratio_theory import (
    boundary_imag,
    coefficient_B,
    derive_indices,
    pr_fit_from_boundary,
    pr_polynomial,
)
from hypratio.representation import (
    Q_CORRECTION,
    T_MULTIPLIER,
    build_representation,
    eval_representation,
    product_r111_r001,
    product_stieltjes2,
    ratio_derivatives_fdb,
    ratio_direct,
    ratio_taylor_coeffs,
)
from hypratio.special_core import Params, Shift
from hypratio.zeros import locate_zeros, pole_free_condition, residue_at_pole, residue_gauss, runckel_count
from sampling import circle_grid, generic, pole_free_params, random_shift, rng

GAUSS = Shift(0, 1, 1)
G = math.gamma


@pytest.fixture
def verdict(capsys):
    def report(number, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {number} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return report


def rel_dev(value, oracle):
    value, oracle = complex(value), complex(oracle)
    return abs(value - oracle) / (1 + abs(oracle))


# 1 ---------------------------------------------------------------------------


def test_criterion_1_boundary_formula(verdict):
    start = time.perf_counter()
    gen = rng(101)
    worst, checked = 0.0, 0
    for params in pole_free_params(gen, 20):
        shift = random_shift(gen, params)
        for x in (1.1, 2.0, 10.0):
            im = complex(ratio_direct(params, shift, CutPlanePoint.on_cut(x, Bank.UPPER))).imag
            formula = float(boundary_imag(params, shift, x, Bank.UPPER))
            worst = max(worst, abs(formula - im) / (1 + abs(im)))
            checked += 1
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed <= 60
    verdict(1, ok, f"{checked} boundary values, max scaled deviation {worst:.2e} (<= 1e-8), {elapsed:.1f} s (<= 60 s)")


# 2 ---------------------------------------------------------------------------

LOG_CASES = [Params(0.5, 0.5, 1.5), Params(0.3, 0.7, 1.0), Params(0.8, 0.8, 1.3), Params(0.25, 1.25, 1.5)]


def test_criterion_2_pole_free_representation(verdict):
    start = time.perf_counter()
    gen = rng(202)
    cases = [(p, random_shift(gen, p)) for p in pole_free_params(gen, 50)]
    cases += [(p, random_shift(gen, p)) for p in LOG_CASES]
    grid = circle_grid()
    worst = worst_log = 0.0
    failures = []
    for params, shift in cases:
        rep = build_representation(params, shift)
        tol = 1e-6 if rep.logarithmic else 1e-8
        for z in grid:
            dev = rel_dev(eval_representation(rep, z), ratio_direct(params, shift, z))
            if rep.logarithmic:
                worst_log = max(worst_log, dev)
            else:
                worst = max(worst, dev)
            if dev > tol:
                failures.append((params.as_tuple(), shift.as_tuple(), z, dev))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 600
    verdict(
        2,
        ok,
        f"{len(cases)} triples x {len(grid)} points, max deviation {worst:.2e} (<= 1e-8), "
        f"logarithmic cases {worst_log:.2e} (<= 1e-6), {elapsed:.1f} s (<= 600 s)"
        + (f"; failures {failures[:3]}" if failures else ""),
    )


# 3 ---------------------------------------------------------------------------


def example3_regime(gen, count):
    out = [Params(1.5, -0.5, 1.2)]
    while len(out) < count:
        c = gen.uniform(0.1, 2.5)
        a = gen.uniform(c + 0.05, c + 0.95)
        b = gen.uniform(-0.95, -0.05)
        p = Params(float(a), float(b), float(c))
        if generic(p):
            out.append(p)
    return out


def test_criterion_3_general_representation(verdict):
    gen = rng(303)
    worst_repr = worst_res = 0.0
    located = True
    points = [-6.0, -1.0, -0.2, 0.5 + 0.5j, 0.1 - 0.8j, 2 + 2j, -3 - 1j, 8 + 0.5j]
    for params in example3_regime(gen, 5):
        report = locate_zeros(params)
        betas = [z.location for z in report.zeros]
        located &= report.count == 1 and len(betas) == 1 and betas[0].imag == 0 and 0 < betas[0].real < 1
        beta1 = betas[0].real
        residue = complex(residue_at_pole(params, GAUSS, beta1))
        worst_res = max(worst_res, abs(residue - complex(residue_gauss(params, beta1))))
        pts = points + [beta1 - 0.1, beta1 + 0.1j, CutPlanePoint.on_cut(2.5, Bank.UPPER)]
        for strategy in (Q_CORRECTION, T_MULTIPLIER):
            rep = build_representation(params, GAUSS, strategy)
            for z in pts:
                worst_repr = max(worst_repr, rel_dev(eval_representation(rep, z), ratio_direct(params, GAUSS, z)))
    ok = located and worst_repr <= 1e-8 and worst_res <= 1e-9
    verdict(
        3,
        ok,
        f"beta1 located in (0,1): {located}; both strategies max deviation {worst_repr:.2e} (<= 1e-8); "
        f"residue two-route gap {worst_res:.2e} (<= 1e-9)",
    )


# 4 ---------------------------------------------------------------------------


def _clear_of_integers(params, margin=1e-3):
    a, b, c = params.as_tuple()
    return all(abs(v - round(v)) >= margin for v in (a, b, c, c - a, c - b))


def test_criterion_4_zero_counting(verdict):
    start = time.perf_counter()
    gen = rng(4)
    count_mismatch, condition_mismatch, n, total_zeros = [], [], 0, 0
    while n < 100:
        params = Params(*(float(v) for v in gen.uniform(-5, 5, 3)))
        if not _clear_of_integers(params):
            continue
        n += 1
        nu, _ = runckel_count(params)
        report = locate_zeros(params)
        total_zeros += nu
        if report.located_count() != nu:
            count_mismatch.append((params.as_tuple(), nu, report.located_count()))
        if (pole_free_condition(params) is not None) != (nu == 0):
            condition_mismatch.append((params.as_tuple(), nu))
    elapsed = time.perf_counter() - start
    ok = not count_mismatch and not condition_mismatch and elapsed <= 300
    verdict(
        4,
        ok,
        f"{n} triples ({total_zeros} zeros): count mismatches {len(count_mismatch)}, "
        f"condition mismatches {len(condition_mismatch)}, {elapsed:.1f} s (<= 300 s)",
    )


# 5 ---------------------------------------------------------------------------


def test_criterion_5_polynomial_cross_check(verdict):
    gen = rng(505)
    worst, shifts = 0.0, 0
    params_pool = pole_free_params(gen, 10)
    while shifts < 30:
        params = params_pool[shifts % len(params_pool)]
        shift = random_shift(gen, params, bound=3)
        if not 0 <= derive_indices(shift).r <= 6 or coefficient_B(params, shift) == 0:
            continue
        exact = pr_polynomial(params, shift)
        fit = pr_fit_from_boundary(params, shift)
        for u, v in zip(fit.coeffs, exact.coeffs):
            worst = max(worst, float(abs(u - v) / abs(v)))
        shifts += 1

    gap_p0 = gap_prefactor = 0.0
    for params in params_pool:
        a, b, c = params.as_tuple()
        P0 = pr_polynomial(params, GAUSS).coeffs[0]
        gap_p0 = max(gap_p0, abs(float(P0) * b + 1))
        BP = float(coefficient_B(params, GAUSS) * P0)
        target = G(c) * G(c + 1) / (G(a) * G(b + 1) * G(c - a + 1) * G(c - b))
        gap_prefactor = max(gap_prefactor, abs(BP - target) / abs(target))
    ok = worst <= 1e-6 and gap_p0 <= 1e-10 and gap_prefactor <= 1e-10
    verdict(
        5,
        ok,
        f"{shifts} shifts with r <= 6: max coefficient deviation {worst:.2e} (<= 1e-6); "
        f"P_0 = -1/b gap {gap_p0:.2e}, prefactor gap {gap_prefactor:.2e} (<= 1e-10)",
    )


# 6 ---------------------------------------------------------------------------

TEN_POINTS = [-20.0, -3.0, -1.0, -0.25, 0.3, 0.8j, 0.6 + 0.6j, 3 + 1j, -2 - 5j, CutPlanePoint.on_cut(2.0, Bank.UPPER)]


def _as_z(pt):
    return pt.z if isinstance(pt, CutPlanePoint) else complex(pt)


def _bank(pt):
    return pt.bank if isinstance(pt, CutPlanePoint) else None


def test_criterion_6_examples(verdict):
    worst = {}

    def track(name, value, oracle):
        worst[name] = max(worst.get(name, 0.0), rel_dev(value, oracle))

    # c > a + b and c <= a + b
    for params in (Params(0.2, 0.3, 1.0), Params(0.5, 0.7, 1.0)):
        rep = build_representation(params, Shift(1, 1, 1))
        for pt in TEN_POINTS:
            oracle = ratio_direct(params, Shift(1, 1, 1), pt)
            track("example 1", printed.example1(params, _as_z(pt), _bank(pt)), oracle)
            track("example 1 (built)", eval_representation(rep, pt), oracle)

    for params in (Params(0.7, 0.9, 1.4), Params(0.3, 0.5, 1.6)):
        rep = build_representation(params, Shift(0, 0, -1), Q_CORRECTION, M=1, N=1)
        for pt in TEN_POINTS:
            oracle = ratio_direct(params, Shift(0, 0, -1), pt)
            track("example 2", printed.example2(params, _as_z(pt), _bank(pt)), oracle)
            track("example 2 (built)", eval_representation(rep, pt), oracle)

    params = Params(0.4, 0.8, 1.5)
    for pt in TEN_POINTS:
        track("example 3 pole-free", printed.example3(params, _as_z(pt), _bank(pt)), ratio_direct(params, GAUSS, pt))

    params = Params(1.5, -0.5, 1.2)
    report = locate_zeros(params)
    beta1, residue = report.zeros[0].location.real, report.residues[0]
    rep_t = build_representation(params, GAUSS, T_MULTIPLIER)
    rep_q = build_representation(params, GAUSS, Q_CORRECTION)
    for pt in TEN_POINTS[:-1]:
        z = _as_z(pt)
        oracle = ratio_direct(params, GAUSS, z)
        track("example 3 with (1 - t beta1)", printed.example3_multiplier(params, z, beta1), oracle)
        track("example 3 with A_1", printed.example3_residue(params, z, beta1, residue), oracle)
        track("example 3 (built, t)", eval_representation(rep_t, z), oracle)
        track("example 3 (built, q)", eval_representation(rep_q, z), oracle)

    ok = all(v <= 1e-8 for v in worst.values())
    verdict(6, ok, "max deviations " + ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + " (<= 1e-8)")


# 7 ---------------------------------------------------------------------------


def test_criterion_7_products(verdict):
    worst = 0.0
    points = [-10.0, -2.0, -0.5, 0.3 + 0.2j, 0.9j, 2 - 1j, CutPlanePoint.on_cut(3.0, Bank.LOWER)]
    for params in (Params(0.5, 0.7, 1.4), Params(0.3, 0.9, 2.2), Params(-0.3, 0.6, 1.7)):
        for pt in points:
            z = _as_z(pt)
            r111 = complex(ratio_direct(params, Shift(1, 1, 1), pt))
            r001 = complex(ratio_direct(params, Shift(0, 0, 1), pt))
            r00m = complex(ratio_direct(params, Shift(0, 0, -1), pt))
            worst = max(worst, rel_dev(product_r111_r001(params, pt), z * r111 * r001))
            worst = max(worst, rel_dev(product_stieltjes2(params, pt), r00m * r001))
    params = Params(0.5, 0.7, 1.4)
    values = [product_stieltjes2(params, x).real for x in (-10.0, -1.0, 0.0, 0.5)]
    increasing = all(u < v for u, v in zip(values, values[1:]))
    at_zero = abs(product_stieltjes2(params, 0.0) - 1)
    ok = worst <= 1e-8 and increasing and at_zero <= 1e-8
    verdict(
        7,
        ok,
        f"products max deviation {worst:.2e} (<= 1e-8); increasing on -10 < -1 < 0 < 0.5: {increasing}; "
        f"|value at 0 - 1| = {at_zero:.1e} (<= 1e-8)",
    )


# 8 ---------------------------------------------------------------------------


def test_criterion_8_structure(verdict):
    gen = rng(808)
    euler = pfaff = 0.0
    triples = []
    while len(triples) < 12:
        p = Params(*(float(v) for v in gen.uniform(-3, 3, 3)))
        if generic(p, 0.05):
            triples.append(p)
    pts = [CutPlanePoint(complex(z)) for z in (-7.0, -0.6, 0.4, 0.3 + 0.9j, 3 - 2j, -1 + 4j)]
    pts += [CutPlanePoint.on_cut(x, bank) for x in (1.5, 6.0) for bank in (Bank.UPPER, Bank.LOWER)]
    for p in triples:
        a, b, c = p.as_tuple()
        for pt in pts:
            lhs = complex(hyp2f1(p, pt))
            log1m = principal_log1m(pt.z) if pt.bank is None else principal_log1m(pt.z, pt.bank)
            rhs = cmath.exp((c - a - b) * log1m) * complex(hyp2f1(Params(c - a, c - b, c), pt))
            euler = max(euler, abs(lhs - rhs) / max(abs(lhs), 1e-3))
        for x in np.linspace(0.05, 0.95, 7):
            lhs = complex(hyp2f1(Params(a, c - b, c), x))
            rhs = (1 - x) ** (-a) * complex(hyp2f1(p, x / (x - 1)))
            pfaff = max(pfaff, abs(lhs - rhs) / abs(lhs))

    fdb = 0.0
    for p in triples[:8]:
        s = random_shift(gen, p)
        taylor = ratio_taylor_coeffs(p, s, 8)
        derivs = ratio_derivatives_fdb(p, s, 8)
        for n in range(9):
            fdb = max(fdb, float(abs(derivs[n] / math.factorial(n) - taylor[n]) / max(1, abs(taylor[n]))))

    robust = conj = 0.0
    conj_points = [0.4 + 0.3j, -4 + 1j, 3 + 2j]
    for p in pole_free_params(gen, 6):
        s = random_shift(gen, p)
        rep = build_representation(p, s)
        bigger = build_representation(p, s, M=rep.M + 1, N=rep.N + 1)
        for z in conj_points:
            v = eval_representation(rep, z)
            robust = max(robust, rel_dev(eval_representation(bigger, z), v))
            conj = max(conj, abs(eval_representation(rep, z.conjugate()) - v.conjugate()))
        up = eval_representation(rep, CutPlanePoint.on_cut(2.0, Bank.UPPER))
        down = eval_representation(rep, CutPlanePoint.on_cut(2.0, Bank.LOWER))
        conj = max(conj, abs(up - down.conjugate()))

    zero = max(abs(complex(hyp2f1_boundary(Params(1, -2, 0.8), 1.2, bank))) for bank in (Bank.UPPER, Bank.LOWER))
    ok = euler <= 1e-10 and pfaff <= 1e-10 and fdb <= 1e-10 and robust <= 1e-8 and conj <= 1e-14 and zero <= 1e-12
    verdict(
        8,
        ok,
        f"Euler {euler:.1e}, Pfaff {pfaff:.1e} (<= 1e-10); Taylor vs quotient rule to order 8 {fdb:.1e} (<= 1e-10); "
        f"(M+1, N+1) {robust:.1e} (<= 1e-8); conjugate symmetry {conj:.1e}; 2F1(1,-2;4/5;6/5) = {zero:.1e} (<= 1e-12)",
    )
