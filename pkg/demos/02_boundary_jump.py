"""
The jump of a ratio across the cut
==================================

R(z) = 2F1(a+n1, b+n2; c+m; z) / 2F1(a, b; c; z). Its imaginary part on the
upper bank has a closed form: a gamma constant B times a polynomial P_r in
1/x, some powers of x and x - 1, over |2F1(a, b; c; x)|^2.
"""

import numpy as np

from hypratio import (
    Bank,
    CutPlanePoint,
    Params,
    Shift,
    boundary_imag,
    coefficient_B,
    derive_indices,
    pr_fit_from_boundary,
    pr_polynomial,
    ratio_direct,
)

params = Params(0.3, 0.7, 1.1)
shift = Shift(2, 0, 1)

idx = derive_indices(shift)
print(idx)  # r is the degree of P_r

P = pr_polynomial(params, shift)
print("B   =", coefficient_B(params, shift))
print("P_r =", [float(c) for c in P.coeffs])

# the same polynomial, recovered from sampled boundary values alone
fit = pr_fit_from_boundary(params, shift, xs=[1.5, 2, 3, 5])
print("fit =", [float(c) for c in fit.coeffs])

print(f"{'x':>6} {'formula':>22} {'direct':>22}")
for x in np.geomspace(1.05, 50, 6):
    formula = float(boundary_imag(params, shift, x))
    direct = complex(ratio_direct(params, shift, CutPlanePoint.on_cut(x, Bank.UPPER))).imag
    print(f"{x:6.2f} {formula:22.15e} {direct:22.15e}")

# for the Gauss ratio R_{0,1,1} the polynomial is the constant -1/b
print(pr_polynomial(params, Shift(0, 1, 1)).coeffs[0], -1 / 0.7)
