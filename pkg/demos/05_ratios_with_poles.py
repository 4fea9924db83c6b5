"""
Ratios with poles
=================

For 0 < c < a < c + 1 and -1 < b < 0 the Gauss ratio F(a, b+1; c+1)/F(a, b; c)
has one real pole in (0, 1). It can be removed in two ways: subtract the
partial fraction A/(z - beta), or multiply through by (z - beta).
"""

from hypratio import Params, Shift, build_representation, eval_representation, locate_zeros, ratio_direct

params, shift = Params(1.5, -0.5, 1.2), Shift(0, 1, 1)
report = locate_zeros(params)
beta, residue = report.zeros[0].location.real, report.residues[0]
print(f"pole at {beta:.15f}, residue {residue.real:.15f}")

subtract = build_representation(params, shift, "q")
multiply = build_representation(params, shift, "t")
print("Q poles:", subtract.Q.poles)
print("T coefficients:", multiply.T.coeffs)

for z in (-3.0, 0.2, beta - 1e-3, 0.9 + 0.1j, 4 + 1j):
    q, t = eval_representation(subtract, z), eval_representation(multiply, z)
    d = complex(ratio_direct(params, shift, z))
    print(f"z = {z!s:>26}  {q:.12f}  {t:.12f}  {d:.12f}")

# the pole is visible in the representation itself
h = 1e-6
print((1j * h) * eval_representation(multiply, beta + 1j * h), residue)
