"""
Stieltjes-type representation without poles
===========================================

When 2F1(a, b; c; z) has no zeros, every ratio R is a short polynomial part
plus a Cauchy integral of its boundary jump. The orders (M, N) are chosen from
the behaviour of R at z = 1 and at infinity.
"""

from hypratio import Params, Shift, build_representation, eval_representation, ratio_direct

params = Params(0.5, 0.7, 1.0)  # c <= a + b: R_111 is not integrable at z = 1
rep = build_representation(params, Shift(1, 1, 1))
print(rep.strategy, "M =", rep.M, "N =", rep.N, "sum =", rep.sum_coeffs)
print("density exponents at t = 0 and t = 1:", rep.endpoint_exponents)

for z in (-10.0, -1.0, 0.5 + 0.5j, 3 - 2j):
    value = eval_representation(rep, z)
    print(f"z = {z!s:>10}  representation {value:.15f}  direct {complex(ratio_direct(params, Shift(1, 1, 1), z)):.15f}")

# larger orders are admissible too and give the same function
bigger = build_representation(params, Shift(1, 1, 1), M=2, N=2)
print(abs(eval_representation(bigger, -1.0) - eval_representation(rep, -1.0)))

# a ratio whose limit at infinity is kept as the constant Q
rep = build_representation(Params(0.7, 0.9, 1.4), Shift(0, 0, -1), "q")
print("Q =", rep.Q(0), "expected", (1.4 - 0.7 - 1) / 0.4)
