"""
Values of 2F1 across the branch cut
===================================

The Gauss function is analytic off [1, oo). On the cut itself there are two
boundary values, one from each side, and for real parameters they are complex
conjugates of each other.
"""

from hypratio import Bank, CutPlanePoint, Params, hyp2f1, hyp2f1_ode_oracle

params = Params(0.5, 0.5, 1.5)

for x in (1.01, 2.0, 10.0, 1000.0):
    up = complex(hyp2f1(params, CutPlanePoint.on_cut(x, Bank.UPPER)))
    down = complex(hyp2f1(params, CutPlanePoint.on_cut(x, Bank.LOWER)))
    print(f"x = {x:8g}   upper {up:.12f}   lower {down:.12f}")

# approaching from above lands on the upper bank
print(complex(hyp2f1(params, 2.0 + 1e-12j)))

# an independent check: integrate the hypergeometric ODE along a path that
# stays clear of z = 1
pt = CutPlanePoint.on_cut(2.0, Bank.UPPER)
print("ODE oracle:", hyp2f1_ode_oracle(params, pt))

# Terminating series can vanish on the cut. 2F1(1, -2; 4/5; z) is the
# quadratic 1 - 5z/2 + 25z^2/18 with roots 3/5 and 6/5.
p = Params(1, -2, 0.8)
print(complex(hyp2f1(p, CutPlanePoint.on_cut(1.2, Bank.UPPER))))
