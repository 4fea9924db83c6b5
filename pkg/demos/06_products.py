"""
Products of ratios
==================

Two products of contiguous ratios with their own integral forms: one splits
into Stieltjes integrals of orders one and two, the other is a constant plus a
pure order-two integral and so increases along (-oo, 1).
"""

import numpy as np

from hypratio import Params, Shift, product_r111_r001, product_stieltjes2, ratio_direct

params = Params(0.5, 0.7, 1.4)

for z in (-2.0, 0.3 + 0.2j):
    left = product_r111_r001(params, z)
    right = z * complex(ratio_direct(params, Shift(1, 1, 1), z)) * complex(ratio_direct(params, Shift(0, 0, 1), z))
    print(f"z R111 R001 at {z}: {left:.15f} vs {right:.15f}")

xs = np.array([-50, -10, -1, 0, 0.5, 0.9])
values = np.array([product_stieltjes2(params, x).real for x in xs])
print(np.column_stack([xs, values]))
print("increasing:", bool(np.all(np.diff(values) > 0)))
