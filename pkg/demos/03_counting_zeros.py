"""
Where does 2F1 vanish?
======================

A closed formula gives the number of zeros in the cut plane. The locator
confirms it with the argument principle on a keyhole contour, then isolates
and polishes every zero.
"""

from hypratio import Params, locate_zeros, pole_free_condition, runckel_count
from hypratio.zeros import xi_quadruple

for abc in [(0.5, 0.5, 1.5), (1.5, -0.5, 1.2), (-3.5, 0.3, -2.2), (-3, 0.7, 1.1), (4.25, 1.93, -1.73)]:
    params = Params(*abc)
    nu, degenerate = runckel_count(params)
    print(abc, "xi =", tuple(round(v, 3) for v in xi_quadruple(params).xi))
    print("   count", nu, "degenerate" if degenerate else "", "condition", pole_free_condition(params))
    report = locate_zeros(params)
    for zero, residue in zip(report.zeros, report.residues):
        pair = " (and its conjugate)" if zero.kind != "real" else ""
        print(f"   zero {zero.location:.12f}{pair}  residue of R_011 {residue:.6g}")
