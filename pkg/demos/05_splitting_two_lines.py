"""
Splitting the Milnor number between two singular lines
=======================================================

When the singular set contains two curves, conservation only gives their
sum.  The excess formula (valid for reduced smooth complete intersections)
gives 5 for any line under a degree-2 foliation of P^3; tracking shows that
one of the two lines actually carries 6.
"""

from foliamilnor import ComponentSpec, Foliation, milnor_by_conservation, milnor_curve_excess, parse_poly, run_continuation

R = ("z1", "z2", "z3")
X = ["z1*(z3-1) + 2*z2*(z1-1)", "3*z1*(z1-1) + 4*z2*(z3-1)", "z1*(5*(z1-1) + 6*(z3-1))"]
F = Foliation.from_affine([parse_poly(s, R) for s in X], chart=3, n=3)
C1 = ComponentSpec.curve("C1", ["x0", "x1"], F.coords, [1, 1])
C2 = ComponentSpec.curve("C2", ["x0 - x3", "x2 - x3"], F.coords, [1, 1])

report = milnor_by_conservation(F, [C1, C2])
print("Baum-Bott total", report.baum_bott_total, " isolated", report.isolated_total,
      " left for the curves", report.aggregate)
for C in (C1, C2):
    r = milnor_curve_excess(F, C)
    print(f"excess formula on {C.name}: {r.value}  {r.flags}")

for style, params in [("quadratic-pair", {"alpha": [7, 8, 9], "beta": [10, 11, 12]}), ("full", None)]:
    res = run_continuation(F, [C1, C2], seed=0, style=style, params=params)
    print(f"\n{style}: counts {res.counts()}, isolated {res.attribution.isolated}")
    for cl in res.attribution.isolated_clusters:
        print("  isolated cluster", cl["count"], "x at", cl["point"])
