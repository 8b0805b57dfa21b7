"""
Milnor number of a singular curve by conservation of number
============================================================

The field (z1^2, z1^2, z2^2) on the chart x3 = 1 of P^3 has degree 2.  Its
singular set is the line C = {x0 = x1 = 0} together with the point
[1:1:1:0] on the plane at infinity.  Isolated points are counted exactly
chart by chart; the curve gets what is left of the Baum-Bott total.
"""

from foliamilnor import ComponentSpec, Foliation, milnor_at_point, milnor_by_conservation, parse_poly

R = ("z1", "z2", "z3")
F = Foliation.from_affine([parse_poly(s, R) for s in ["z1^2", "z1^2", "z2^2"]], chart=3, n=3)
print("degree", F.degree, "homogeneous field", [str(f) for f in F.homogeneous])
for j in range(4):
    print(f"  chart {j}:", [str(c) for c in F.chart_vector_field(j).components])

C = ComponentSpec.curve("C", ["x0", "x1"], F.coords, ci_degrees=[1, 1])
p = ComponentSpec.at_point("p", [1, 1, 1, 0])
report = milnor_by_conservation(F, [C, p])
print("\nBaum-Bott total:", report.baum_bott_total)
print("isolated points, by chart piece:", [(q["chart"], q["count"]) for q in report.pieces])
for c in report.components:
    print(f"  mu({c.name}) = {c.value}   [{c.method}]")

# the plane at infinity is invariant; restricted there, the field is
# (u1^2 - u1 u2^2, u1^2 - u2^3) and the point q = [0:0:1] is much worse
H = F.restrict_to_hyperplane(3)
print("\nrestricted field:", [str(c) for c in H.chart_vector_field(2).components])
print("mu at q on the plane:", milnor_at_point(H, [0, 0, 1]))
print("mu at p in P^3      :", milnor_at_point(F, p.point))
