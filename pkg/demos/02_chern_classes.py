"""
Chern classes, Baum-Bott totals and the excess formula on P^n
==============================================================

A degree-d foliation on P^n has tangent sheaf O(1-d), so the total number
of singular points, counted with Milnor numbers, is the top Chern class of
TP^n(d-1).  It always equals 1 + d + ... + d^n.
"""

from foliamilnor import (SegreClass, baum_bott_total, chern_twisted_tangent, excess_contribution,
                         segre_complete_intersection, vainsencher_sum)

for n, d in [(2, 1), (2, 2), (3, 2), (4, 3)]:
    c = chern_twisted_tangent(n, d - 1)
    print(f"P^{n}, d = {d}:  c = {c}   total = {baum_bott_total(n, d)}   sum d^i = {sum(d ** i for i in range(n + 1))}")

# Segre classes of complete intersections in P^3
line = segre_complete_intersection(3, [1, 1])
conic = segre_complete_intersection(3, [1, 2])
print("\ns(line)  =", line.by_dimension)
print("s(conic) =", conic.by_dimension)

# contribution of a reduced line, resp. a conic, to a degree-2 foliation of P^3
E = chern_twisted_tangent(3, 1)
print("line contributes ", excess_contribution(E, line))
print("conic contributes", excess_contribution(E, conic))
print("same through the sum over codimensions:", vainsencher_sum(3, 2, line))

# a point of multiplicity m contributes m
print("fat point:", vainsencher_sum(3, 2, SegreClass(3, {0: 4})))
