"""
Watching the singular points of a perturbation fall onto the curve
===================================================================

Perturb the field to F_t = F + t R with a random R, solve the (finite)
singular set of F_t exactly at t0 = 1/64, and follow each point as t -> 0.
The limits sit on the singular curve or on the isolated singular points,
and counting them splits the Baum-Bott total.
"""

import numpy as np

from foliamilnor import ComponentSpec, Foliation, parse_poly, run_continuation

R = ("z1", "z2", "z3")
F = Foliation.from_affine([parse_poly(s, R) for s in ["z1^2", "z1^2", "z2^2"]], chart=3, n=3)
components = [ComponentSpec.curve("C", ["x0", "x1"], F.coords), ComponentSpec.at_point("p", [1, 1, 1, 0])]

res = run_continuation(F, components, seed=0)
print("perturbation:", res.family.describe()["perturbation"])
print("start points per chart piece:", [(q["chart"], q["count"]) for q in res.pieces])
print()
for path in res.paths:
    xi = path.homogeneous_end()
    xi = xi / xi[np.argmax(np.abs(xi))]
    label = res.attribution.labels.get(path.id, "?")
    print(f"path {path.id:2d}  chart {path.start_chart} -> {path.end_chart}  x{path.multiplicity}  "
          f"{path.status:9s}  end [{', '.join(f'{abs(a):.1e}' for a in xi)}]  -> {label}")

print("\ncounts:", res.counts(), " checks:", res.checks)
