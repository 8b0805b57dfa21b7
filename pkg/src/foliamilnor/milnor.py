"""Milnor numbers of foliations on P^n: at points, in total, and along curves.

Isolated singular points are counted exactly by partitioning P^n into the
pieces {x_j != 0, x_k = 0 for every chart k processed before j}; in each
piece the singular ideal is saturated by the declared curve components and
the remaining finite scheme is measured with quotient dimensions.  The
value along a single curve then follows from the Baum-Bott total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .chow import SegreClass, baum_bott_total, segre_complete_intersection, vainsencher_sum
from .foliation import ComponentSpec, Foliation, _chart_of, verify_component
from .ideal import (Ideal, buchberger, local_multiplicity, multiplicity_on_subvariety,
                    quotient_dimension, saturate_ideal)
from .poly import Polynomial, Scalar

__all__ = [
    "NotExhaustive",
    "ComponentResult",
    "MilnorReport",
    "milnor_at_point",
    "isolated_total",
    "isolated_pieces",
    "milnor_by_conservation",
    "milnor_curve_excess",
]

UNVERIFIED = "UNVERIFIED: reduced smooth complete intersection assumed"


class NotExhaustive(ValueError):
    def __init__(self, chart: int):
        self.chart = chart
        super().__init__(f"components do not exhaust the positive-dimensional singular locus (chart {chart})")


@dataclass
class ComponentResult:
    name: str
    kind: str
    method: str
    value: int | None
    flags: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"name": self.name, "kind": self.kind, "method": self.method,
                "value": self.value, "flags": list(self.flags)}


@dataclass
class MilnorReport:
    n: int
    degree: int
    baum_bott_total: int
    isolated_total: int
    components: list = field(default_factory=list)
    aggregate: int | None = None
    residuals: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    pieces: list = field(default_factory=list)

    def value(self, name: str, method: str | None = None) -> int | None:
        for c in self.components:
            if c.name == name and (method is None or c.method == method):
                return c.value
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "baum_bott_total": self.baum_bott_total,
            "isolated_total": self.isolated_total,
            "aggregate_curves": self.aggregate,
            "components": [c.to_dict() for c in self.components],
            "isolated_by_chart": list(self.pieces),
            "residuals": dict(self.residuals),
            "checks": dict(self.checks),
        }


def milnor_at_point(F: Foliation, point: Sequence) -> int:
    """Milnor number at an isolated singular point given in homogeneous coordinates."""
    pt = [Scalar.coerce(a) for a in point]
    if len(pt) != F.n + 1:
        raise ValueError(f"point needs {F.n + 1} homogeneous coordinates")
    j = _chart_of(pt)
    z = [a / pt[j] for k, a in enumerate(pt) if k != j]
    if not F.is_singular_at(pt):
        raise ValueError(f"[{':'.join(str(a) for a in pt)}] is not a singular point")
    return local_multiplicity(F.singular_ideal(j), z)


def _finite_part(F: Foliation, j: int, curves: Sequence[ComponentSpec]) -> Ideal:
    J = F.singular_ideal(j)
    for C in curves:
        Cj = C.chart_ideal(j)
        if buchberger(Cj).is_unit():
            continue
        J = saturate_ideal(J, Cj)
    return J


def isolated_pieces(F: Foliation, curves: Sequence[ComponentSpec], order: Sequence[int] | None = None) -> list:
    """Per-chart counts of isolated singular points, each point counted once."""
    if order is None:
        order = range(F.n, -1, -1)
    order = list(order)
    if sorted(order) != list(range(F.n + 1)):
        raise ValueError(f"chart order {order} is not a permutation of 0..{F.n}")
    pieces = []
    done: list = []
    for j in order:
        J = _finite_part(F, j, curves)
        G = buchberger(J)
        total = quotient_dimension(G)
        if total == math.inf:
            raise NotExhaustive(j)
        ring = F.chart_ring(j)
        W = Ideal(ring, [Polynomial.variable(ring, F.coords[k]) for k in done])
        if total == 0:
            count = 0
        elif not W.generators:
            count = total
        else:
            count = multiplicity_on_subvariety(J, W)
        pieces.append({"chart": j, "zero_on": [F.coords[k] for k in done], "count": count})
        done.append(j)
    return pieces


def isolated_total(F: Foliation, curves: Sequence[ComponentSpec], order: Sequence[int] | None = None) -> int:
    """Sum of Milnor numbers over all isolated singular points, complex ones included."""
    return sum(p["count"] for p in isolated_pieces(F, curves, order))


def milnor_by_conservation(F: Foliation, components: Sequence[ComponentSpec],
                           verify: bool = True) -> MilnorReport:
    for C in components:
        if verify:
            verify_component(F, C)
    curves = [C for C in components if C.kind == "curve"]
    points = [C for C in components if C.kind == "point"]
    bb = baum_bott_total(F.n, F.degree)
    pieces = isolated_pieces(F, curves)
    iso = sum(p["count"] for p in pieces)
    report = MilnorReport(F.n, F.degree, bb, iso, pieces=pieces)
    aggregate = bb - iso
    report.aggregate = aggregate
    if len(curves) == 1:
        report.components.append(ComponentResult(curves[0].name, "curve", "conservation", aggregate))
    else:
        for C in curves:
            report.components.append(ComponentResult(
                C.name, "curve", "conservation", None, ["requires continuation or excess"]))
    point_sum = 0
    for C in points:
        mu = milnor_at_point(F, C.point)
        point_sum += mu
        report.components.append(ComponentResult(C.name, "point", "local", mu))
    report.checks["conservation"] = aggregate >= 0 and (bool(curves) or aggregate == 0)
    if points:
        report.checks["declared_points_within_isolated"] = point_sum <= iso
    return report


@dataclass
class ExcessResult:
    value: int
    flags: list
    warnings: list


def milnor_curve_excess(F: Foliation, C: ComponentSpec) -> ExcessResult:
    """Milnor number along C from the excess-intersection formula.

    Only valid when C is a reduced smooth complete intersection whose scheme
    structure inside Sing(F) is reduced; only set-theoretic containment is
    checked, so the result is flagged as unverified.
    """
    warnings = []
    if C.kind == "point":
        m = milnor_at_point(F, C.point)
        return ExcessResult(vainsencher_sum(F.n, F.degree, SegreClass(F.n, {0: m})), [], [])
    verify_component(F, C)
    degrees = list(C.ci_degrees) if C.ci_degrees is not None else C.generator_degrees()
    if sorted(degrees) != C.generator_degrees():
        warnings.append(f"declared degrees {sorted(degrees)} differ from generator degrees {C.generator_degrees()}")
    s = segre_complete_intersection(F.n, degrees)
    return ExcessResult(vainsencher_sum(F.n, F.degree, s), [UNVERIFIED], warnings)
