"""One-dimensional foliations on complex projective space.

A degree-d foliation on P^n is stored twice: as a homogeneous vector field
``F = (F_0, ..., F_n)`` of degree d (defined up to adding a multiple of the
radial field), and as one affine vector field per standard chart
``U_j = {x_j != 0}``.  The chart field is

    v_i = F_i(x)|_{x_j=1} - x_i * F_j(x)|_{x_j=1},   i != j,

whose variables keep the homogeneous names, so chart ``j`` uses every
coordinate name except ``coords[j]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .ideal import Ideal, buchberger, krull_dimension
from .poly import Polynomial, Scalar, make_ring, parse_poly

__all__ = [
    "AffineVectorField",
    "Foliation",
    "ComponentSpec",
    "CodimensionError",
    "degree_of",
    "default_coords",
    "chart_ring",
    "dehomogenize",
    "homogenize",
    "check_cocycle",
]


class CodimensionError(ValueError):
    pass


def default_coords(n: int) -> tuple:
    return tuple(f"x{i}" for i in range(n + 1))


def chart_ring(coords: Sequence[str], j: int) -> tuple:
    return tuple(c for k, c in enumerate(coords) if k != j)


def dehomogenize(p: Polynomial, j: int) -> Polynomial:
    """Set the j-th variable of p's ring to 1 and drop it from the ring."""
    ring = chart_ring(p.ring, j)
    terms: dict = {}
    for e, c in p.terms.items():
        e2 = e[:j] + e[j + 1:]
        s = terms.get(e2)
        terms[e2] = c if s is None else s + c
    return Polynomial(ring, terms)


def homogenize(p: Polynomial, coords: Sequence[str], j: int, degree: int | None = None) -> Polynomial:
    """Homogenize a chart-j polynomial with respect to ``coords[j]``."""
    coords = tuple(coords)
    if p.ring != chart_ring(coords, j):
        p = p.to_ring(chart_ring(coords, j))
    if degree is None:
        degree = max(p.degree(), 0)
    terms = {}
    for e, c in p.terms.items():
        k = degree - sum(e)
        if k < 0:
            raise ValueError(f"term of degree {sum(e)} exceeds homogenizing degree {degree}")
        terms[e[:j] + (k,) + e[j:]] = c
    return Polynomial(coords, terms)


def degree_of(components: Sequence[Polynomial]) -> tuple[int, bool]:
    """Foliation degree of an affine field, and whether infinity is invariant.

    If the top-degree part of the field is g times the radial field, the
    degree drops by one and the hyperplane at infinity is not invariant.
    """
    ring = components[0].ring
    m = max(c.degree() for c in components)
    if m < 0:
        raise ValueError("vector field is identically zero")
    if m == 0:
        return 0, True
    tops = [c.homogeneous_part(m) for c in components]
    g = None
    radial = True
    for name, top in zip(ring, tops):
        if top.is_zero() or top.content_power(name) < 1:
            radial = False
            break
        q = top.divide_by_power(name, 1)
        if g is None:
            g = q
        elif q != g:
            radial = False
            break
    if radial:
        return m - 1, False
    return m, True


@dataclass(frozen=True)
class AffineVectorField:
    chart: int
    ring: tuple
    components: tuple

    def derivative(self, f: Polynomial) -> Polynomial:
        """Lie derivative of f along the field."""
        total = Polynomial.zero(self.ring)
        for name, v in zip(self.ring, self.components):
            total = total + v * f.diff(name)
        return total

    def __call__(self, point: Sequence) -> list:
        return [c.evaluate(point) for c in self.components]

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True, eq=False)
class Foliation:
    """Degree-d one-dimensional foliation on P^n.

    Build with :meth:`from_affine` or :meth:`from_homogeneous`; both check
    that the singular set has codimension at least two in every chart.
    """

    n: int
    degree: int
    coords: tuple
    homogeneous: tuple
    input_chart: int
    infinity_invariant: bool
    charts: dict = field(repr=False)

    @classmethod
    def from_affine(cls, components: Sequence[Polynomial], chart: int, n: int,
                    coords: Sequence[str] | None = None) -> "Foliation":
        coords = make_ring(coords or default_coords(n))
        if len(coords) != n + 1:
            raise ValueError(f"expected {n + 1} homogeneous coordinates, got {len(coords)}")
        if not 0 <= chart <= n:
            raise ValueError(f"chart {chart} out of range for P^{n}")
        if len(components) != n:
            raise ValueError(f"expected {n} components for P^{n}, got {len(components)}")
        ring = chart_ring(coords, chart)
        rings = {c.ring for c in components}
        if len(rings) != 1:
            raise ValueError(f"components live in different rings: {sorted(rings)}")
        src = rings.pop()
        if len(src) != n:
            raise ValueError(f"component ring {src} must have {n} variables")
        comps = [c.rename(dict(zip(src, ring))) if src != ring else c for c in components]
        if all(c.is_zero() for c in comps):
            raise ValueError("vector field is identically zero")
        d, inv = degree_of(comps)
        X = [Polynomial.variable(ring, v) for v in ring]
        if inv:
            hom = [homogenize(c, coords, chart, d) for c in comps]
            Fj = Polynomial.zero(coords)
        else:
            m = d + 1
            g = comps[0].homogeneous_part(m).divide_by_power(ring[0], 1)
            hom = [homogenize(c - g * x, coords, chart, d) for c, x in zip(comps, X)]
            Fj = -homogenize(g, coords, chart, d)
        F = hom[:chart] + [Fj] + hom[chart:]
        return cls.from_homogeneous(F, coords, input_chart=chart, infinity_invariant=inv, expected=comps)

    @classmethod
    def from_homogeneous(cls, F: Sequence[Polynomial], coords: Sequence[str] | None = None,
                         input_chart: int | None = None, infinity_invariant: bool | None = None,
                         expected=None) -> "Foliation":
        n = len(F) - 1
        coords = make_ring(coords or F[0].ring)
        F = [f.to_ring(coords) for f in F]
        degrees = {f.degree() for f in F if f}
        if not degrees:
            raise ValueError("vector field is identically zero")
        if len(degrees) != 1 or not all(f.is_homogeneous() for f in F):
            raise ValueError("homogeneous components must share one degree")
        d = degrees.pop()
        xs = [Polynomial.variable(coords, v) for v in coords]
        if all((F[a] * xs[b] - F[b] * xs[a]).is_zero() for a in range(n + 1) for b in range(a)):
            raise ValueError("field is a multiple of the radial field and defines no foliation")
        if input_chart is None:
            input_chart = n
        if infinity_invariant is None:
            infinity_invariant = F[input_chart].content_power(coords[input_chart]) >= 1
        charts = {}
        for j in range(n + 1):
            charts[j] = _chart_field(F, coords, j, coords[input_chart])
        if expected is not None and list(charts[input_chart].components) != list(expected):
            raise AssertionError("homogenization does not reproduce the input chart field")
        fol = cls(n, d, coords, tuple(F), input_chart, infinity_invariant, charts)
        for j in range(n + 1):
            dim = krull_dimension(buchberger(fol.singular_ideal(j)))
            # on P^1 isolated zeros are all one can ask for
            if dim > max(n - 2, 0):
                raise CodimensionError(
                    f"singular set has codimension {n - dim} < 2 in chart {j} "
                    f"(dimension {dim}); remove the common factor of the components")
        return fol

    # -- views ---------------------------------------------------------
    def chart_vector_field(self, j: int) -> AffineVectorField:
        if not 0 <= j <= self.n:
            raise ValueError(f"chart {j} out of range for P^{self.n}")
        return self.charts[j]

    def chart_ring(self, j: int) -> tuple:
        return chart_ring(self.coords, j)

    def singular_ideal(self, j: int) -> Ideal:
        v = self.chart_vector_field(j)
        return Ideal(v.ring, v.components)

    def is_invariant(self, f: Polynomial, chart: int) -> bool:
        """Whether V(f) is invariant: v(f) lies in the ideal (f)."""
        if f.is_zero():
            raise ValueError("invariance test needs a nonzero polynomial")
        v = self.chart_vector_field(chart)
        f = f.to_ring(v.ring)
        return buchberger(Ideal(v.ring, [f])).contains(v.derivative(f))

    def is_singular_at(self, point: Sequence) -> bool:
        """Exact test at a homogeneous point."""
        j = _chart_of(point)
        z = [Scalar.coerce(a) / Scalar.coerce(point[j]) for k, a in enumerate(point) if k != j]
        return all(not c for c in self.chart_vector_field(j)(z))

    def restrict_to_hyperplane(self, k: int) -> "Foliation":
        """Restriction to the invariant coordinate hyperplane {x_k = 0}."""
        if not 0 <= k <= self.n:
            raise ValueError(f"hyperplane index {k} out of range")
        if self.n < 2:
            raise ValueError("restriction needs n >= 2")
        j = next(c for c in range(self.n + 1) if c != k)
        if not self.is_invariant(Polynomial.variable(self.chart_ring(j), self.coords[k]), j):
            raise ValueError(f"hyperplane {{{self.coords[k]} = 0}} is not invariant")
        coords = chart_ring(self.coords, k)
        F = [_set_zero(f, k) for i, f in enumerate(self.homogeneous) if i != k]
        if self.input_chart == k:
            chart = len(coords) - 1
        else:
            chart = coords.index(self.coords[self.input_chart])
        return Foliation.from_homogeneous(F, coords, input_chart=chart)

    def summary(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "coords": list(self.coords),
            "homogeneous": [str(f) for f in self.homogeneous],
            "input_chart": self.input_chart,
            "infinity_invariant": self.infinity_invariant,
        }


def _set_zero(f: Polynomial, k: int) -> Polynomial:
    ring = chart_ring(f.ring, k)
    return Polynomial(ring, {e[:k] + e[k + 1:]: c for e, c in f.terms.items() if e[k] == 0})


def _chart_field(F, coords, j, former) -> AffineVectorField:
    ring = chart_ring(coords, j)
    Fj = dehomogenize(F[j], j)
    comps = []
    for i, name in enumerate(coords):
        if i == j:
            continue
        comps.append(dehomogenize(F[i], j) - Polynomial.variable(ring, name) * Fj)
    if former in ring and any(comps):
        e = min(c.content_power(former) for c in comps if c)
        if e:
            comps = [c.divide_by_power(former, e) for c in comps]
    return AffineVectorField(j, ring, tuple(comps))


def _chart_of(point: Sequence) -> int:
    pt = [Scalar.coerce(a) for a in point]
    nz = [k for k, a in enumerate(pt) if a]
    if not nz:
        raise ValueError("the zero vector is not a projective point")
    return nz[-1]


def check_cocycle(F: Foliation, samples: int = 20, seed: int = 0) -> bool:
    """Check that chart fields agree up to a scalar on random overlap points.

    The chart-j field is pushed forward through the coordinate change
    U_j -> U_k and compared with the native chart-k field.
    """
    rng = random.Random(seed)
    n = F.n
    for _ in range(samples):
        j, k = rng.sample(range(n + 1), 2)
        xi = [Scalar(rng.randint(-5, 5), rng.randint(-2, 2)) for _ in range(n + 1)]
        xi[j] = Scalar(1)
        if not xi[k]:
            xi[k] = Scalar(3, 1)
        z = [a for m, a in enumerate(xi) if m != j]
        vj = dict(zip(chart_ring(F.coords, j), F.chart_vector_field(j)(z)))
        vfull = [vj.get(name, Scalar(0)) for name in F.coords]
        pushed = []
        for i in range(n + 1):
            if i == k:
                continue
            pushed.append((vfull[i] * xi[k] - xi[i] * vfull[k]) / (xi[k] * xi[k]))
        zk = [a / xi[k] for m, a in enumerate(xi) if m != k]
        native = F.chart_vector_field(k)(zk)
        for a in range(n):
            for b in range(a):
                if pushed[a] * native[b] - pushed[b] * native[a]:
                    return False
        if any(pushed) != any(native):
            return False
    return True


@dataclass(frozen=True)
class ComponentSpec:
    """A declared piece of the singular set: a curve or a point.

    Curves are given by homogeneous generators in the foliation's
    coordinates; points by homogeneous coordinates.
    """

    name: str
    kind: str
    generators: tuple = ()
    point: tuple = ()
    ci_degrees: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("curve", "point"):
            raise ValueError(f"unknown component kind {self.kind!r}")

    @classmethod
    def curve(cls, name: str, generators: Sequence, coords: Sequence[str],
              ci_degrees: Sequence[int] | None = None) -> "ComponentSpec":
        gens = tuple(parse_poly(g, coords) if isinstance(g, str) else g.to_ring(coords) for g in generators)
        if not gens or not all(g.is_homogeneous() and g for g in gens):
            raise ValueError(f"component {name!r} needs nonzero homogeneous generators")
        return cls(name, "curve", gens, (), tuple(ci_degrees) if ci_degrees is not None else None)

    @classmethod
    def curve_from_affine(cls, name: str, generators: Sequence, coords: Sequence[str], chart: int,
                          ci_degrees: Sequence[int] | None = None) -> "ComponentSpec":
        """Projective closure of an affine curve given in chart ``chart``."""
        ring = chart_ring(coords, chart)
        gens = [parse_poly(g, ring) if isinstance(g, str) else g.to_ring(ring) for g in generators]
        G = buchberger(Ideal(ring, gens))
        hom = [homogenize(g, coords, chart) for g in G.basis]
        return cls(name, "curve", tuple(hom), (), tuple(ci_degrees) if ci_degrees is not None else None)

    @classmethod
    def at_point(cls, name: str, point: Sequence) -> "ComponentSpec":
        return cls(name, "point", (), tuple(Scalar.coerce(a) for a in point))

    def chart_ideal(self, j: int) -> Ideal:
        if self.kind != "curve":
            raise ValueError("chart_ideal is defined for curve components")
        ring = chart_ring(self.generators[0].ring, j)
        return Ideal(ring, [dehomogenize(g, j) for g in self.generators])

    def generator_degrees(self) -> list:
        return sorted(g.degree() for g in self.generators)

    def describe(self) -> dict:
        out = {"name": self.name, "kind": self.kind}
        if self.kind == "curve":
            out["generators"] = [str(g) for g in self.generators]
            if self.ci_degrees is not None:
                out["ci_degrees"] = list(self.ci_degrees)
        else:
            out["point"] = [str(a) for a in self.point]
        return out


def verify_component(F: Foliation, C: ComponentSpec) -> None:
    """Check that C lies in Sing(F); raise ValueError otherwise."""
    if C.kind == "point":
        if not F.is_singular_at(C.point):
            raise ValueError(f"point {C.name} is not a singular point of the foliation")
        return
    for j in range(F.n + 1):
        G = buchberger(C.chart_ideal(j))
        if G.is_unit():
            continue
        for g in F.singular_ideal(j).generators:
            if not G.contains(g):
                raise ValueError(f"component {C.name} is not contained in the singular set (chart {j})")
