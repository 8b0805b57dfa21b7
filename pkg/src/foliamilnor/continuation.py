"""Perturbation and path tracking for Milnor numbers along curves.

A foliation F with non-isolated singularities is deformed into F_t whose
singular points are isolated for t != 0.  The singular points of F_t are
found exactly-then-numerically at a rational t0, followed as t -> 0, and each
limit is attributed to a declared component of Sing(F).  The number of paths
(with multiplicity) ending on a component is its Milnor number.

Points of P^n are enumerated once each through the chart partition
{x_j != 0, x_k = 0 for every chart k handled before j}, the same partition the
exact isolated count uses.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Sequence

import numpy as np

from .chow import baum_bott_total
from .foliation import ComponentSpec, Foliation, chart_ring, degree_of, dehomogenize, homogenize
from .ideal import (Ideal, NotZeroDimensional, buchberger, multiplicity_on_subvariety,
                    quotient_dimension)
from .numeric import PolySystem
from .poly import Polynomial, Scalar
from .zerodim import solve_zero_dimensional

__all__ = [
    "PerturbationNotGeneric",
    "PerturbationFamily",
    "StartPoint",
    "TrackedPath",
    "ClusterAttribution",
    "ContinuationResult",
    "build_perturbation",
    "solve_start_system",
    "partitioned_starts",
    "track_to_zero",
    "attribute_and_split",
    "run_continuation",
    "write_tracking_log",
    "DEFAULT_T0",
    "DEFAULT_T_MIN",
]

DEFAULT_T0 = Fraction(1, 64)
# limits of the form c * t^(1/k) need t far below the target distance
DEFAULT_T_MIN = 1e-24
DEFAULT_GAMMA = 0.5
ATTRIBUTION_TOL = 1e-6
MERGE_TOL = 1e-8
NEAR_TOL = 1e-3
SWITCH_BOUND = 10.0
# stalls above this |t| are not treated as cluster collisions
STALL_T_MAX = 1e-6
DEFAULT_ROTATION = complex(0.6, 0.8)
STYLES = ("full", "quadratic-pair")


class PerturbationNotGeneric(RuntimeError):
    def __init__(self, detail: str = ""):
        msg = "perturbation not generic, reseed"
        super().__init__(f"{msg}: {detail}" if detail else msg)


def _fresh_param(coords: Sequence[str]) -> str:
    name = "t"
    while name in coords:
        name += "_"
    return name


def _specialize(p: Polynomial, k: int, value: Scalar, ring: tuple) -> Polynomial:
    """Substitute value for the k-th ring variable and drop it."""
    terms: dict = {}
    for e, c in p.terms.items():
        e2 = e[:k] + e[k + 1:]
        v = c * value ** e[k] if e[k] else c
        s = terms.get(e2)
        terms[e2] = v if s is None else s + v
    return Polynomial(ring, terms)


@dataclass
class PerturbationFamily:
    """F_t = F + t * (homogenized perturbation), one affine polynomial per input-chart component."""

    base: Foliation
    style: str
    seed: int
    perturbation: tuple
    param: str
    homogeneous: tuple
    params: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.base.n

    def ring(self) -> tuple:
        return self.base.coords + (self.param,)

    def chart_system(self, j: int) -> list:
        """Chart-j components of F_t in the ring (chart coordinates, t)."""
        F = self.homogeneous
        Fj = dehomogenize(F[j], j)
        ring = Fj.ring
        out = []
        for i, name in enumerate(self.base.coords):
            if i != j:
                out.append(dehomogenize(F[i], j) - Polynomial.variable(ring, name) * Fj)
        return out

    def specialize(self, j: int, t0) -> Ideal:
        ring = chart_ring(self.base.coords, j)
        value = Scalar.coerce(t0)
        polys = self.chart_system(j)
        k = polys[0].ring.index(self.param)
        return Ideal(ring, [_specialize(p, k, value, ring) for p in polys])

    def numeric_system(self, j: int) -> PolySystem:
        polys = self.chart_system(j)
        return PolySystem(polys, chart_ring(self.base.coords, j), self.param)

    def describe(self) -> dict:
        return {
            "style": self.style,
            "seed": self.seed,
            "param": self.param,
            "perturbation": [str(p) for p in self.perturbation],
            "params": {k: [str(a) for a in v] for k, v in self.params.items()},
        }


def _random_poly(ring: tuple, d: int, rng: random.Random, low: int = -3, high: int = 3) -> Polynomial:
    terms = {}
    n = len(ring)

    def exps(k, total):
        if k == n - 1:
            yield (total,)
            return
        for a in range(total + 1):
            for rest in exps(k + 1, total - a):
                yield (a,) + rest

    for deg in range(d + 1):
        for e in exps(0, deg):
            c = rng.randint(low, high)
            if c:
                terms[e] = c
    return Polynomial(ring, terms)


def build_perturbation(F: Foliation, seed: int = 0, style: str = "full",
                       params: dict | None = None) -> PerturbationFamily:
    """Family F_t whose t = 0 slice is F.

    ``full`` adds t times a random polynomial of degree <= d with integer
    coefficients in [-3, 3] to every input-chart component.  The second
    style perturbs only the second and third components of a field on U_3
    by t*A and t*B with A = a0 z1^2 + a1 z1 z2 + a2 z2^2 and
    B = b0 (z1-1)^2 + b1 (z1-1)(z3-1) + b2 (z3-1)^2; the coefficient lists
    ``alpha`` and ``beta`` may be given in ``params``.
    """
    if style not in STYLES:
        raise ValueError(f"unknown perturbation style {style!r}; expected one of {STYLES}")
    rng = random.Random(seed)
    j = F.input_chart
    ring = chart_ring(F.coords, j)
    d = F.degree
    recorded: dict = {}
    if style == "full":
        pert = [_random_poly(ring, d, rng) for _ in range(F.n)]
    else:
        if F.n != 3:
            raise ValueError("the quadratic-pair style needs a foliation on P^3")
        params = dict(params or {})
        nonzero = [a for a in range(-5, 6) if a]
        alpha = [Scalar.coerce(a) for a in params.get("alpha") or rng.sample(nonzero, 3)]
        beta = [Scalar.coerce(b) for b in params.get("beta") or rng.sample(nonzero, 3)]
        if len(alpha) != 3 or len(beta) != 3 or not all(alpha) or not all(beta):
            raise ValueError("alpha and beta need three nonzero coefficients each")
        z1, z2, z3 = (Polynomial.variable(ring, v) for v in ring)
        A = alpha[0] * z1 ** 2 + alpha[1] * z1 * z2 + alpha[2] * z2 ** 2
        B = beta[0] * (z1 - 1) ** 2 + beta[1] * (z1 - 1) * (z3 - 1) + beta[2] * (z3 - 1) ** 2
        pert = [Polynomial.zero(ring), A, B]
        recorded = {"alpha": alpha, "beta": beta}
    param = _fresh_param(F.coords)
    hring = F.coords + (param,)
    t = Polynomial.variable(hring, param)
    hom = []
    affine = iter(pert)
    for i, f in enumerate(F.homogeneous):
        f = f.to_ring(hring)
        if i != j:
            r = next(affine)
            if r:
                f = f + t * homogenize(r, F.coords, j, d).to_ring(hring)
        hom.append(f)
    fam = PerturbationFamily(F, style, seed, tuple(pert), param, tuple(hom), recorded)
    _check_family(fam)
    return fam


def _check_family(P: PerturbationFamily):
    F = P.base
    j = F.input_chart
    ring = chart_ring(F.coords, j)
    polys = P.chart_system(j)
    k = polys[0].ring.index(P.param)
    at_zero = [_specialize(p, k, Scalar(0), ring) for p in polys]
    if at_zero != list(F.chart_vector_field(j).components):
        raise AssertionError("t = 0 slice of the family differs from the base field")
    sample = [_specialize(p, k, Scalar(Fraction(1, 7)), ring) for p in polys]
    if degree_of(sample)[0] != F.degree:
        raise PerturbationNotGeneric("perturbed field changes the foliation degree")


@dataclass
class StartPoint:
    chart: int
    point: np.ndarray
    multiplicity: int
    residual: float
    flagged: bool = False


def solve_start_system(P: PerturbationFamily, t0=DEFAULT_T0, chart: int | None = None,
                       seed: int = 0) -> list[StartPoint]:
    """All singular points of F_{t0} in one chart, with multiplicities."""
    j = P.base.input_chart if chart is None else chart
    I = P.specialize(j, Scalar.coerce(t0))
    G = buchberger(I)
    if G.is_unit():
        return []
    D = quotient_dimension(G)
    if D == math.inf:
        raise PerturbationNotGeneric(f"singular set of F_t0 is not finite in chart {j}")
    try:
        sols = solve_zero_dimensional(I, seed=seed)
    except NotZeroDimensional as exc:
        raise PerturbationNotGeneric(str(exc)) from exc
    total = sum(s.multiplicity for s in sols)
    if total != D:
        raise AssertionError(f"solution count {total} differs from quotient dimension {D}")
    return [StartPoint(j, s.point, s.multiplicity, s.residual, s.flagged) for s in sols]


def partitioned_starts(P: PerturbationFamily, t0=DEFAULT_T0, order: Sequence[int] | None = None,
                       seed: int = 0, tol: float = 1e-8) -> tuple[list, list]:
    """Starts covering all of P^n, each singular point of F_t0 taken once.

    Chart j keeps the points with x_k = 0 for every earlier chart k; the
    numerical selection is checked against the exact count of that piece.
    """
    n = P.n
    order = list(range(n, -1, -1) if order is None else order)
    coords = P.base.coords
    starts: list = []
    pieces = []
    done: list = []
    for j in order:
        ring = chart_ring(coords, j)
        sols = solve_start_system(P, t0, j, seed)
        pos = [ring.index(coords[k]) for k in done]
        kept = []
        for s in sols:
            size = max(1.0, float(np.max(np.abs(s.point))))
            if all(abs(s.point[p]) <= tol * size for p in pos):
                kept.append(s)
        for s in kept:
            for p in pos:
                s.point[p] = 0.0
        count = sum(s.multiplicity for s in kept)
        I = P.specialize(j, Scalar.coerce(t0))
        if not done:
            exact = sum(s.multiplicity for s in sols)
        else:
            exact = multiplicity_on_subvariety(I, Ideal(ring, [Polynomial.variable(ring, coords[k]) for k in done]))
        if count != exact:
            raise PerturbationNotGeneric(
                f"chart {j}: {count} numerical starts on the piece but the exact count is {exact}")
        pieces.append({"chart": j, "zero_on": [coords[k] for k in done], "count": exact})
        starts.extend(kept)
        done.append(j)
    return starts, pieces


@dataclass
class TrackedPath:
    id: int
    start_chart: int
    start: np.ndarray
    multiplicity: int
    t0: float
    end_chart: int = -1
    end: np.ndarray | None = None
    end_t: float = math.nan
    status: str = "converged"
    reason: str = ""
    stalled: bool = False
    cluster: int | None = None
    steps: int = 0
    rejected: int = 0
    max_condition: float = 0.0
    end_condition: float = 0.0
    end_residual: float = 0.0
    waypoints: list = field(default_factory=list)

    def homogeneous_end(self) -> np.ndarray:
        return _to_homogeneous(self.end, self.end_chart)

    def to_dict(self, digits: int = 12) -> dict:
        return {
            "id": self.id,
            "start_chart": self.start_chart,
            "start": _fmt_vec(self.start, digits),
            "multiplicity": self.multiplicity,
            "end_chart": self.end_chart,
            "end": _fmt_vec(self.end, digits) if self.end is not None else None,
            "end_t": self.end_t,
            "status": self.status,
            "reason": self.reason,
            "stalled": self.stalled,
            "cluster": self.cluster,
            "steps": self.steps,
            "rejected": self.rejected,
            "max_condition": float(f"{self.max_condition:.4g}"),
            "end_residual": float(f"{self.end_residual:.4g}"),
        }


def _fmt_vec(v, digits: int) -> list:
    return [[round(float(c.real), digits) + 0.0, round(float(c.imag), digits) + 0.0] for c in v]


def _to_homogeneous(z: np.ndarray, chart: int) -> np.ndarray:
    return np.insert(np.asarray(z, dtype=complex), chart, 1.0)


def _normalized(xi: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(xi)))
    return xi / xi[k]


def _from_homogeneous(xi: np.ndarray, chart: int) -> np.ndarray:
    return np.delete(xi / xi[chart], chart)


_ABS = 1e-15


def _correct(sys: PolySystem, z: np.ndarray, t: float, max_iter: int = 10, eta_tol: float = 1e-12):
    """Newton on F(., t); converged when the backward error is at rounding level."""
    prev = math.inf
    first = None
    for it in range(max_iter):
        if it > 0 and sys.backward_error(z, t, _ABS) <= eta_tol:
            return z, True, first
        J = sys.jacobian(z, t)
        dz = np.linalg.lstsq(J, -sys(z, t), rcond=None)[0]
        if not np.all(np.isfinite(dz)):
            return z, False, first
        z = z + dz
        size = float(np.max(np.abs(dz)))
        if first is None:
            first = dz
        if size > prev and it > 1:
            break
        prev = size
    return z, sys.backward_error(z, t, _ABS) <= 1e-10, first


def _weighted(v: np.ndarray, ref: np.ndarray, floor: float = 1e-8) -> float:
    w = np.abs(ref) + floor * max(float(np.max(np.abs(ref))), 1e-300)
    return float(np.max(np.abs(v) / w))


class _Tracker:
    """State of one path: current point, chart and complex parameter value."""

    def __init__(self, P: PerturbationFamily, systems: dict, path: TrackedPath, log: list | None):
        self.P = P
        self.systems = systems
        self.path = path
        self.log = log
        self.t = complex(path.t0)
        self.chart = path.start_chart
        self.z = np.array(path.start, dtype=complex)
        self._switch()
        self.z, _, _ = _correct(self.sys, self.z, self.t)
        path.waypoints.append((self.t, self.chart, self.z.copy()))

    def _system(self, chart: int) -> PolySystem:
        if chart not in self.systems:
            self.systems[chart] = self.P.numeric_system(chart)
        return self.systems[chart]

    def _switch(self):
        """Move to the chart of the largest homogeneous coordinate once the point leaves a box."""
        if float(np.max(np.abs(self.z))) > SWITCH_BOUND:
            xi = _to_homogeneous(self.z, self.chart)
            k = int(np.argmax(np.abs(xi)))
            self.z, self.chart = _from_homogeneous(xi, k), k
        self.sys = self._system(self.chart)

    def step(self, t1: complex) -> bool:
        """Euler predictor to t1 and Newton corrector; True if accepted."""
        sys, z, t = self.sys, self.z, self.t
        dzdt = np.linalg.lstsq(sys.jacobian(z, t), -sys.dt(z, t), rcond=None)[0]
        zp = z + (t1 - t) * dzdt
        zc, ok, _ = _correct(sys, zp, t1)
        if not (ok and np.all(np.isfinite(zc)) and _weighted(zc - zp, zc) <= 0.25):
            self.path.rejected += 1
            return False
        self.t, self.z = t1, zc
        self.path.steps += 1
        self._switch()
        cond = float(np.linalg.cond(self.sys.jacobian(self.z, self.t)))
        self.path.max_condition = max(self.path.max_condition, cond if np.isfinite(cond) else 1e300)
        self.path.waypoints.append((self.t, self.chart, self.z.copy()))
        if self.log is not None:
            self.log.append({"path": self.path.id, "t": [self.t.real, self.t.imag], "chart": self.chart,
                             "point": _fmt_vec(self.z, 15),
                             "residual": self.sys.backward_error(self.z, self.t)})
        return True

    def fail(self, reason: str):
        self.path.status = "diverged"
        self.path.reason = reason

    def finish(self):
        p = self.path
        p.end, p.end_chart, p.end_t = self.z, self.chart, abs(self.t)
        p.end_residual = self.sys.backward_error(self.z, self.t)
        cond = float(np.linalg.cond(self.sys.jacobian(self.z, self.t)))
        p.end_condition = cond if np.isfinite(cond) else 1e300


def _track_one(P: PerturbationFamily, systems: dict, path: TrackedPath, t_min: float, gamma: float,
               rotation: complex, log: list | None, max_steps: int = 100000):
    tr = _Tracker(P, systems, path, log)
    t0 = complex(path.t0)
    # chord from t0 to rotation * t0, off the real axis
    if rotation != 1:
        s, h = 0.0, 0.125
        while s < 1.0:
            s1 = min(1.0, s + h)
            if tr.step(t0 + s1 * (rotation - 1) * t0):
                s, h = s1, min(2 * h, 0.25)
            else:
                h /= 2
                if h < 1e-9:
                    path.stalled = True
                    tr.fail(f"step size underflow on the rotation chord at s={s:.3e}")
                    tr.finish()
                    return
    m, ratio = path.t0, gamma
    while m > t_min and path.steps < max_steps:
        m1 = max(m * ratio, t_min)
        if tr.step(rotation * m1):
            m = m1
            ratio = max(gamma, 2.0 * ratio - 1.0)
        else:
            ratio = (1.0 + ratio) / 2.0
            if 1.0 - ratio < 1e-9:
                path.stalled = True
                tr.fail(f"step size underflow at |t|={m:.3e}")
                break
    tr.finish()
    if path.status == "converged" and m > t_min:
        tr.fail("step budget exhausted")


def track_to_zero(P: PerturbationFamily, starts: Sequence[StartPoint], t0=DEFAULT_T0,
                  t_min: float = DEFAULT_T_MIN, gamma: float = DEFAULT_GAMMA,
                  merge_tol: float = MERGE_TOL, log: list | None = None,
                  rotation: complex = DEFAULT_ROTATION) -> list[TrackedPath]:
    """Follow each start from t0 to |t| = t_min.

    The parameter first moves along the chord from t0 to rotation*t0 and then
    along the ray through rotation*t0 on the geometric schedule
    |t| -> gamma*|t|.  Leaving the real axis avoids the turning points where
    real solution paths of a real family collide; the set of limits at t = 0
    does not depend on the direction of approach.
    """
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie in (0, 1)")
    t0f = float(Fraction(t0)) if not isinstance(t0, Scalar) else float(complex(t0).real)
    if not 0 < t_min < t0f:
        raise ValueError("need 0 < t_min < t0")
    rotation = complex(rotation)
    if abs(abs(rotation) - 1) > 1e-12:
        raise ValueError("rotation must have modulus 1")
    systems: dict = {}
    paths = []
    for k, s in enumerate(starts):
        path = TrackedPath(k, s.chart, np.array(s.point, dtype=complex), s.multiplicity, t0f)
        _track_one(P, systems, path, t_min, gamma, rotation, log)
        paths.append(path)
    _mark_merged(paths, merge_tol)
    return paths


def _mark_merged(paths: list, merge_tol: float, stall_radius: float = ATTRIBUTION_TOL,
                 stall_t_max: float = STALL_T_MAX):
    """Group endpoints into clusters.

    Finished paths within merge_tol share a cluster.  A path that stalled at
    small |t| (its Jacobian degenerates as it runs into a cluster) joins the
    cluster of any endpoint within stall_radius; a lone stalled path simply
    ends early and keeps its endpoint, which attribution then judges.
    Stalls at larger |t| stay diverged.
    """
    finished = [p for p in paths if p.status != "diverged"]
    stalled = [p for p in paths if p.stalled and p.end_t <= stall_t_max]
    ends = {p.id: _normalized(p.homogeneous_end()) for p in finished + stalled}
    next_id = 0

    def join(a, b):
        nonlocal next_id
        cid = a.cluster if a.cluster is not None else b.cluster
        if cid is None:
            cid = next_id
            next_id += 1
        for q in (a, b):
            q.cluster = cid
            q.status = "merged"

    for i, a in enumerate(finished):
        for b in finished[i + 1:]:
            if np.max(np.abs(ends[a.id] - ends[b.id])) <= merge_tol:
                join(a, b)
    for a in stalled:
        near = [b for b in finished + stalled
                if b is not a and np.max(np.abs(ends[a.id] - ends[b.id])) <= stall_radius]
        if near:
            b = min(near, key=lambda q: float(np.max(np.abs(ends[a.id] - ends[q.id]))))
            join(a, b)
            a.reason += "; merged into the cluster it ran into"
        else:
            a.status = "converged"
            a.reason += "; ended early"


@dataclass
class ClusterAttribution:
    counts: dict
    isolated: int
    isolated_clusters: list
    unattributed: list
    labels: dict
    residuals: dict

    @property
    def inconclusive(self) -> bool:
        return bool(self.unattributed)

    def total(self) -> int:
        return sum(self.counts.values()) + self.isolated

    def to_dict(self) -> dict:
        return {
            "counts": dict(self.counts),
            "isolated": self.isolated,
            "isolated_clusters": self.isolated_clusters,
            "unattributed": list(self.unattributed),
            "inconclusive": self.inconclusive,
        }


def _curve_residual(C: ComponentSpec, xi: np.ndarray) -> float:
    worst = 0.0
    for g in C.generators:
        sys = PolySystem([g], g.ring)
        norm = sum(abs(complex(c)) for c in g.terms.values())
        worst = max(worst, abs(complex(sys(xi)[0])) / norm)
    return worst


def _point_distance(C: ComponentSpec, xi: np.ndarray) -> float:
    p = np.array([complex(a) for a in C.point])
    k = int(np.argmax(np.abs(p)))
    if abs(xi[k]) == 0:
        return math.inf
    return float(np.max(np.abs(xi / xi[k] - p / p[k])))


def _base_residual(F: Foliation, xi: np.ndarray) -> float:
    """Size of the 2x2 minors x_i F_j - x_j F_i at a normalized point, relative to the coefficients."""
    worst = 0.0
    vals = []
    for f in F.homogeneous:
        sys = PolySystem([f], f.ring) if f else None
        norm = sum(abs(complex(c)) for c in f.terms.values()) if f else 1.0
        vals.append((complex(sys(xi)[0]) if sys else 0.0, norm))
    for a in range(F.n + 1):
        for b in range(a):
            num = abs(xi[a] * vals[b][0] - xi[b] * vals[a][0])
            worst = max(worst, num / max(vals[a][1], vals[b][1]))
    return worst


def attribute_and_split(paths: Sequence[TrackedPath], components: Sequence[ComponentSpec], F: Foliation,
                        tol: float = ATTRIBUTION_TOL, cluster_tol: float = 1e-4,
                        near_tol: float = NEAR_TOL) -> ClusterAttribution:
    """Assign each finished path to the component its endpoint lies on.

    An endpoint within ``tol`` of a component goes to the closest one.  An
    endpoint that is merely near a curve (within ``near_tol``) is left
    unattributed: it has not converged far enough to tell a limit on the
    curve from an isolated point next to it.  Remaining endpoints that are
    singular for the base foliation form isolated clusters.
    """
    counts = {C.name: 0 for C in components}
    clusters: list = []
    unattributed = []
    labels = {}
    residuals = {}
    for p in paths:
        if p.status == "diverged":
            continue
        xi = _normalized(p.homogeneous_end())
        best, best_r = None, math.inf
        for C in components:
            r = _curve_residual(C, xi) if C.kind == "curve" else _point_distance(C, xi)
            if r < best_r:
                best, best_r = C, r
        residuals[p.id] = best_r
        if best is not None and best_r <= tol:
            counts[best.name] += p.multiplicity
            labels[p.id] = best.name
            continue
        near_curve = any(C.kind == "curve" and _curve_residual(C, xi) <= near_tol for C in components)
        if not near_curve and _base_residual(F, xi) <= tol:
            for c in clusters:
                if np.max(np.abs(c["point"] - xi)) <= cluster_tol:
                    c["count"] += p.multiplicity
                    c["paths"].append(p.id)
                    labels[p.id] = f"isolated:{c['id']}"
                    break
            else:
                clusters.append({"id": len(clusters), "point": xi, "count": p.multiplicity, "paths": [p.id]})
                labels[p.id] = f"isolated:{len(clusters) - 1}"
            continue
        unattributed.append(p.id)
        labels[p.id] = "unattributed"
    iso = sum(c["count"] for c in clusters)
    out_clusters = [{"id": c["id"], "point": _fmt_vec(c["point"], 8), "count": c["count"], "paths": c["paths"]}
                    for c in clusters]
    return ClusterAttribution(counts, iso, out_clusters, unattributed, labels, residuals)


@dataclass
class ContinuationResult:
    family: PerturbationFamily
    t0: Fraction
    t_min: float
    gamma: float
    starts: list
    pieces: list
    paths: list
    attribution: ClusterAttribution
    checks: dict
    seeds_tried: list

    def counts(self) -> dict:
        return dict(self.attribution.counts)

    def summary(self) -> dict:
        status = {}
        for p in self.paths:
            status[p.status] = status.get(p.status, 0) + 1
        return {
            "perturbation": self.family.describe(),
            "seeds_tried": list(self.seeds_tried),
            "t0": str(self.t0),
            "t_min": self.t_min,
            "gamma": self.gamma,
            "starts_by_chart": self.pieces,
            "path_status": status,
            "attribution": self.attribution.to_dict(),
            "checks": dict(self.checks),
            "paths": [p.to_dict() for p in self.paths],
        }


def run_continuation(F: Foliation, components: Sequence[ComponentSpec], seed: int = 0, style: str = "full",
                     t0=DEFAULT_T0, t_min: float = DEFAULT_T_MIN, gamma: float = DEFAULT_GAMMA,
                     params: dict | None = None, tol: float = ATTRIBUTION_TOL, merge_tol: float = MERGE_TOL,
                     reseeds: int = 3, log: list | None = None,
                     rotation: complex = DEFAULT_ROTATION) -> ContinuationResult:
    """Perturb, solve at t0 in every chart piece, track to t_min and attribute."""
    t0 = Fraction(t0)
    tried = []
    last = None
    for attempt in range(reseeds + 1):
        s = seed + attempt
        tried.append(s)
        try:
            P = build_perturbation(F, s, style, params)
            starts, pieces = partitioned_starts(P, t0, seed=s)
            break
        except PerturbationNotGeneric as exc:
            last = exc
            if params and style != "full":
                raise
    else:
        raise last
    paths = track_to_zero(P, starts, t0, t_min, gamma, merge_tol, log, rotation)
    attr = attribute_and_split(paths, components, F, tol)
    bb = baum_bott_total(F.n, F.degree)
    n_starts = sum(p.multiplicity for p in paths)
    checks = {
        "start_count_equals_baum_bott": n_starts == bb,
        "no_diverged_paths": all(p.status != "diverged" for p in paths),
        "attribution_complete": not attr.unattributed,
        "attribution_total_equals_baum_bott": attr.total() == bb,
    }
    return ContinuationResult(P, t0, t_min, gamma, starts, pieces, paths, attr, checks, tried)


def write_tracking_log(entries: Sequence[dict], fh: IO[str]) -> None:
    """One JSON object per line: path id, t, chart, point, residual."""
    for e in entries:
        fh.write(json.dumps(e, sort_keys=True) + "\n")
