import io
import json

import numpy as np
import pytest

from foliamilnor.continuation import (DEFAULT_T0, PerturbationFamily, PerturbationNotGeneric, build_perturbation,
                                      partitioned_starts, run_continuation, solve_start_system, track_to_zero,
                                      write_tracking_log)
from foliamilnor.foliation import ComponentSpec, Foliation
from foliamilnor.ideal import buchberger, quotient_dimension
from foliamilnor.poly import Polynomial, parse_poly

R3 = ("z1", "z2", "z3")


def affine(strings, ring=R3):
    return [parse_poly(s, ring) for s in strings]


@pytest.fixture(scope="module")
def line_and_point():
    F = Foliation.from_affine(affine(["z1^2", "z1^2", "z2^2"]), 3, 3)
    return F, [ComponentSpec.curve("C", ["x0", "x1"], F.coords), ComponentSpec.at_point("p", [1, 1, 1, 0])]


@pytest.fixture(scope="module")
def two_lines():
    F = Foliation.from_affine(affine(["z1*(z3-1) + 2*z2*(z1-1)", "3*z1*(z1-1) + 4*z2*(z3-1)",
                                      "z1*(5*(z1-1) + 6*(z3-1))"]), 3, 3)
    return F, [ComponentSpec.curve("C1", ["x0", "x1"], F.coords),
               ComponentSpec.curve("C2", ["x0 - x3", "x2 - x3"], F.coords)]


def constant_family(F):
    """A family that does not depend on t."""
    ring = F.coords + ("t",)
    zero = Polynomial.zero(F.chart_ring(F.input_chart))
    return PerturbationFamily(F, "full", 0, (zero,) * F.n, "t", tuple(f.to_ring(ring) for f in F.homogeneous))


def jordan_foliation():
    """Linear field of P^2 with a single singular point [1:0:0] of Milnor number 3."""
    ring = ("x0", "x1", "x2")
    return Foliation.from_homogeneous([parse_poly(s, ring) for s in ["x1", "x2", "0"]], ring, input_chart=0)


def test_family_restricts_to_base(line_and_point):
    F, _ = line_and_point
    P0, P1 = build_perturbation(F, 0), build_perturbation(F, 1)
    assert P0.perturbation != P1.perturbation
    for P in (P0, P1):
        assert P.specialize(3, 0).generators == F.singular_ideal(3).generators


def test_quadratic_pair_family(two_lines):
    F, _ = two_lines
    P = build_perturbation(F, 0, "quadratic-pair", {"alpha": [1, 2, 3], "beta": [4, 5, 6]})
    ring = F.chart_ring(3)
    A = parse_poly("x0^2 + 2*x0*x1 + 3*x1^2", ring)
    B = parse_poly("4*(x0-1)^2 + 5*(x0-1)*(x2-1) + 6*(x2-1)^2", ring)
    assert P.perturbation == (Polynomial.zero(ring), A, B)
    with pytest.raises(ValueError):
        build_perturbation(F, 0, "nonsense")


def test_start_count_matches_quotient_dimension(line_and_point):
    F, _ = line_and_point
    P = build_perturbation(F, 0)
    starts = solve_start_system(P, chart=3)
    D = quotient_dimension(buchberger(P.specialize(3, DEFAULT_T0)))
    assert sum(s.multiplicity for s in starts) == D == 8
    assert max(s.residual for s in starts) < 1e-12
    allstarts, pieces = partitioned_starts(P, DEFAULT_T0)
    assert sum(s.multiplicity for s in allstarts) == 15
    assert [p["count"] for p in pieces] == [8, 7, 0, 0]


def test_unperturbed_family_is_not_generic(line_and_point):
    F, _ = line_and_point
    with pytest.raises(PerturbationNotGeneric):
        solve_start_system(constant_family(F), chart=3)


def test_constant_in_t_paths_stay_put():
    F = jordan_foliation()
    ring = F.coords
    G = Foliation.from_homogeneous([parse_poly(s, ring) for s in ["x0", "2*x1", "3*x2"]], ring)
    P = constant_family(G)
    starts, _ = partitioned_starts(P)
    paths = track_to_zero(P, starts, t_min=1e-12)
    assert len(paths) == 3
    for p in paths:
        assert p.status == "converged"
        start = np.insert(p.start, p.start_chart, 1.0)
        end = p.homogeneous_end()
        k = int(np.argmax(np.abs(start)))
        assert np.allclose(end / end[k], start / start[k], atol=1e-10)


def test_single_isolated_point_receives_every_path():
    F = jordan_foliation()
    res = run_continuation(F, [ComponentSpec.at_point("q", [1, 0, 0])], seed=0)
    assert res.counts() == {"q": 3}
    assert all(res.checks.values())
    bare = run_continuation(F, [], seed=0)
    assert bare.attribution.isolated == 3
    assert len(bare.attribution.isolated_clusters) == 1


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_line_and_point_is_seed_independent(line_and_point, seed):
    F, comps = line_and_point
    res = run_continuation(F, comps, seed=seed)
    assert res.counts() == {"C": 14, "p": 1}
    assert all(res.checks.values())
    chart3 = [p for p in res.paths if p.start_chart == 3]
    assert sum(p.multiplicity for p in chart3) == 8
    assert all(res.attribution.labels[p.id] == "C" for p in chart3)
    status = {}
    for p in res.paths:
        status[p.status] = status.get(p.status, 0) + 1
    assert sum(status.values()) == len(res.starts)


@pytest.mark.parametrize("style,params", [("quadratic-pair", {"alpha": [7, 8, 9], "beta": [10, 11, 12]}),
                                          ("full", None)])
def test_two_lines_split(two_lines, style, params):
    F, comps = two_lines
    res = run_continuation(F, comps, seed=0, style=style, params=params)
    assert res.counts() == {"C1": 5, "C2": 6}
    assert res.attribution.isolated == 4
    assert all(res.checks.values())


def test_refining_t_min_changes_nothing(line_and_point, two_lines):
    for F, comps in (line_and_point, two_lines):
        coarse = run_continuation(F, comps, seed=1, t_min=1e-24)
        fine = run_continuation(F, comps, seed=1, t_min=1e-25)
        assert coarse.counts() == fine.counts()
        assert coarse.attribution.labels == fine.attribution.labels


def test_stopping_early_is_inconclusive_not_wrong(line_and_point):
    F, comps = line_and_point
    res = run_continuation(F, comps, seed=0, t_min=1e-10)
    assert res.attribution.inconclusive
    assert not res.checks["attribution_complete"]
    assert res.attribution.isolated == 0


def test_tracking_log_lines(two_lines):
    F, comps = two_lines
    log = []
    run_continuation(F, comps, seed=0, style="quadratic-pair", log=log)
    buf = io.StringIO()
    write_tracking_log(log[:5], buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 5
    entry = json.loads(lines[0])
    assert {"path", "t", "point", "residual", "chart"} <= set(entry)
