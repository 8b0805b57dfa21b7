import itertools
import random

import pytest

from foliamilnor.foliation import ComponentSpec, Foliation
from foliamilnor.ideal import Ideal, buchberger, krull_dimension, multiplicity_on_subvariety
from foliamilnor.milnor import (UNVERIFIED, NotExhaustive, isolated_pieces, isolated_total, milnor_at_point,
                                milnor_by_conservation, milnor_curve_excess)
from foliamilnor.poly import Polynomial, parse_poly

from oracles import random_plane_foliation, sum_of_powers

R3 = ("z1", "z2", "z3")


def affine(strings, ring=R3):
    return [parse_poly(s, ring) for s in strings]


@pytest.fixture(scope="module")
def line_and_point():
    F = Foliation.from_affine(affine(["z1^2", "z1^2", "z2^2"]), 3, 3)
    C = ComponentSpec.curve("C", ["x0", "x1"], F.coords, [1, 1])
    p = ComponentSpec.at_point("p", [1, 1, 1, 0])
    return F, C, p


@pytest.fixture(scope="module")
def two_lines():
    F = Foliation.from_affine(affine(["z1*(z3-1) + 2*z2*(z1-1)", "3*z1*(z1-1) + 4*z2*(z3-1)",
                                      "z1*(5*(z1-1) + 6*(z3-1))"]), 3, 3)
    C1 = ComponentSpec.curve("C1", ["x0", "x1"], F.coords, [1, 1])
    C2 = ComponentSpec.curve("C2", ["x0 - x3", "x2 - x3"], F.coords, [1, 1])
    return F, C1, C2


def test_milnor_at_points():
    F = Foliation.from_affine(affine(["z1^2", "z2^2", "z3^2"]), 3, 3)
    assert milnor_at_point(F, [0, 0, 0, 1]) == 8
    G = Foliation.from_affine(affine(["z1 + z2", "z2 - z3", "z3 + 2*z1"]), 3, 3)
    assert milnor_at_point(G, [0, 0, 0, 1]) == 1
    with pytest.raises(ValueError):
        milnor_at_point(F, [1, 1, 1, 1])


def test_line_and_point_conservation(line_and_point):
    F, C, p = line_and_point
    assert milnor_at_point(F, p.point) == 1
    assert isolated_total(F, [C]) == 1
    report = milnor_by_conservation(F, [C, p])
    assert report.baum_bott_total == 15
    assert report.value("C") == 14
    assert report.value("p") == 1
    assert report.checks["conservation"]


def test_two_lines_aggregate(two_lines):
    F, C1, C2 = two_lines
    report = milnor_by_conservation(F, [C1, C2])
    assert report.isolated_total == 4
    assert report.aggregate == 11
    assert report.value("C1") is None


def test_excess_on_two_lines(two_lines):
    F, C1, C2 = two_lines
    r1, r2 = milnor_curve_excess(F, C1), milnor_curve_excess(F, C2)
    assert r1.value == 5 and r2.value == 5
    assert UNVERIFIED in r2.flags
    assert milnor_by_conservation(F, [C1, C2]).aggregate - (r1.value + r2.value) == 1


def test_excess_warns_on_wrong_degrees(two_lines):
    F, C1, _ = two_lines
    bad = ComponentSpec.curve("C1", ["x0", "x1"], F.coords, [1, 2])
    assert milnor_curve_excess(F, bad).warnings


def test_missing_component_is_reported(line_and_point):
    F, _, _ = line_and_point
    with pytest.raises(NotExhaustive) as info:
        isolated_total(F, [])
    assert 0 <= info.value.chart <= 3


def test_restricted_milnor_number(line_and_point):
    F, _, _ = line_and_point
    H = F.restrict_to_hyperplane(3)
    assert milnor_at_point(H, [0, 0, 1]) == 6


def _only_isolated(F):
    return all(krull_dimension(buchberger(F.singular_ideal(j))) <= 0 for j in range(F.n + 1))


def test_random_plane_foliations_satisfy_baum_bott():
    rng = random.Random(2024)
    done = 0
    while done < 10:
        d = rng.randint(1, 2)
        F = random_plane_foliation(rng, d)
        if not _only_isolated(F):
            continue
        assert isolated_total(F, []) == sum_of_powers(2, d)
        done += 1


def test_chart_order_does_not_matter(line_and_point, two_lines):
    F, C, _ = line_and_point
    G, C1, C2 = two_lines
    for order in itertools.permutations(range(4)):
        assert isolated_total(F, [C], order) == 1
    for order in [(0, 1, 2, 3), (1, 3, 0, 2), (2, 0, 3, 1)]:
        assert isolated_total(G, [C1, C2], order) == 4
    rng = random.Random(8)
    H = random_plane_foliation(rng, 2)
    values = {isolated_total(H, [], order) for order in itertools.permutations(range(3))}
    assert values == {sum_of_powers(2, 2)}


def test_bad_chart_order(line_and_point):
    F, C, _ = line_and_point
    with pytest.raises(ValueError):
        isolated_pieces(F, [C], [0, 1, 1, 3])


def test_point_values_add_up_to_piece_counts():
    # four rational points in the chart x2 = 1, two of them triple
    F = Foliation.from_affine(affine(["z1*(z1-1)", "z2*(z2-2)^3"], ("z1", "z2")), 2, 2)
    mu = {(a, b): milnor_at_point(F, [a, b, 1]) for a in (0, 1) for b in (0, 2)}
    assert mu == {(0, 0): 1, (0, 2): 3, (1, 0): 1, (1, 2): 3}
    J = F.singular_ideal(2)
    ring = F.chart_ring(2)
    on_line = multiplicity_on_subvariety(J, Ideal(ring, [Polynomial.variable(ring, "x0")]))
    assert on_line == mu[(0, 0)] + mu[(0, 2)]
    assert isolated_pieces(F, [])[0]["count"] == sum(mu.values())
