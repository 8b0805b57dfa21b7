import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foliamilnor.ideal import Ideal, NotZeroDimensional, buchberger, quotient_dimension
from foliamilnor.poly import parse_poly
from foliamilnor.roots import aberth, squarefree_factorization, udivmod
from foliamilnor.zerodim import charpoly, shape_representation, solve_zero_dimensional

S = ("s",)
R2 = ("x", "y")


def ideal(gens, ring=R2):
    return Ideal(ring, [parse_poly(g, ring) for g in gens])


def _match(found, expected, tol):
    found = list(found)
    for r in expected:
        k = int(np.argmin([abs(f - r) for f in found]))
        assert abs(found[k] - r) < tol
        found.pop(k)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False), min_size=1, max_size=8))
def test_aberth_against_numpy(roots):
    coeffs = np.poly(roots)
    found = aberth(coeffs)
    expected = np.roots(coeffs)
    assert len(found) == len(expected)
    gaps = [np.min(np.abs(np.delete(expected, k) - r), initial=np.inf) for k, r in enumerate(expected)]
    if min(gaps) > 1e-2:
        # well separated: both methods agree to near machine precision
        _match(found, expected, 1e-8)
    scale = np.max(np.abs(coeffs)) * max(1.0, np.max(np.abs(found))) ** len(roots)
    assert np.max(np.abs(np.polyval(coeffs, found))) < 1e-10 * scale


def test_aberth_simple_cases():
    _match(aberth([1, 0, -1]), [1, -1], 1e-13)
    _match(aberth([1, 0, 0]), [0, 0], 1e-13)
    _match(aberth([1, -6, 11, -6]), [1, 2, 3], 1e-12)
    _match(aberth([1, 0, 1]), [1j, -1j], 1e-13)


def test_squarefree_factorization():
    f = parse_poly("(s-1)^3*(s+2)^2*(s^2+1)", S)
    parts = squarefree_factorization(f)
    assert {k: g.degree() for g, k in parts} == {1: 2, 2: 1, 3: 1}
    prod = parse_poly("1", S)
    for g, k in parts:
        prod = prod * g ** k
    assert prod == f


def test_division():
    q, r = udivmod(parse_poly("s^3 + 2*s + 1", S), parse_poly("s - 1", S))
    assert q == parse_poly("s^2 + s + 3", S)
    assert r == parse_poly("4", S)


def test_charpoly():
    M = [[parse_poly(a, ()).constant_term() for a in row] for row in [["2", "1"], ["0", "3"]]]
    assert charpoly(M) == parse_poly("(s-2)*(s-3)", S)


def test_two_simple_points():
    sols = solve_zero_dimensional(ideal(["x^2 - 1", "y - x"]))
    pts = sorted((round(s.point[0].real), round(s.point[1].real)) for s in sols)
    assert pts == [(-1, -1), (1, 1)]
    assert all(s.multiplicity == 1 and s.residual < 1e-12 for s in sols)


def test_curvilinear_multiple_point():
    sols = solve_zero_dimensional(ideal(["x^2", "y^2 - x"]))
    assert len(sols) == 1 and sols[0].multiplicity == 4
    assert np.allclose(sols[0].point, 0)


def test_non_curvilinear_multiple_point():
    sols = solve_zero_dimensional(ideal(["x^2", "x*y", "y^2"]))
    assert [s.multiplicity for s in sols] == [3]


def test_mixed_multiplicities_sum_to_quotient_dimension():
    I = ideal(["(x-1)^2*(x+2)", "y^2 - x*y"])
    sols = solve_zero_dimensional(I)
    assert sum(s.multiplicity for s in sols) == quotient_dimension(buchberger(I))
    for s in sols:
        assert s.residual < 1e-8


def test_three_variables_random_system():
    R3 = ("x", "y", "z")
    I = ideal(["x^2 + y*z - 2", "y^2 - x + z", "z^2 + x*y - 1"], R3)
    sols = solve_zero_dimensional(I)
    assert sum(s.multiplicity for s in sols) == quotient_dimension(buchberger(I)) == 8
    assert max(s.residual for s in sols) < 1e-10


def test_shape_representation_lex_form():
    rep = shape_representation(ideal(["x^2 - 2", "y - x^3"]))
    assert rep.h.degree() == 2


def test_positive_dimensional_is_rejected():
    with pytest.raises(NotZeroDimensional):
        solve_zero_dimensional(ideal(["x*y"]))
