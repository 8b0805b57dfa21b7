import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foliamilnor.chow import (ChowClass, SegreClass, baum_bott_total, chern_twisted_tangent, excess_contribution,
                              segre_complete_intersection, vainsencher_sum)

from oracles import sum_of_powers


def test_chern_of_twisted_tangent_examples():
    assert chern_twisted_tangent(3, 1).coeffs == (1, 7, 17, 15)
    assert chern_twisted_tangent(2, 0).coeffs == (1, 3, 3)
    assert chern_twisted_tangent(1, -1).coeffs == (1, 1)
    assert chern_twisted_tangent(3, 2).coeffs == (1, 10, 34, 40)


def test_baum_bott_table():
    for n in range(1, 6):
        for d in range(0, 7):
            assert baum_bott_total(n, d) == sum_of_powers(n, d)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(-3, 6))
def test_euler_sequence_identity(n, k):
    lhs = chern_twisted_tangent(n, k) * ChowClass.linear(n, k)
    assert lhs == ChowClass.linear(n, k + 1) ** (n + 1)


def test_segre_of_line_and_conic_in_p3():
    assert segre_complete_intersection(3, [1, 1]).by_dimension == {1: 1, 0: -2}
    assert segre_complete_intersection(3, [1, 2]).by_dimension == {1: 2, 0: -6}
    assert segre_complete_intersection(3, [1]).by_dimension == {2: 1, 1: -1, 0: 1}


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(1, 5))
def test_segre_of_hypersurface_matches_series(n, a):
    # s = a*h / (1 + a*h): dimension n-1-j carries a * (-a)^j
    s = segre_complete_intersection(n, [a])
    for j in range(n):
        assert s[n - 1 - j] == a * (-a) ** j


def test_excess_examples():
    E = chern_twisted_tangent(3, 1)
    assert excess_contribution(E, segre_complete_intersection(3, [1, 1])) == 5
    assert excess_contribution(E, segre_complete_intersection(3, [1, 2])) == 8
    assert vainsencher_sum(3, 2, segre_complete_intersection(3, [1, 1])) == 5


def test_excess_is_additive():
    E = chern_twisted_tangent(3, 1)
    a = segre_complete_intersection(3, [1, 1])
    b = segre_complete_intersection(3, [1, 2])
    assert excess_contribution(E, a + b) == excess_contribution(E, a) + excess_contribution(E, b)


def test_point_component_contributes_its_multiplicity():
    assert vainsencher_sum(3, 2, SegreClass(3, {0: 4})) == 4


def test_rejects_bad_input():
    with pytest.raises(TypeError):
        ChowClass(2, (1, 0.5))
    with pytest.raises(ValueError):
        segre_complete_intersection(2, [1, 1, 1])
    with pytest.raises(ValueError):
        ChowClass(2, (2, 1)).inverse()


def test_line_under_degree_three_foliation():
    assert vainsencher_sum(3, 3, segre_complete_intersection(3, [1, 1])) == 10 - 2


def test_two_quadrics_model_of_a_degree_four_curve():
    # the complete-intersection model gives 12, not the 14 found by conservation
    assert vainsencher_sum(3, 2, segre_complete_intersection(3, [2, 2])) == 12
