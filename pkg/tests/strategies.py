"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from foliamilnor.poly import Polynomial, Scalar

RING = ("x", "y", "z")

small = st.integers(min_value=-5, max_value=5)
scalars = st.builds(lambda a, b, c: Scalar(Fraction(a, c), Fraction(b, c)),
                    small, small, st.integers(min_value=1, max_value=4))


@st.composite
def polynomials(draw, ring=RING, max_degree=4, max_terms=8):
    n = len(ring)
    k = draw(st.integers(min_value=0, max_value=max_terms))
    terms = {}
    for _ in range(k):
        e = tuple(draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n)))
        if sum(e) > max_degree:
            continue
        terms[e] = draw(scalars)
    return Polynomial(ring, terms)
