"""Independent reference computations and seeded random cases.

The property tests and the acceptance suite share these so that both run
the same cases.
"""

import itertools
import random

from foliamilnor.foliation import CodimensionError, Foliation
from foliamilnor.ideal import Ideal
from foliamilnor.poly import Polynomial


def monomial_ideal_case(rng: random.Random, nvars: int):
    """Random zero-dimensional monomial ideal: pure powers plus a few mixed monomials."""
    powers = [rng.randint(1, 5) for _ in range(nvars)]
    gens = [tuple(a if k == i else 0 for k in range(nvars)) for i, a in enumerate(powers)]
    for _ in range(rng.randint(0, 4)):
        gens.append(tuple(rng.randint(0, a) for a in powers))
    return powers, gens


def count_standard_monomials(powers, gens) -> int:
    """Brute force: monomials in the box that no generator divides."""
    count = 0
    for e in itertools.product(*(range(a) for a in powers)):
        if not any(all(g[k] <= e[k] for k in range(len(e))) for g in gens):
            count += 1
    return count


def monomial_ideal(ring, gens) -> Ideal:
    return Ideal(ring, [Polynomial.monomial(ring, g) for g in gens])


def random_poly(rng: random.Random, ring, degree: int, low=-3, high=3, homogeneous=False) -> Polynomial:
    terms = {}
    for e in itertools.product(range(degree + 1), repeat=len(ring)):
        s = sum(e)
        if s > degree or (homogeneous and s != degree):
            continue
        c = rng.randint(low, high)
        if c:
            terms[e] = c
    return Polynomial(ring, terms)


def random_plane_foliation(rng: random.Random, degree: int, tries: int = 50) -> Foliation:
    """Random degree-d foliation of P^2 whose singular set is finite."""
    coords = ("x0", "x1", "x2")
    for _ in range(tries):
        F = [random_poly(rng, coords, degree, homogeneous=True) for _ in range(3)]
        if not all(F):
            continue
        try:
            fol = Foliation.from_homogeneous(F, coords)
        except (CodimensionError, ValueError):
            continue
        if fol.degree == degree:
            return fol
    raise RuntimeError("no admissible random foliation found")


def sum_of_powers(n: int, d: int) -> int:
    return sum(d ** i for i in range(n + 1))
