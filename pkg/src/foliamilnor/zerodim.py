"""Solving zero-dimensional systems over Q(i).

The quotient algebra A = R/I is handled exactly through multiplication
matrices on the standard monomials of a grevlex basis.  A random linear form
l is used to bring the ideal into shape position: when 1, l, ..., l^(D-1)
span A, the lex basis is h(s), x_i - g_i(s) with s = l, which is read off a
Krylov solve instead of a second Gröbner computation.  Roots of the
squarefree factors of h come from the Aberth iteration.  Coordinates are
taken either from g_i(root) or from the evaluation functional at the point
(the left null vector of M_l - root), whichever polishes better under
Newton's method on the original equations; the latter is far better
conditioned when D is large.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .ideal import GroebnerBasis, Ideal, NotZeroDimensional, buchberger, quotient_dimension
from .numeric import PolySystem
from .poly import ONE, ZERO, Polynomial, Scalar
from .roots import aberth, squarefree_factorization, to_complex_coeffs, udivmod

__all__ = ["ZeroDimSolution", "ShapeRepresentation", "shape_representation",
           "solve_zero_dimensional", "charpoly"]

_S = ("s",)


@dataclass
class ZeroDimSolution:
    point: np.ndarray
    multiplicity: int
    residual: float
    flagged: bool = False


@dataclass
class ShapeRepresentation:
    """x_i = g_i(l) modulo I, with h(l) = 0 and the factors of h by multiplicity."""

    ring: tuple
    linear_form: tuple
    h: Polynomial
    g: list
    factors: list
    # numerical data of the algebra the representation lives on
    mult_matrix: np.ndarray | None = None
    coord_vectors: np.ndarray | None = None
    one_index: int = 0


# -- exact linear algebra on lists of Scalars ---------------------------

def _solve(A: list, rhs: list) -> list | None:
    """Solve A X = [rhs columns]; None if A is singular."""
    n = len(A)
    m = len(rhs)
    M = [list(A[r]) + [rhs[c][r] for c in range(m)] for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inverse()
        row = [a * inv for a in M[col]]
        M[col] = row
        for r in range(n):
            f = M[r][col]
            if r != col and f:
                M[r] = [a - f * b for a, b in zip(M[r], row)]
    return [[M[r][n + c] for r in range(n)] for c in range(m)]


def _matvec(M: list, v: list) -> list:
    return [sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in M]


def charpoly(M: list) -> Polynomial:
    """Characteristic polynomial det(s - M) via exact Hessenberg reduction."""
    n = len(M)
    H = [list(row) for row in M]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for row in H:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = H[j + 1][j].inverse()
        for i in range(j + 2, n):
            f = H[i][j] * inv
            if not f:
                continue
            H[i] = [a - f * b for a, b in zip(H[i], H[j + 1])]
            for row in H:
                row[j + 1] = row[j + 1] + f * row[i]
    s = Polynomial.variable(_S, "s")
    p = [Polynomial.constant(_S, 1)]
    for k in range(1, n + 1):
        pk = (s - H[k - 1][k - 1]) * p[k - 1]
        prod = ONE
        for i in range(k - 1, 0, -1):
            prod = prod * H[i][i - 1]
            if not prod:
                break
            pk = pk - p[i - 1] * (H[i - 1][k - 1] * prod)
        p.append(pk)
    return p[n]


# -- multiplication matrices ---------------------------------------------

def _multiplication_matrices(G: GroebnerBasis):
    B = G.standard_monomials()
    index = {e: k for k, e in enumerate(B)}
    D = len(B)
    mats = []
    for v in G.ring:
        x = Polynomial.variable(G.ring, v)
        M = [[ZERO] * D for _ in range(D)]
        for c, e in enumerate(B):
            nf = G.normal_form(Polynomial.monomial(G.ring, e) * x)
            for m, a in nf.terms.items():
                M[index[m]][c] = a
        mats.append(M)
    one = [ZERO] * D
    one[index[(0,) * len(G.ring)]] = ONE
    return B, mats, one


def _krylov_shape(mats, one, coeffs):
    D = len(one)
    Ml = [[sum((c * M[r][k] for c, M in zip(coeffs, mats) if c), ZERO) for k in range(D)] for r in range(D)]
    vecs = [one]
    for _ in range(D):
        vecs.append(_matvec(Ml, vecs[-1]))
    K = [[vecs[k][r] for k in range(D)] for r in range(D)]
    rhs = [vecs[D]] + [_matvec(M, one) for M in mats]
    sol = _solve(K, rhs)
    return Ml, sol


def _minimal_polynomial(M, one) -> Polynomial:
    """Minimal polynomial of the element whose multiplication matrix is M."""
    D = len(one)
    vecs = [one]
    for k in range(1, D + 1):
        vecs.append(_matvec(M, vecs[-1]))
        K = [[vecs[j][r] for j in range(k)] for r in range(D)]
        coeffs = _dependency(K, vecs[k])
        if coeffs is not None:
            terms = {(k,): ONE}
            for j, a in enumerate(coeffs):
                if a:
                    terms[(j,)] = -a
            return Polynomial(_S, terms)
    raise AssertionError("Krylov sequence failed to become dependent")


def _dependency(K: list, v: list):
    """Coefficients a with K a = v, or None when v is not in the column span."""
    rows = len(K)
    cols = len(K[0]) if K else 0
    M = [list(K[r]) + [v[r]] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c].inverse()
        M[r] = [a * inv for a in M[r]]
        for i in range(rows):
            f = M[i][c]
            if i != r and f:
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][cols] for i in range(r, rows)):
        return None
    a = [ZERO] * cols
    for i, c in enumerate(pivots):
        a[c] = M[i][cols]
    return a


def _seidenberg_radical(I: Ideal, G: GroebnerBasis) -> Ideal:
    """sqrt(I) for zero-dimensional I: add squarefree parts of the univariate eliminants."""
    _, mats, one = _multiplication_matrices(G)
    extra = []
    for v, M in zip(G.ring, mats):
        mu = _minimal_polynomial(M, one)
        red = Polynomial.constant(_S, 1)
        for f, _k in squarefree_factorization(mu):
            red = red * f
        extra.append(red.subs({"s": Polynomial.variable(G.ring, v)}, ring=G.ring))
    return Ideal(G.ring, list(G.basis) + extra)


def _numeric(Ml, mats, one) -> dict:
    D = len(one)
    M = np.array([[complex(a) for a in row] for row in Ml], dtype=complex)
    cols = np.array([[complex(a) for a in _matvec(Mx, one)] for Mx in mats], dtype=complex).reshape(len(mats), D)
    return {"mult_matrix": M, "coord_vectors": cols, "one_index": next(k for k, a in enumerate(one) if a)}


def _to_poly(coeffs: list) -> Polynomial:
    return Polynomial(_S, {(k,): a for k, a in enumerate(coeffs) if a})


def shape_representation(I: Ideal, seed: int = 0, tries: int = 8) -> ShapeRepresentation:
    """Shape-position representation of a zero-dimensional ideal.

    Non-curvilinear multiple points make A non-cyclic; then the points come
    from the radical and the multiplicities from the characteristic
    polynomial of multiplication by l on A itself.
    """
    G = buchberger(I)
    if G.is_unit():
        raise ValueError("the ideal is the unit ideal; there are no solutions")
    if quotient_dimension(G) == math.inf:
        raise NotZeroDimensional("the system has positive-dimensional solution sets")
    rng = random.Random(seed)
    _, mats, one = _multiplication_matrices(G)
    D = len(one)
    n = len(G.ring)
    for _ in range(tries):
        coeffs = [Scalar(rng.randint(1, 9)) for _ in range(n)]
        Ml, sol = _krylov_shape(mats, one, coeffs)
        if sol is not None:
            h = Polynomial(_S, {(D,): ONE}) - _to_poly(sol[0])
            g = [_to_poly(col) for col in sol[1:]]
            return ShapeRepresentation(G.ring, tuple(coeffs), h, g, squarefree_factorization(h),
                                       **_numeric(Ml, mats, one))
        # non-cyclic: try the radical with the same linear form
        R = _seidenberg_radical(I, G)
        GR = buchberger(R)
        _, rmats, rone = _multiplication_matrices(GR)
        rMl, rsol = _krylov_shape(rmats, rone, coeffs)
        if rsol is None:
            continue
        Dr = len(rone)
        hr = Polynomial(_S, {(Dr,): ONE}) - _to_poly(rsol[0])
        chi = charpoly(Ml)
        factors = squarefree_factorization(chi)
        if sum(f.degree() for f, _ in factors) != Dr:
            continue
        return ShapeRepresentation(G.ring, tuple(coeffs), hr, [_to_poly(c) for c in rsol[1:]], factors,
                                   **_numeric(rMl, rmats, rone))
    raise RuntimeError("no separating linear form found; reseed")


def _horner(coeffs: np.ndarray, z: complex) -> complex:
    return complex(np.polyval(coeffs, z))


def _eigen_point(rep: ShapeRepresentation, r: complex) -> np.ndarray | None:
    """Coordinates from the evaluation functional: the left null vector of M_l - r."""
    M = rep.mult_matrix
    A = M.T - r * np.eye(M.shape[0])
    w = np.linalg.svd(A)[2][-1].conj()
    denom = w[rep.one_index]
    if abs(denom) < 1e-300:
        return None
    return (rep.coord_vectors @ w) / denom


def solve_zero_dimensional(I: Ideal, seed: int = 0, polish: bool = True) -> list[ZeroDimSolution]:
    """All complex solutions with multiplicities; their multiplicities sum to dim R/I."""
    rep = shape_representation(I, seed)
    system = PolySystem(I.generators, I.ring)
    out = []
    for f, k in rep.factors:
        roots = aberth(to_complex_coeffs(f))
        reduced = []
        for g in rep.g:
            rem = udivmod(g, f)[1]
            reduced.append(to_complex_coeffs(rem) if not rem.is_zero() else np.zeros(1, complex))
        for r in roots:
            candidates = [np.array([_horner(c, r) for c in reduced], dtype=complex)]
            z_eig = _eigen_point(rep, r)
            if z_eig is not None:
                candidates.append(z_eig)
            best = None
            for z in candidates:
                res = system.residual(z)
                if polish:
                    z1, _ = system.newton(z)
                    res1 = system.residual(z1)
                    if res1 <= res:
                        z, res = z1, res1
                if best is None or res < best[1]:
                    best = (z, res)
            z, res = best
            out.append(ZeroDimSolution(z, k, res, flagged=res > 1e-10))
    return out
