"""Univariate helpers: exact squarefree factorization over Q(i) and the
Aberth-Ehrlich simultaneous root iteration in complex double precision."""

from __future__ import annotations

import numpy as np

from .poly import Polynomial, Scalar

__all__ = ["udivmod", "ugcd", "squarefree_factorization", "aberth", "to_complex_coeffs"]


def _lead(p: Polynomial):
    d = p.degree()
    return d, p.terms[(d,)]


def udivmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Euclidean division of univariate polynomials."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = a.ring
    db, lb = _lead(b)
    inv = lb.inverse()
    q: dict = {}
    r = dict(a.terms)
    while r:
        dr = max(e[0] for e in r)
        if dr < db:
            break
        c = r[(dr,)] * inv
        k = dr - db
        q[(k,)] = c
        for (e,), cb in b.terms.items():
            m = (e + k,)
            v = r.get(m, Scalar(0)) - c * cb
            if v:
                r[m] = v
            else:
                r.pop(m, None)
    return Polynomial(ring, q), Polynomial(ring, r)


def _monic(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    return p * _lead(p)[1].inverse()


def ugcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, udivmod(a, b)[1]
    return _monic(a)


def squarefree_factorization(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: f = lc * prod g_k^k with g_k squarefree and coprime."""
    var = f.ring[0]
    f = _monic(f)
    out = []
    df = f.diff(var)
    a = ugcd(f, df)
    b = udivmod(f, a)[0]
    c = udivmod(df, a)[0]
    d = c - b.diff(var)
    k = 1
    while b.degree() > 0:
        g = ugcd(b, d)
        if g.degree() > 0:
            out.append((g, k))
        b = udivmod(b, g)[0]
        c = udivmod(d, g)[0]
        d = c - b.diff(var)
        k += 1
    return out


def to_complex_coeffs(p: Polynomial) -> np.ndarray:
    """Coefficients, highest degree first, as complex doubles."""
    d = p.degree()
    out = np.zeros(d + 1, dtype=complex)
    for (e,), c in p.terms.items():
        out[d - e] = complex(c)
    return out


def aberth(coeffs, tol: float = 1e-14, max_iter: int = 500) -> np.ndarray:
    """All roots of a polynomial (coefficients highest degree first)."""
    c = np.asarray(coeffs, dtype=complex)
    nz = np.flatnonzero(c)
    if nz.size == 0:
        raise ValueError("zero polynomial has no well-defined roots")
    c = c[nz[0]:]
    trailing = 0
    while c.size > 1 and c[-1] == 0:
        c = c[:-1]
        trailing += 1
    n = c.size - 1
    if n == 0:
        return np.zeros(trailing, dtype=complex)
    c = c / c[0]
    dc = c[:-1] * np.arange(n, 0, -1)
    # initial guesses on a circle of the Fujiwara radius, rotated off the axes
    radius = 2 * max(abs(c[k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(radius, 1e-3)
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z = radius * np.exp(1j * angles)
    for _ in range(max_iter):
        p = np.polyval(c, z)
        dp = np.polyval(dc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            step = ratio / (1.0 - ratio * s)
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= tol * np.maximum(np.abs(z), 1.0)):
            break
    return np.concatenate([z, np.zeros(trailing, dtype=complex)])
