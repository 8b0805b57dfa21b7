"""Polynomial systems compiled to numpy arrays for complex-double evaluation."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .poly import Polynomial

__all__ = ["PolySystem"]


class _Terms:
    """Flattened terms of several polynomials: row index, exponents, coefficients."""

    def __init__(self, rows, exps, params, coeffs, nrows):
        self.rows = np.asarray(rows, dtype=np.intp)
        self.exps = np.asarray(exps, dtype=np.int64).reshape(len(rows), -1) if len(rows) else np.zeros((0, 0), np.int64)
        self.params = np.asarray(params, dtype=np.int64)
        self.coeffs = np.asarray(coeffs, dtype=complex)
        self.nrows = nrows

    def __call__(self, z: np.ndarray, t: complex) -> np.ndarray:
        out = np.zeros(self.nrows, dtype=complex)
        if self.rows.size == 0:
            return out
        vals = self.coeffs * np.prod(z[None, :] ** self.exps, axis=1) * (t ** self.params)
        np.add.at(out, self.rows, vals)
        return out

    def magnitude(self, z: np.ndarray, t: complex) -> np.ndarray:
        """Sum of the moduli of the terms of each row."""
        out = np.zeros(self.nrows)
        if self.rows.size == 0:
            return out
        vals = np.abs(self.coeffs * np.prod(z[None, :] ** self.exps, axis=1) * (t ** self.params))
        np.add.at(out, self.rows, vals)
        return out


class PolySystem:
    """F(z, t) for polynomials over Q(i) in the given unknowns and an optional parameter.

    Every other ring variable must not occur in the polynomials.
    """

    def __init__(self, polys: Sequence[Polynomial], unknowns: Sequence[str], param: str | None = None):
        polys = list(polys)
        if not polys:
            raise ValueError("empty system")
        ring = polys[0].ring
        self.ring = ring
        self.unknowns = tuple(unknowns)
        self.param = param
        self.polys = polys
        idx = [ring.index(v) for v in self.unknowns]
        pidx = ring.index(param) if param is not None else None
        allowed = set(idx) | ({pidx} if pidx is not None else set())
        for p in polys:
            if p.ring != ring:
                raise ValueError("polynomials of a system must share a ring")
            for e in p.terms:
                if any(a and k not in allowed for k, a in enumerate(e)):
                    raise ValueError(f"{p} involves variables outside {self.unknowns}")
        nv = len(idx)
        m = len(polys)

        def build(select):
            rows, exps, params, coeffs = [], [], [], []
            for r, p in enumerate(polys):
                for e, c in p.terms.items():
                    got = select(e, complex(c))
                    if got is None:
                        continue
                    ee, pe, cc = got
                    rows.append(r)
                    exps.append(ee)
                    params.append(pe)
                    coeffs.append(cc)
            if not rows:
                return _Terms([], np.zeros((0, nv)), [], [], m)
            return _Terms(rows, exps, params, coeffs, m)

        def base(e, c):
            return [e[i] for i in idx], (e[pidx] if pidx is not None else 0), c

        self._f = build(base)
        self._jac = []
        for k in range(nv):
            def dk(e, c, k=k):
                a = e[idx[k]]
                if a == 0:
                    return None
                ee = [e[i] for i in idx]
                ee[k] -= 1
                return ee, (e[pidx] if pidx is not None else 0), c * a
            self._jac.append(build(dk))
        if pidx is not None:
            def dt(e, c):
                a = e[pidx]
                if a == 0:
                    return None
                return [e[i] for i in idx], a - 1, c * a
            self._dt = build(dt)
        else:
            self._dt = None
        self._scale = np.array([max((abs(complex(c)) for c in p.terms.values()), default=1.0) for p in polys])

    def __len__(self):
        return len(self.polys)

    def coefficient_scale(self) -> np.ndarray:
        """Largest coefficient modulus of each equation."""
        return self._scale

    def __call__(self, z, t: complex = 0.0) -> np.ndarray:
        return self._f(np.asarray(z, dtype=complex), t)

    def jacobian(self, z, t: complex = 0.0) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        return np.column_stack([J(z, t) for J in self._jac])

    def dt(self, z, t: complex = 0.0) -> np.ndarray:
        if self._dt is None:
            return np.zeros(len(self.polys), dtype=complex)
        return self._dt(np.asarray(z, dtype=complex), t)

    def residual(self, z, t: complex = 0.0) -> float:
        """Max residual relative to the coefficient scale and the size of z."""
        z = np.asarray(z, dtype=complex)
        size = max(1.0, float(np.max(np.abs(z)))) if z.size else 1.0
        degs = np.array([max(p.degree(), 0) for p in self.polys])
        return float(np.max(np.abs(self(z, t)) / (self._scale * size ** degs)))

    def backward_error(self, z, t: complex = 0.0, abs_tol: float = 0.0) -> float:
        """max_i |F_i| / (sum of |terms of F_i| + abs_tol * ||z|| * sum_k |dF_i/dz_k|).

        With abs_tol = 0 this is the smallest relative coefficient perturbation
        making z an exact zero; abs_tol > 0 also allows an absolute
        perturbation of z at that relative size, which matters for
        coordinates sitting at rounding level next to O(1) ones.
        """
        z = np.asarray(z, dtype=complex)
        num = np.abs(self._f(z, t))
        den = self._f.magnitude(z, t)
        if abs_tol and z.size:
            den = den + abs_tol * float(np.max(np.abs(z))) * np.abs(self.jacobian(z, t)).sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            eta = np.where(den > 0, num / den, np.where(num > 0, np.inf, 0.0))
        return float(np.max(eta))

    def newton(self, z, t: complex = 0.0, tol: float = 1e-13, max_iter: int = 20):
        """Least-squares Newton iteration; returns (z, converged)."""
        z = np.asarray(z, dtype=complex).copy()
        prev = np.inf
        for _ in range(max_iter):
            dz = np.linalg.lstsq(self.jacobian(z, t), -self(z, t), rcond=None)[0]
            z = z + dz
            step = float(np.max(np.abs(dz))) if dz.size else 0.0
            if step <= tol * max(1.0, float(np.max(np.abs(z)))):
                return z, True
            if step > prev:
                break
            prev = step
        return z, self.residual(z, t) <= 1e-10
