"""Intersection theory on P^n with integer coefficients.

Classes are truncated polynomials in the hyperplane class h (h^(n+1) = 0).
Segre classes of subschemes are kept only as the degrees of their
pushforwards to P^n, one integer per dimension, which is all that the
zero-dimensional excess evaluation consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Mapping, Sequence

__all__ = [
    "ChowClass",
    "SegreClass",
    "TwistedBundle",
    "chern_twisted_tangent",
    "baum_bott_total",
    "segre_complete_intersection",
    "excess_contribution",
    "vainsencher_sum",
]


@dataclass(frozen=True)
class ChowClass:
    """sum_k coeffs[k] * h^k in A^*(P^n)."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        c = [int(a) for a in self.coeffs][: self.n + 1]
        if any(a != b for a, b in zip(c, self.coeffs[: self.n + 1])):
            raise TypeError("Chow classes on P^n have integer coefficients")
        c += [0] * (self.n + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def one(cls, n: int) -> "ChowClass":
        return cls(n, (1,))

    @classmethod
    def linear(cls, n: int, a: int) -> "ChowClass":
        """1 + a*h, the total Chern class of O(a)."""
        return cls(n, (1, a))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k <= self.n else 0

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return ChowClass(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return ChowClass(self.n, tuple(out))

    def __pow__(self, k: int) -> "ChowClass":
        if k < 0:
            return self.inverse() ** (-k)
        result = ChowClass.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "ChowClass":
        """Inverse as a truncated power series; needs constant term +-1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("only classes with constant term +-1 are invertible over the integers")
        inv = [0] * (self.n + 1)
        inv[0] = c0
        for k in range(1, self.n + 1):
            s = sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1))
            inv[k] = -s * c0
        return ChowClass(self.n, tuple(inv))

    def __truediv__(self, other: "ChowClass") -> "ChowClass":
        return self * other.inverse()

    def degree(self) -> int:
        """Degree of the zero-dimensional part, the coefficient of h^n."""
        return self.coeffs[self.n]

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"classes on P^{self.n} and P^{other.n} cannot be combined")

    def __str__(self):
        parts = []
        for k, a in enumerate(self.coeffs):
            if a or k == 0:
                parts.append(str(a) if k == 0 else f"{a}h" if k == 1 else f"{a}h^{k}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class SegreClass:
    """Degrees of the dimension-k pieces of s(Z, P^n), pushed forward to P^n."""

    n: int
    by_dimension: Mapping[int, int]

    def __post_init__(self):
        clean = {}
        for k, v in dict(self.by_dimension).items():
            k, iv = int(k), int(v)
            if iv != v:
                raise TypeError("Segre degrees must be integers")
            if not 0 <= k <= self.n:
                raise ValueError(f"dimension {k} out of range for P^{self.n}")
            if iv:
                clean[k] = iv
        object.__setattr__(self, "by_dimension", clean)

    def __getitem__(self, k: int) -> int:
        return self.by_dimension.get(k, 0)

    def __add__(self, other: "SegreClass") -> "SegreClass":
        if self.n != other.n:
            raise ValueError("Segre classes live in different projective spaces")
        keys = set(self.by_dimension) | set(other.by_dimension)
        return SegreClass(self.n, {k: self[k] + other[k] for k in keys})

    def dimension(self) -> int:
        return max(self.by_dimension, default=-1)


@dataclass(frozen=True)
class TwistedBundle:
    """T P^n (x) O(k), a rank-n bundle."""

    n: int
    k: int

    def chern(self) -> ChowClass:
        return chern_twisted_tangent(self.n, self.k)


def chern_twisted_tangent(n: int, k: int) -> ChowClass:
    """c(T P^n (k)) from the twisted Euler sequence: (1+(k+1)h)^(n+1) / (1+kh)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return ChowClass.linear(n, k + 1) ** (n + 1) / ChowClass.linear(n, k)


def baum_bott_total(n: int, d: int) -> int:
    """Total Milnor number of a degree-d foliation on P^n: top Chern class of TP^n(d-1)."""
    if d < 0:
        raise ValueError("foliation degree must be non-negative")
    return chern_twisted_tangent(n, d - 1).degree()


def segre_complete_intersection(n: int, degrees: Sequence[int]) -> SegreClass:
    """s(Z, P^n) for a complete intersection of hypersurfaces of the given degrees."""
    c = len(degrees)
    if not 1 <= c <= n:
        raise ValueError(f"a complete intersection in P^{n} needs between 1 and {n} hypersurfaces")
    if any(a < 1 for a in degrees):
        raise ValueError("hypersurface degrees must be positive")
    normal = ChowClass.one(n)
    for a in degrees:
        normal = normal * ChowClass.linear(n, a)
    inv = normal.inverse()
    deg_z = prod(degrees)
    return SegreClass(n, {n - c - m: deg_z * inv[m] for m in range(n - c + 1)})


def excess_contribution(E: ChowClass, s: SegreClass) -> int:
    """Degree of the dimension-zero part of c(E) cap s."""
    if E.n != s.n:
        raise ValueError("bundle class and Segre class live on different P^n")
    return sum(E[k] * s[k] for k in range(E.n + 1))


def vainsencher_sum(n: int, d: int, s: SegreClass) -> int:
    """sum_{i>=0} int c_{n-1-i}(TP^n(d-1)) s_{1+i}(C, P^n), Segre pieces indexed by codimension."""
    c = chern_twisted_tangent(n, d - 1)
    total = 0
    for i in range(n):
        codim = 1 + i
        total += c[n - codim] * s[n - codim]
    return total
