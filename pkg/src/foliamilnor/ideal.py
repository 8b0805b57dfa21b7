"""Gröbner bases and local algebra over Q(i).

Everything here is global (affine) Gröbner machinery: Buchberger's algorithm
with the product and chain criteria, elimination, saturation and quotient
dimensions.  Local multiplicities at a point are obtained by truncating
with powers of the maximal ideal until the quotient dimension stabilizes,
so no local (Mora) standard bases are needed.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .poly import ONE, Polynomial, RingMismatchError, Scalar

__all__ = [
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "Ideal",
    "GroebnerBasis",
    "LimitExceeded",
    "NotZeroDimensional",
    "buchberger",
    "quotient_dimension",
    "krull_dimension",
    "eliminate",
    "saturate",
    "saturate_ideal",
    "intersect",
    "local_multiplicity",
    "multiplicity_on_subvariety",
    "same_ideal",
]

DEFAULT_N_MAX = 32
DEFAULT_PAIR_LIMIT = 200_000


class LimitExceeded(RuntimeError):
    pass


class NotZeroDimensional(ValueError):
    pass


def _grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"``.  For ``"elim"`` the
    variables whose indices are in ``block`` are eliminated: any monomial
    involving them is larger than every monomial free of them, with grevlex
    used inside each block.
    """

    kind: str = "grevlex"
    block: tuple = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def keyfunc(self) -> Callable[[tuple], tuple]:
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "lex":
            return lambda e: e
        block = set(self.block)

        def key(e):
            a = tuple(x for k, x in enumerate(e) if k in block)
            b = tuple(x for k, x in enumerate(e) if k not in block)
            return (_grevlex_key(a), _grevlex_key(b))

        return key


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class Ideal:
    ring: tuple
    generators: tuple = ()

    def __init__(self, ring: Sequence[str], generators: Iterable[Polynomial] = ()):
        ring = tuple(ring)
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator ring {g.ring} vs ideal ring {ring}")
            if g and g not in gens:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
        return Ideal(self.ring, self.generators + other.generators)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


# ---------------------------------------------------------------------------
# dict-level helpers; polynomials are {exponent: Scalar}


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(f: dict, key) -> tuple:
    lm = max(f, key=key)
    inv = f[lm].inverse()
    if inv == ONE:
        return lm, f
    return lm, {e: c * inv for e, c in f.items()}


def _sub_multiple(f: dict, g: dict, shift, c: Scalar):
    """In place: f -= c * x^shift * g."""
    for e, a in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        v = f.get(m)
        prod = a * c
        if v is None:
            f[m] = -prod
        else:
            v = v - prod
            if v:
                f[m] = v
            else:
                del f[m]


def _reduce(f: dict, basis: list, lms: list, key) -> dict:
    """Full reduction of f modulo a list of monic polynomials."""
    f = dict(f)
    rem = {}
    while f:
        lm = max(f, key=key)
        c = f[lm]
        for g, glm in zip(basis, lms):
            if _divides(glm, lm):
                shift = tuple(x - y for x, y in zip(lm, glm))
                _sub_multiple(f, g, shift, c)
                break
        else:
            rem[lm] = c
            del f[lm]
    return rem


def _buchberger(polys: list, key, pair_limit: int) -> list:
    basis: list = []
    lms: list = []
    # inputs in increasing order, each reduced by the ones already taken;
    # this drops the many redundant generators of truncation ideals early
    polys = sorted((p for p in polys if p), key=lambda p: key(max(p, key=key)))
    for p in polys:
        h = _reduce(p, basis, lms, key) if basis else p
        if not h:
            continue
        lm, g = _monic(h, key)
        if not any(lm):
            return [{lm: ONE}]
        basis.append(g)
        lms.append(lm)
    if not basis:
        return []
    pending = set()
    heap: list = []

    def add_pair(i, j):
        pending.add((i, j))
        heapq.heappush(heap, (key(_lcm(lms[i], lms[j])), i, j))

    for i, j in itertools.combinations(range(len(basis)), 2):
        add_pair(i, j)
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > pair_limit:
            raise LimitExceeded(f"Gröbner basis limit exceeded ({pair_limit} pairs)")
        a, b = lms[i], lms[j]
        # product criterion
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        if len(basis[i]) == 1 and len(basis[j]) == 1:
            continue
        lcm = _lcm(a, b)
        # chain criterion
        skip = False
        for k, c in enumerate(lms):
            if k in (i, j) or not _divides(c, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        s = {}
        _sub_multiple(s, basis[i], tuple(x - y for x, y in zip(lcm, a)), Scalar(-1))
        _sub_multiple(s, basis[j], tuple(x - y for x, y in zip(lcm, b)), ONE)
        h = _reduce(s, basis, lms, key)
        if not h:
            continue
        lm, h = _monic(h, key)
        if not any(lm):
            return [{lm: ONE}]
        n = len(basis)
        basis.append(h)
        lms.append(lm)
        for k in range(n):
            add_pair(k, n)
    # minimal then reduced basis
    keep = []
    for k, lm in enumerate(lms):
        if any(_divides(lms[m], lm) and (lms[m] != lm or m < k) for m in range(len(lms)) if m != k):
            continue
        keep.append(k)
    mb = [basis[k] for k in keep]
    mlms = [lms[k] for k in keep]
    reduced = []
    for k in range(len(mb)):
        others = mb[:k] + mb[k + 1:]
        olms = mlms[:k] + mlms[k + 1:]
        tail = dict(mb[k])
        del tail[mlms[k]]
        r = _reduce(tail, others, olms, key)
        r[mlms[k]] = ONE
        reduced.append(r)
    order = sorted(range(len(reduced)), key=lambda k: key(mlms[k]))
    return [reduced[k] for k in order]


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis of an ideal under a fixed monomial order."""

    ring: tuple
    order: MonomialOrder
    basis: tuple
    leading: tuple = field(repr=False)

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {p.ring} vs {self.ring}")
        key = self.order.keyfunc()
        rem = _reduce(p.terms, [g.terms for g in self.basis], list(self.leading), key)
        return Polynomial._raw(self.ring, rem)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and not any(self.leading[0])

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.basis)

    def standard_monomials(self) -> list:
        bounds = _pure_power_bounds(self)
        if bounds is None:
            raise NotZeroDimensional("quotient is infinite-dimensional")
        return [e for e in itertools.product(*(range(b) for b in bounds))
                if not any(_divides(lm, e) for lm in self.leading)]


def buchberger(I: Ideal, order: MonomialOrder = GREVLEX, pair_limit: int = DEFAULT_PAIR_LIMIT) -> GroebnerBasis:
    key = order.keyfunc()
    raw = _buchberger([g.terms for g in I.generators], key, pair_limit)
    basis = tuple(Polynomial._raw(I.ring, r) for r in raw)
    leading = tuple(max(r, key=key) for r in raw)
    return GroebnerBasis(I.ring, order, basis, leading)


def _as_basis(G) -> GroebnerBasis:
    return G if isinstance(G, GroebnerBasis) else buchberger(G)


def _pure_power_bounds(G: GroebnerBasis):
    n = len(G.ring)
    bounds = [None] * n
    for lm in G.leading:
        nz = [k for k, a in enumerate(lm) if a]
        if len(nz) == 1:
            k = nz[0]
            bounds[k] = lm[k] if bounds[k] is None else min(bounds[k], lm[k])
        elif not nz:
            return [0] * n
    if any(b is None for b in bounds):
        return None
    return bounds


def quotient_dimension(G) -> int | float:
    """dim_C of the quotient ring; ``math.inf`` when it is infinite."""
    G = _as_basis(G)
    if G.is_unit():
        return 0
    bounds = _pure_power_bounds(G)
    if bounds is None:
        return math.inf
    return len(G.standard_monomials())


def krull_dimension(G) -> int:
    """Dimension of the zero set; -1 for the unit ideal."""
    G = _as_basis(G)
    if G.is_unit():
        return -1
    n = len(G.ring)
    supports = [frozenset(k for k, a in enumerate(lm) if a) for lm in G.leading]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            S = set(S)
            if not any(sup <= S for sup in supports):
                return size
    return 0


def _fresh(ring: tuple, stem: str) -> str:
    name = stem
    k = 0
    while name in ring:
        k += 1
        name = f"{stem}{k}"
    return name


def eliminate(I: Ideal, drop: Iterable[str]) -> Ideal:
    """Generators of I intersected with the subring without ``drop``."""
    drop = set(drop)
    unknown = drop - set(I.ring)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)} in ring {I.ring}")
    block = tuple(k for k, v in enumerate(I.ring) if v in drop)
    kept = tuple(v for v in I.ring if v not in drop)
    G = buchberger(I, MonomialOrder("elim", block))
    gens = [g.to_ring(kept) for g in G.basis if not (g.variables() & drop)]
    return Ideal(kept, gens)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^oo via the Rabinowitsch trick y*f - 1."""
    if f.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    if f.ring != I.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {I.ring}")
    y = _fresh(I.ring, "_y")
    big = I.ring + (y,)
    gens = [g.to_ring(big) for g in I.generators]
    gens.append(Polynomial.variable(big, y) * f.to_ring(big) - 1)
    return eliminate(Ideal(big, gens), [y])


def intersect(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError(f"ring mismatch: {I.ring} vs {J.ring}")
    t = _fresh(I.ring, "_t")
    big = I.ring + (t,)
    T = Polynomial.variable(big, t)
    gens = [T * g.to_ring(big) for g in I.generators]
    gens += [(1 - T) * g.to_ring(big) for g in J.generators]
    return eliminate(Ideal(big, gens), [t])


def saturate_ideal(I: Ideal, W: Ideal) -> Ideal:
    """I : W^oo, computed as the intersection of the saturations by each generator."""
    if W.ring != I.ring:
        raise RingMismatchError(f"ring mismatch: {W.ring} vs {I.ring}")
    if not W.generators:
        return Ideal(I.ring, [Polynomial.constant(I.ring, 1)])
    parts = [saturate(I, w) for w in W.generators]
    result = parts[0]
    for P in parts[1:]:
        result = intersect(result, P)
    return result


def same_ideal(I: Ideal, J: Ideal) -> bool:
    GI, GJ = buchberger(I), buchberger(J)
    return all(GI.contains(g) for g in J.generators) and all(GJ.contains(g) for g in I.generators)


def local_multiplicity(I: Ideal, point: Sequence, n_max: int = DEFAULT_N_MAX) -> int:
    """dim of the local ring of C^n/I at an isolated zero ``point``."""
    point = [Scalar.coerce(a) for a in point]
    if len(point) != len(I.ring):
        raise ValueError(f"point of length {len(point)} does not match ring {I.ring}")
    gens = [g.translate(point) for g in I.generators]
    if any(g.constant_term() for g in gens):
        raise ValueError(f"point {[str(a) for a in point]} is not a zero of the ideal")
    ring = I.ring
    n = len(ring)
    previous = None
    for N in range(2, n_max + 1):
        trunc = [Polynomial._raw(ring, {e: c for e, c in g.terms.items() if sum(e) < N}) for g in gens]
        powers = [Polynomial._raw(ring, {e: ONE}) for e in _exponents_of_degree(n, N)]
        d = quotient_dimension(buchberger(Ideal(ring, trunc + powers)))
        if previous is not None and N >= 3 and d == previous:
            return d
        previous = d
    raise LimitExceeded(f"local multiplicity did not stabilize by N={n_max}: not isolated or limit exceeded")


def _exponents_of_degree(n: int, N: int):
    if n == 1:
        yield (N,)
        return
    for a in range(N, -1, -1):
        for rest in _exponents_of_degree(n - 1, N - a):
            yield (a,) + rest


def multiplicity_on_subvariety(J: Ideal, W: Ideal) -> int:
    """Total multiplicity of the points of the finite scheme V(J) lying on V(W)."""
    total = quotient_dimension(buchberger(J))
    if total == math.inf:
        raise NotZeroDimensional(f"ideal {J} is not zero-dimensional")
    off = quotient_dimension(buchberger(saturate_ideal(J, W)))
    return total - off
