"""Exact sparse multivariate polynomials over the Gaussian rationals Q(i).

A :class:`Polynomial` lives in a *ring*, an ordered tuple of variable names.
Terms are stored as a dict mapping exponent tuples to :class:`Scalar`
coefficients; zero coefficients are never stored, so two equal polynomials
always have identical term maps.

The text grammar understood by :func:`parse_poly` is the usual infix one::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := NUMBER | 'i' | IDENT | '(' expr ')'

``i`` is reserved for the imaginary unit.  Division is only allowed by a
nonzero constant, which is how rational literals such as ``3/2`` arise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

__all__ = [
    "Scalar",
    "Polynomial",
    "RingMismatchError",
    "ParseError",
    "parse_poly",
    "make_ring",
]


class RingMismatchError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}\n  {text}\n  {' ' * position}^"
        super().__init__(message)


def _q(x) -> mpq:
    if isinstance(x, str):
        return mpq(Fraction(x))
    return mpq(x)


def _maybe_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, complex, float, str)) or type(x).__name__ == "mpq":
        return Scalar(x)
    return NotImplemented


class Scalar:
    """Gaussian rational ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            self.re, self.im = re.re, re.im + _q(im)
            return
        if isinstance(re, complex):
            re, im = Fraction(re.real), Fraction(re.imag) + Fraction(im)
        self.re = _q(re)
        self.im = _q(im)

    @staticmethod
    def _new(re: mpq, im: mpq) -> "Scalar":
        s = object.__new__(Scalar)
        s.re = re
        s.im = im
        return s

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return cls(x)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = _maybe_scalar(other)
            if other is NotImplemented:
                return NotImplemented
        return Scalar._new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = _maybe_scalar(other)
            if other is NotImplemented:
                return NotImplemented
        return Scalar._new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __neg__(self):
        return Scalar._new(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = _maybe_scalar(other)
            if other is NotImplemented:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._new(a * c, b)
        return Scalar._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero Scalar")
            return Scalar._new(1 / a, b)
        den = a * a + b * b
        return Scalar._new(a / den, -b / den)

    def __truediv__(self, other):
        other = _maybe_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Scalar._new(mpq(1), mpq(0)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._new(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "i" if self.im == 1 else ("-i" if self.im == -1 else f"{self.im}*i")
        sign = "-" if self.im < 0 else "+"
        mag = abs(self.im)
        return f"({self.re}{sign}{'' if mag == 1 else str(mag) + '*'}i)"


ZERO = Scalar._new(mpq(0), mpq(0))
ONE = Scalar._new(mpq(1), mpq(0))
I_UNIT = Scalar._new(mpq(0), mpq(1))


def make_ring(names: Iterable[str]) -> tuple[str, ...]:
    ring = tuple(names)
    if len(set(ring)) != len(ring):
        raise ValueError(f"duplicate variable names in ring {ring}")
    for name in ring:
        if name == "i" or not _IDENT.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r}")
    return ring


def _check_ring(p: "Polynomial", q: "Polynomial"):
    if p.ring != q.ring:
        raise RingMismatchError(f"ring mismatch: {p.ring} vs {q.ring}")


class Polynomial:
    """Sparse polynomial with Gaussian-rational coefficients.

    Instances are treated as immutable values; every operation returns a
    new polynomial.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.ring = tuple(ring)
        clean = {}
        if terms:
            n = len(self.ring)
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match ring {self.ring}")
                c = Scalar.coerce(c)
                if c:
                    clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring: tuple, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, ring) -> "Polynomial":
        return cls._raw(tuple(ring), {})

    @classmethod
    def constant(cls, ring, c) -> "Polynomial":
        ring = tuple(ring)
        c = Scalar.coerce(c)
        return cls._raw(ring, {(0,) * len(ring): c} if c else {})

    @classmethod
    def variable(cls, ring, name: str) -> "Polynomial":
        ring = tuple(ring)
        try:
            k = ring.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} in ring {ring}") from None
        exp = tuple(1 if j == k else 0 for j in range(len(ring)))
        return cls._raw(ring, {exp: ONE})

    @classmethod
    def monomial(cls, ring, exp, c=1) -> "Polynomial":
        return cls(ring, {tuple(exp): c})

    def gens(self):
        return [Polynomial.variable(self.ring, v) for v in self.ring]

    # -- basic predicates -----------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.ring), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        k = self.ring.index(name)
        return max((e[k] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, k: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) == k})

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(v for v, a in zip(self.ring, e) if a)
        return used

    # -- arithmetic ------------------------------------------------------
    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            _check_ring(self, other)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Scalar.coerce(other)
            if not c:
                return Polynomial.zero(self.ring)
            return Polynomial._raw(self.ring, {e: a * c for e, a in self.terms.items()})
        _check_ring(self, other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in terms.items() if c})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        """Division by a nonzero constant only."""
        if isinstance(other, Polynomial):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("polynomial division is only defined by nonzero constants")
            other = other.constant_term()
        return self * Scalar.coerce(other).inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == Polynomial.constant(self.ring, other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus and substitution -----------------------------------
    def diff(self, name: str) -> "Polynomial":
        k = self.ring.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[k]:
                terms[e[:k] + (e[k] - 1,) + e[k + 1:]] = c * e[k]
        return Polynomial._raw(self.ring, terms)

    def subs(self, assignment: Mapping[str, "Polynomial | object"], ring=None) -> "Polynomial":
        """Substitute polynomials for variables.

        Every variable actually occurring in ``self`` must be assigned unless
        it also belongs to the target ring, in which case it is kept.
        """
        targets = {k: v for k, v in assignment.items()}
        poly_targets = [v for v in targets.values() if isinstance(v, Polynomial)]
        if ring is None:
            rings = {v.ring for v in poly_targets}
            if len(rings) > 1:
                raise RingMismatchError(f"substitution targets live in different rings: {sorted(rings)}")
            ring = rings.pop() if rings else self.ring
        ring = tuple(ring)
        images = []
        for v in self.ring:
            if v in targets:
                t = targets[v]
                images.append(t if isinstance(t, Polynomial) else Polynomial.constant(ring, t))
            elif v in ring:
                images.append(Polynomial.variable(ring, v))
            else:
                images.append(None)
        for k, img in enumerate(images):
            if img is not None and img.ring != ring:
                raise RingMismatchError(f"substitution target ring {img.ring} vs {ring}")
        result = Polynomial.zero(ring)
        cache: dict = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(ring, c)
            for k, a in enumerate(e):
                if not a:
                    continue
                if images[k] is None:
                    raise ValueError(f"variable {self.ring[k]!r} is not assigned")
                key = (k, a)
                if key not in cache:
                    cache[key] = images[k] ** a
                term = term * cache[key]
            result = result + term
        return result

    def translate(self, point: Sequence) -> "Polynomial":
        """Return r with r(x) = self(x + point)."""
        if len(point) != len(self.ring):
            raise ValueError(f"point of length {len(point)} does not match ring {self.ring}")
        xs = self.gens()
        return self.subs({v: x + Scalar.coerce(a) for v, x, a in zip(self.ring, xs, point)})

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != len(self.ring):
            raise ValueError(f"point of length {len(point)} does not match ring {self.ring}")
        pt = [Scalar.coerce(a) for a in point]
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for a, k in zip(pt, e):
                if k:
                    term = term * a ** k
            total = total + term
        return total

    def to_ring(self, ring: Sequence[str]) -> "Polynomial":
        """Re-express in another ring containing every variable used here."""
        ring = tuple(ring)
        if ring == self.ring:
            return self
        pos = []
        for v in self.ring:
            pos.append(ring.index(v) if v in ring else None)
        n = len(ring)
        terms = {}
        for e, c in self.terms.items():
            new = [0] * n
            for k, a in enumerate(e):
                if a:
                    if pos[k] is None:
                        raise ValueError(f"variable {self.ring[k]!r} not in target ring {ring}")
                    new[pos[k]] = a
            terms[tuple(new)] = c
        return Polynomial._raw(ring, terms)

    def rename(self, mapping: Mapping[str, str]) -> "Polynomial":
        ring = tuple(mapping.get(v, v) for v in self.ring)
        return Polynomial._raw(make_ring(ring), dict(self.terms))

    def content_power(self, name: str) -> int:
        """Largest e such that name^e divides self."""
        if not self.terms:
            return 0
        k = self.ring.index(name)
        return min(e[k] for e in self.terms)

    def divide_by_power(self, name: str, e: int) -> "Polynomial":
        k = self.ring.index(name)
        terms = {}
        for exp, c in self.terms.items():
            if exp[k] < e:
                raise ValueError(f"{name}^{e} does not divide polynomial")
            terms[exp[:k] + (exp[k] - e,) + exp[k + 1:]] = c
        return Polynomial._raw(self.ring, terms)

    # -- printing ---------------------------------------------------------
    def sorted_terms(self):
        """Terms in graded reverse lexicographic order, largest first."""
        return sorted(self.terms.items(),
                      key=lambda ec: (sum(ec[0]), tuple(-a for a in reversed(ec[0]))),
                      reverse=True)

    def _monomial_str(self, e) -> str:
        parts = []
        for v, a in zip(self.ring, e):
            if a == 1:
                parts.append(v)
            elif a:
                parts.append(f"{v}^{a}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = self._monomial_str(e)
            negative = (c.im == 0 and c.re < 0) or (c.re == 0 and c.im < 0)
            mag = -c if negative else c
            if mono:
                coeff = "" if mag == ONE else f"{mag}*"
                body = coeff + mono
            else:
                body = str(mag)
            if idx == 0:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self}, ring={self.ring})"


# ---------------------------------------------------------------------------
# parsing

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, ring: tuple):
        self.text = text
        self.ring = ring
        self.tokens = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
            start = m.start(m.lastgroup)
            value = m.group(m.lastgroup)
            if value == "**":
                value = "^"
            self.tokens.append((m.lastgroup, value, start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}", self.text, pos)

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        p = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {v!r}", self.text, pos)
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if q.is_zero() or not q.is_constant():
                    raise ParseError("division only by a nonzero constant", self.text, pos)
                p = p / q
        return p

    def unary(self):
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, v, pos = self.take()
            if kind != "num" or not v.isdigit():
                raise ParseError("exponent must be a non-negative integer", self.text, pos)
            return base ** int(v)
        return base

    def atom(self):
        kind, v, pos = self.take()
        if kind == "num":
            return Polynomial.constant(self.ring, Scalar(Fraction(v)))
        if kind == "id":
            if v == "i":
                return Polynomial.constant(self.ring, I_UNIT)
            if v not in self.ring:
                raise ParseError(f"unknown variable {v!r} (ring {', '.join(self.ring)})", self.text, pos)
            return Polynomial.variable(self.ring, v)
        if v == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", self.text, pos)
        raise ParseError(f"unexpected token {v!r}", self.text, pos)


def parse_poly(text: str, ring: Sequence[str]) -> Polynomial:
    """Parse ``text`` into a polynomial over the given variables."""
    return _Parser(text, make_ring(ring)).parse()
