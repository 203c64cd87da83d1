"""Sparse multivariate polynomials with weighted grading.

Polynomials live in a :class:`Ring` (named variables, positive integer
weights, exact base field) and store their terms as a map from exponent
tuples to nonzero field scalars.  Everything needed downstream is here:
parsing and rendering of the expression grammar, arithmetic, formal
partial derivatives, exact evaluation, monomial bases of graded pieces,
homogenisation and the local (affine) expansion at a projective point.

The expression grammar accepted by :func:`parse`::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := integer | integer '/' integer | var ['^' posint] | '(' expr ')'

Whitespace is ignored.  Coefficient literals may be rationals even over a
prime field (reduced via modular inverse), so one input file can serve
both fields.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .exactalg import FieldSpec


@dataclass(frozen=True)
class Ring:
    """A graded polynomial ring: variable names, weights, base field."""

    names: tuple
    weights: tuple
    field: FieldSpec

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise InputError("need one weight per variable")
        if any(w < 1 for w in self.weights):
            raise InputError("weights must be positive integers")
        if len(set(self.names)) != len(self.names):
            raise InputError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def monomial_degree(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.field.one())

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, i: int) -> "Polynomial":
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: self.field.one()})

    def __str__(self):
        return f"{self.field}[{', '.join(self.names)}; weights {self.weights}]"


def ring(field: FieldSpec, weights=(1, 1, 1, 1, 1), names=None) -> Ring:
    """The ambient ring x0..x{n-1} with the given weights."""
    weights = tuple(int(w) for w in weights)
    if names is None:
        names = tuple(f"x{i}" for i in range(len(weights)))
    return Ring(tuple(names), weights, field)


def local_ring(ambient: Ring, chart_index: int) -> Ring:
    """The unit-weight affine ring y1..y{n-1} of a chart at a point.

    Local variable yk corresponds to the k-th remaining ambient variable
    in ascending index order.
    """
    n = ambient.nvars - 1
    return Ring(tuple(f"y{k}" for k in range(1, n + 1)), (1,) * n, ambient.field)


def _grlex_key(ring_, exps):
    # graded-lexicographic: degree first, then exponent tuple descending
    return (ring_.monomial_degree(exps), tuple(-e for e in exps))


class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring_: Ring, terms: dict):
        object.__setattr__(self, "ring", ring_)
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _make(cls, ring_, terms):
        f = ring_.field
        return cls(ring_, {m: c for m, c in terms.items() if not f.is_zero(c)})

    # -- basics --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero())

    def weighted_degree(self):
        """Common weighted degree of all terms, or None if they disagree.

        Raises on the zero polynomial (it has no degree).
        """
        if self.is_zero():
            raise InputError("the zero polynomial has no degree")
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self.is_zero() and self.weighted_degree() is not None

    def max_degree(self) -> int:
        if self.is_zero():
            return 0
        return max(self.ring.monomial_degree(m) for m in self.terms)

    # -- arithmetic ------------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise InputError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = f.add(out.get(m, f.zero()), c)
        return Polynomial._make(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_other(other)
        f = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = f.mul(c1, c2)
                out[m] = f.add(out.get(m, f.zero()), prod)
        return Polynomial._make(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InputError("polynomial powers must be non-negative integers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c):
        f = self.ring.field
        c = f.coerce(c)
        return Polynomial._make(self.ring, {m: f.mul(c, v) for m, v in self.terms.items()})

    # -- calculus ------------------------------------------------------------

    def partial_derivative(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to variable i."""
        if not 0 <= i < self.ring.nvars:
            raise InputError(f"variable index {i} out of range")
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1:]
            dc = f.mul(c, f.coerce(e))
            out[dm] = f.add(out.get(dm, f.zero()), dc)
        return Polynomial._make(self.ring, out)

    def evaluate(self, point):
        """Exact value at a coordinate tuple (field scalars or ints)."""
        if len(point) != self.ring.nvars:
            raise InputError("point length does not match variable count")
        f = self.ring.field
        pt = [f.coerce(x) for x in point]
        acc = f.zero()
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v = f.mul(v, f.pow(x, e))
            acc = f.add(acc, v)
        return acc

    def substitute(self, images) -> "Polynomial":
        """Ring map sending variable i to images[i] (all in one target ring)."""
        if len(images) != self.ring.nvars:
            raise InputError("need one image per variable")
        target = images[0].ring
        f = target.field
        cache = {}

        def power(i, e):
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        acc = target.zero()
        for m, c in self.terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    # -- grading -----------------------------------------------------------

    def homogenize(self, target_degree: int, new_var: int) -> "Polynomial":
        """Pad every term with new_var so all terms reach target_degree.

        new_var must have weight 1; terms of degree above the target are an
        error.  Dehomogenising at new_var = 1 returns the input.
        """
        r = self.ring
        if r.weights[new_var] != 1:
            raise InputError("homogenising variable must have weight 1")
        out = {}
        for m, c in self.terms.items():
            deg = r.monomial_degree(m)
            if deg > target_degree:
                raise InputError(f"term of degree {deg} exceeds target {target_degree}")
            pad = target_degree - deg
            mm = m[:new_var] + (m[new_var] + pad,) + m[new_var + 1:]
            out[mm] = c
        return Polynomial._make(r, out)

    def dehomogenize(self, chart_index: int, point) -> "Polynomial":
        """Local affine expansion at a normalised projective point.

        Substitutes x_c = 1 and x_j = point_j + y_j for j != c, so the
        result lives in the local ring and its constant term equals the
        value at the point.  The chart coordinate must have weight 1 and
        the point must be normalised to point_c = 1.
        """
        r = self.ring
        if r.weights[chart_index] != 1:
            raise InputError("chart coordinate has weight != 1")
        f = r.field
        pt = [f.coerce(x) for x in point]
        if not pt[chart_index] == f.one():
            raise InputError("point must be normalised to 1 at the chart coordinate")
        lr = local_ring(r, chart_index)
        images = []
        k = 0
        for j in range(r.nvars):
            if j == chart_index:
                images.append(lr.one())
            else:
                images.append(lr.variable(k) + lr.constant(pt[j]))
                k += 1
        return self.substitute(images)

    # -- rendering ------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _grlex_key(self.ring, mc[0]))

    def render(self) -> str:
        if self.is_zero():
            return "0"
        f = self.ring.field
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            cs = f.scalar_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if factors and cs == "1":
                body = "*".join(factors)
            elif factors:
                body = "*".join([cs] + factors)
            else:
                body = cs
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()})"


# -- monomial bases ----------------------------------------------------------


@lru_cache(maxsize=None)
def _basis_tuples(weights: tuple, k: int) -> tuple:
    """All exponent tuples of weighted degree exactly k, graded-lex order."""
    if k < 0:
        return ()
    if not weights:
        return ((),) if k == 0 else ()

    def rec(idx, remaining):
        if idx == len(weights) - 1:
            if remaining % weights[idx] == 0:
                yield (remaining // weights[idx],)
            return
        w = weights[idx]
        for e in range(remaining // w, -1, -1):
            for tail in rec(idx + 1, remaining - e * w):
                yield (e,) + tail

    return tuple(rec(0, k))


def monomial_basis(ring_: Ring, k: int):
    """Monomials of weighted degree exactly k, in graded-lex order."""
    if k < 0:
        raise InputError("degree must be non-negative")
    return list(_basis_tuples(ring_.weights, k))


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*/^]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise InputError(f"unexpected character {text[pos:].strip()[0]!r} in polynomial")
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens, ring_):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring_

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise InputError(f"expected {op!r} in polynomial")

    def expr(self):
        negate = False
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + (-t if val == "-" else t)
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        kind, val = self.take()
        if kind == "int":
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3 = self.take()
                if k3 != "int":
                    raise InputError("expected an integer denominator")
                return self.ring.constant(self.ring.field.fraction(val, v3))
            return self.ring.constant(val)
        if kind == "name":
            idx = self.ring.index_of(val)
            var = self.ring.variable(idx)
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "^":
                self.take()
                k3, v3 = self.take()
                if k3 != "int" or v3 < 1:
                    raise InputError("exponent must be a positive integer")
                return var ** v3
            return var
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise InputError(f"malformed polynomial near token {val!r}")


def parse(text: str, ring_: Ring) -> Polynomial:
    """Parse the expression grammar into a polynomial over the ring."""
    p = _Parser(_tokenize(text), ring_)
    result = p.expr()
    kind, val = p.take()
    if kind != "end":
        raise InputError(f"trailing input near {val!r}")
    return result
