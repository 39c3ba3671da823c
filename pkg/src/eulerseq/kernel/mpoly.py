"""Sparse multivariate polynomials over an exact field."""

from __future__ import annotations

from ..errors import InvalidInput
from .field import FieldSpec


def _term_key(exp):
    return (-sum(exp), tuple(-e for e in exp))


class MPoly:
    """Polynomial in named variables, stored as {exponent tuple: coefficient}."""

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: FieldSpec, variables, terms=None, *, _raw=False):
        self.field = field
        self.vars = tuple(variables)
        if terms is None:
            terms = {}
        if _raw:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}
            for e, c in terms.items():
                c = field.coerce(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def _make(cls, field, variables, terms):
        return cls(field, variables, terms, _raw=True)

    @classmethod
    def zero(cls, field, variables):
        return cls._make(field, variables, {})

    @classmethod
    def constant(cls, field, variables, c):
        return cls(field, variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def var(cls, field, variables, i):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[i] = 1
        return cls._make(field, variables, {tuple(e): field.one})

    @classmethod
    def monomial(cls, field, variables, exp, c=1):
        return cls(field, variables, {tuple(exp): c})

    @property
    def nvars(self):
        return len(self.vars)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if isinstance(other, MPoly):
            if other.field != self.field:
                raise InvalidInput(f"mixed fields {self.field} and {other.field}")
            if other.vars != self.vars:
                raise InvalidInput(f"mixed variable lists {self.vars} and {other.vars}")
            return other
        return MPoly.constant(self.field, self.vars, other)

    def __eq__(self, other):
        if isinstance(other, (MPoly, int)):
            o = self._check(other)
            return self.terms == o.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        o = self._check(other)
        f = self.field
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = f.add(out.get(e, f.zero), c)
        return MPoly._make(f, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return MPoly._make(f, self.vars, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        o = self._check(other)
        f = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = f.add(out.get(e, f.zero), f.mul(c1, c2))
        return MPoly._make(f, self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = self.field.coerce(c)
        f = self.field
        return MPoly._make(f, self.vars, {e: f.mul(c, v) for e, v in self.terms.items()})

    def mul_monomial(self, exp):
        return MPoly._make(self.field, self.vars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()})

    def diff(self, i: int):
        """Formal partial derivative in variable i (valid in any characteristic)."""
        f = self.field
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = f.mul(f.from_int(e[i]), c)
        return MPoly._make(f, self.vars, out)

    def weighted_degrees(self, weights):
        return {sum(w * a for w, a in zip(weights, e)) for e in self.terms}

    def homogeneity_witness(self, weights):
        """None if weighted-homogeneous, else two monomials of different degree."""
        seen = None
        for e in sorted(self.terms, key=_term_key):
            deg = sum(w * a for w, a in zip(weights, e))
            if seen is None:
                seen = (e, deg)
            elif deg != seen[1]:
                return seen[0], e
        return None

    def weighted_degree(self, weights):
        degs = self.weighted_degrees(weights)
        if len(degs) > 1:
            raise InvalidInput(f"{self} is not weighted-homogeneous")
        return degs.pop() if degs else None

    def evaluate(self, values, one=None, mul=None, add=None):
        """Substitute values for the variables using caller-supplied ring operations.

        With no operations given the values must be field elements (raw) and
        ordinary field arithmetic is used.
        """
        f = self.field
        if mul is None:
            acc = f.zero
            for e, c in self.terms.items():
                term = c
                for v, a in zip(values, e):
                    if a:
                        term = f.mul(term, f.pow(v, a))
                acc = f.add(acc, term)
            return acc
        acc = None
        for e, c in self.terms.items():
            term = None
            for v, a in zip(values, e):
                for _ in range(a):
                    term = v if term is None else mul(term, v)
            term = one(c) if term is None else mul(one(c), term)
            acc = term if acc is None else add(acc, term)
        return acc if acc is not None else one(f.zero)

    def monomial_str(self, e) -> str:
        parts = []
        for name, a in zip(self.vars, e):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            cs = self.field.fmt(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            mono = self.monomial_str(e)
            if mono == "1":
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"MPoly({self})"
