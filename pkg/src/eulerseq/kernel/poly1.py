"""Univariate polynomials, rational functions and Laurent polynomials."""

from __future__ import annotations

from ..errors import InvalidInput
from .field import FieldSpec


class Poly1:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: FieldSpec, coeffs=(), var: str = "t", *, _raw=False):
        if not _raw:
            coeffs = [field.coerce(c) for c in coeffs]
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self.var = var

    # -- constructors ---------------------------------------------------

    @classmethod
    def _make(cls, field, coeffs, var):
        return cls(field, coeffs, var, _raw=True)

    @classmethod
    def constant(cls, field, c, var="t"):
        return cls(field, [c], var)

    @classmethod
    def monomial(cls, field, k, c=1, var="t"):
        return cls(field, [0] * k + [c], var)

    @classmethod
    def x(cls, field, var="t"):
        return cls.monomial(field, 1, 1, var)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if isinstance(other, Poly1):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly1(self.field, [other], self.var).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def _check(self, other):
        if isinstance(other, Poly1):
            if other.field != self.field:
                raise InvalidInput(f"mixed fields {self.field} and {other.field}")
            return other
        return Poly1(self.field, [other], self.var)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [f.add(a[i] if i < len(a) else f.zero, b[i] if i < len(b) else f.zero) for i in range(n)]
        return Poly1._make(f, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly1._make(self.field, [self.field.neg(c) for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly1._make(f, [], self.var)
        out = [f.zero] * (len(a) + len(b) - 1)
        p = f.p
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        if p:
            out = [c % p for c in out]
        return Poly1._make(f, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly1.constant(self.field, 1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        c = self.field.coerce(c)
        return Poly1._make(self.field, [self.field.mul(c, x) for x in self.coeffs], self.var)

    def shift(self, k: int):
        """Multiply by var**k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly1._make(self.field, [self.field.zero] * k + list(self.coeffs), self.var)

    def divmod(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = f.inv(other.lc)
        quot = [f.zero] * max(0, len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = f.mul(c, inv_lc)
            quot[k - db] = c
            for j, y in enumerate(other.coeffs):
                rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, y))
        return Poly1._make(f, quot, self.var), Poly1._make(f, rem[:db] if db > 0 else [], self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self):
        f = self.field
        return Poly1._make(f, [f.mul(f.from_int(k), c) for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def reversed(self, n: int | None = None):
        """var**n * self(1/var); n defaults to the degree."""
        if n is None:
            n = self.degree
        if self.degree > n:
            raise ValueError("reversal length shorter than degree")
        return Poly1._make(self.field, list(reversed(list(self.coeffs) + [self.field.zero] * (n + 1 - len(self.coeffs)))), self.var)

    def with_var(self, var: str):
        return Poly1._make(self.field, self.coeffs, var)

    def valuation(self) -> int:
        """Order of vanishing at 0 (the zero polynomial raises)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("valuation of zero polynomial")

    def __str__(self):
        return format_univariate(self.field, self.coeffs, self.var)

    def __repr__(self):
        return f"Poly1({self}, {self.field})"


def format_univariate(field, coeffs, var, low=0) -> str:
    """Print sum c_k var^(k+low) in the expression grammar, highest power first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c:
            terms.append((k + low, field.fmt(c)))
    if not terms:
        return "0"
    out = []
    for idx, (e, cs) in enumerate(terms):
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if e == 0:
            body = mag
        else:
            pw = var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})"
            body = pw if mag == "1" else f"{mag}*{pw}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def gcd(a: Poly1, b: Poly1) -> Poly1:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Poly1, b: Poly1):
    """(g, u, v) with u*a + v*b = g monic."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly1.constant(f, 1, a.var), Poly1(f, [], a.var)
    t0, t1 = Poly1(f, [], a.var), Poly1.constant(f, 1, a.var)
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = f.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_coprime_check(polys) -> bool:
    """True iff each (monic) polynomial is squarefree and all are pairwise coprime.

    Squarefree means gcd(f, f') = 1; in characteristic p a polynomial whose
    derivative vanishes identically (a p-th power) is rejected by that test.
    """
    polys = list(polys)
    for f in polys:
        if f.is_zero() or not f.is_monic():
            raise InvalidInput(f"expected a monic nonzero polynomial, got {f}")
    for f in polys:
        if f.degree == 0:
            continue
        d = f.derivative()
        if d.is_zero() or gcd(f, d).degree > 0:
            return False
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if gcd(polys[i], polys[j]).degree > 0:
                return False
    return True


class RatFunc:
    """Reduced quotient num/den of univariate polynomials, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly1, den: Poly1 | None = None, *, reduced=False):
        if den is None:
            den = Poly1.constant(num.field, 1, num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = den.lc
            if c != 1:
                inv = num.field.inv(c)
                num, den = num.scale(inv), den.scale(inv)
            if num.is_zero():
                den = Poly1.constant(num.field, 1, num.var)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @property
    def var(self):
        return self.num.var

    @classmethod
    def const(cls, field, c, var="t"):
        return cls(Poly1.constant(field, c, var))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly1):
            return RatFunc(other)
        return RatFunc(Poly1.constant(self.field, other, self.var))

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(self.den**(-e), self.num**(-e))
        return RatFunc(self.num**e, self.den**e, reduced=True)

    def __eq__(self, other):
        if isinstance(other, (RatFunc, Poly1, int)):
            o = self._lift(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self):
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    def order_at_zero(self) -> int:
        if self.is_zero():
            raise ValueError("order of zero function")
        return self.num.valuation() - self.den.valuation()

    def order_at_infinity(self) -> int:
        if self.is_zero():
            raise ValueError("order of zero function")
        return self.den.degree - self.num.degree

    def substitute_inverse(self, var: str | None = None):
        """f(1/v) as a rational function in v (v named ``var``)."""
        var = var or self.var
        n, d = self.num.degree, self.den.degree
        num = self.num.reversed(n).with_var(var)
        den = self.den.reversed(d).with_var(var)
        shift = d - n
        if shift > 0:
            num = num.shift(shift)
        elif shift < 0:
            den = den.shift(-shift)
        return RatFunc(num, den)

    def to_laurent(self):
        """Laurent polynomial if the denominator is a monomial, else None."""
        if sum(1 for c in self.den.coeffs if c) != 1:
            return None
        k = self.den.valuation()
        inv = self.field.inv(self.den.lc)
        return LaurentPoly(self.field, {e - k: self.field.mul(c, inv) for e, c in enumerate(self.num.coeffs) if c}, self.var)

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


class LaurentPoly:
    """Finite sum of c_k v^k, k in Z."""

    __slots__ = ("field", "terms", "var")

    def __init__(self, field: FieldSpec, terms: dict | None = None, var="t"):
        self.field = field
        self.terms = {k: c for k, c in (terms or {}).items() if c}
        self.var = var

    @classmethod
    def monomial(cls, field, k, c=1, var="t"):
        return cls(field, {k: field.coerce(c)}, var)

    @classmethod
    def from_poly(cls, p: Poly1):
        return cls(p.field, {k: c for k, c in enumerate(p.coeffs) if c}, p.var)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise InvalidInput(f"mixed fields {self.field} and {other.field}")
            return other
        return LaurentPoly(self.field, {0: self.field.coerce(other)}, self.var)

    def __add__(self, other):
        o = self._lift(other)
        f = self.field
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = f.add(out.get(k, f.zero), c)
        return LaurentPoly(f, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.field, {k: self.field.neg(c) for k, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        f = self.field
        out = {}
        for a, x in self.terms.items():
            for b, y in o.terms.items():
                out[a + b] = f.add(out.get(a + b, f.zero), f.mul(x, y))
        return LaurentPoly(f, out, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            o = self._lift(other)
            return self.terms == o.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def monomial_exponent(self):
        """k if self is c*v^k with c != 0, else None."""
        if len(self.terms) != 1:
            return None
        return next(iter(self.terms))

    @property
    def min_exp(self):
        return min(self.terms) if self.terms else None

    @property
    def max_exp(self):
        return max(self.terms) if self.terms else None

    def to_ratfunc(self) -> RatFunc:
        f = self.field
        if not self.terms:
            return RatFunc(Poly1(f, [], self.var))
        lo = min(0, self.min_exp)
        coeffs = [f.zero] * (self.max_exp - lo + 1)
        for k, c in self.terms.items():
            coeffs[k - lo] = c
        num = Poly1._make(f, coeffs, self.var)
        return RatFunc(num, Poly1.monomial(f, -lo, 1, self.var))

    def __str__(self):
        if not self.terms:
            return "0"
        lo, hi = self.min_exp, self.max_exp
        coeffs = [self.terms.get(k, self.field.zero) for k in range(lo, hi + 1)]
        return format_univariate(self.field, coeffs, self.var, low=lo)

    def __repr__(self):
        return f"LaurentPoly({self})"
