"""Exact scalar fields: the rationals and prime fields F_p.

Elements are stored as plain Python values (``Fraction`` over Q, ``int`` in
``range(p)`` over F_p); a :class:`FieldSpec` carries the operations.  The
:class:`FieldElement` wrapper exists for interactive use and for catching
mixed-field input at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..errors import InvalidInput


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Q when ``p == 0``, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0:
            if not (2 <= self.p < 2**31):
                raise InvalidInput(f"prime modulus out of range: {self.p}")
            if not is_prime(self.p):
                raise InvalidInput(f"modulus {self.p} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def of_characteristic(cls, char: int) -> FieldSpec:
        return cls(char)

    @property
    def kind(self) -> str:
        return "Q" if self.p == 0 else "Fp"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def to_json(self) -> dict:
        return {"kind": "Q"} if self.p == 0 else {"kind": "Fp", "p": self.p}

    @classmethod
    def from_json(cls, doc: dict) -> FieldSpec:
        kind = doc.get("kind")
        if kind in ("Q", "QQ", "Rationals"):
            return cls(0)
        if kind in ("Fp", "PrimeField"):
            if "p" not in doc:
                raise InvalidInput("prime field needs 'p'")
            return cls(int(doc["p"]))
        raise InvalidInput(f"unknown field kind {kind!r}")

    # -- scalar operations on raw values -------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def coerce(self, x: Any):
        """Map an int, Fraction or FieldElement into this field's raw values."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise InvalidInput(f"element of {x.field} used in {self}")
            return x.value
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise InvalidInput(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if self.p == 0:
            return a**e
        if e < 0:
            a, e = self.inv(a), -e
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return Fraction(n) if self.p == 0 else n % self.p

    def from_fraction(self, q: Fraction):
        return self.coerce(Fraction(q))

    def fmt(self, a) -> str:
        """Exact string form; F_p residues are printed symmetrically."""
        if self.p == 0:
            return str(a)
        return str(a - self.p if a > self.p // 2 else a)

    def __call__(self, x) -> FieldElement:
        return FieldElement(self, self.coerce(x))


QQ = FieldSpec(0)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: Any

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InvalidInput(f"mixed fields {self.field} and {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (InvalidInput, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.fmt(self.value)

    def __repr__(self):
        return f"{self.field}({self.field.fmt(self.value)})"
