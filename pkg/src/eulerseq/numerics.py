"""Floor arithmetic behind the Euler sequence and the W/L classification.

For a component (p/q) V of D and a degree d:

    m_i = floor(p i / q),  s_i = m_{i+d} - m_i,  s = min_i s_i = floor(p d / q).

A component is *Free* when p d = -1 mod q and the characteristic does not
divide q, *WAndL* when p d = -1 mod q but the characteristic divides q, and
*LOnly* otherwise.  W collects the WAndL components; L collects every
component that is not Free, so W is contained in L.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import InvalidInput


class ComponentClass(str, Enum):
    FREE = "Free"
    L_ONLY = "LOnly"
    W_AND_L = "WAndL"

    def __str__(self):
        return self.value


def _check(p: int, q: int):
    if q <= 0:
        raise InvalidInput(f"denominator must be positive, got {q}")
    if gcd(p, q) != 1:
        raise InvalidInput(f"p={p} and q={q} are not coprime")


def m_value(p: int, q: int, i: int) -> int:
    return (p * i) // q


def s_value(p: int, q: int, d: int) -> int:
    _check(p, q)
    return (p * d) // q


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def s_i_value(p: int, q: int, d: int, i: int):
    """(s_i, achiever) where achiever means s_i equals the minimum s.

    The flag is computed from the definition and cross-checked against the
    fractional-part criterion {pd/q} + {pi/q} < 1.
    """
    _check(p, q)
    si = m_value(p, q, i + d) - m_value(p, q, i)
    achiever = si == s_value(p, q, d)
    if achiever != (_frac(Fraction(p * d, q)) + _frac(Fraction(p * i, q)) < 1):
        raise AssertionError(f"achiever criterion disagrees at p={p} q={q} d={d} i={i}")
    return si, achiever


def is_free_congruence(p: int, q: int, d: int) -> bool:
    return (p * d + 1) % q == 0


def classify_component(p: int, q: int, d: int, char: int) -> ComponentClass:
    _check(p, q)
    if is_free_congruence(p, q, d):
        if char and q % char == 0:
            return ComponentClass.W_AND_L
        return ComponentClass.FREE
    return ComponentClass.L_ONLY


def build_WL(D, d: int, char: int):
    """(W, L) as IntDivisors over the support of D (coefficients 0 or 1)."""
    from .divisor import IntDivisor

    w_terms, l_terms = [], []
    for pl, c in D.terms:
        cls = classify_component(c.numerator, c.denominator, d, char)
        w_terms.append((pl, 1 if cls is ComponentClass.W_AND_L else 0))
        l_terms.append((pl, 0 if cls is ComponentClass.FREE else 1))
    return IntDivisor(D.field, tuple(w_terms)), IntDivisor(D.field, tuple(l_terms))


def classification_table(D, d: int, char: int) -> dict:
    W, L = build_WL(D, d, char)
    rows = []
    for pl, c in D.terms:
        p, q = c.numerator, c.denominator
        rows.append({
            "place": str(pl),
            "p": p,
            "q": q,
            "s": s_value(p, q, d),
            "class": str(classify_component(p, q, d, char)),
        })
    return {"components": rows, "W": str(W), "L": str(L)}
