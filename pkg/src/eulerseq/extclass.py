"""Cech class of the generalized Euler sequence on the projective line.

Each Free component (p/q) V contributes (p/q) (dg2/g2 - dg1/g1), where g1, g2
are its local equations on U1 and U2 (a chart missing V uses the unit
equation).  The sum is a rational 1-form f(t) dt regular on the overlap
k[t, 1/t]; its class in H^1(P^1, Omega^1) = k is read off as the coefficient
of t^-1 in f, since coboundaries only produce t^k dt with k >= 0 or k <= -2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cylinder import line_degrees, splitting_type
from .divisor import QDivisorP1, chart_equation, validate_ample
from .errors import HypothesisViolated, InternalError
from .kernel import FieldSpec, LaurentPoly, Poly1, RatFunc
from .numerics import ComponentClass, build_WL, classify_component


@dataclass(frozen=True)
class CechClass:
    cocycle: LaurentPoly  # f with the cocycle equal to f(t) dt
    residue: int | object  # field element
    log_trivial: bool

    def cocycle_str(self) -> str:
        f = self.cocycle
        field = f.field
        k = f.monomial_exponent()
        if k is not None and k < 0:
            c = field.fmt(f.terms[k])
            return f"{c}/t" if k == -1 else f"{c}/t^{-k}"
        return str(f)


def _dlog_t(g: Poly1) -> RatFunc:
    """g'/g for g in t."""
    return RatFunc(g.derivative(), g)


def _dlog_s_in_t(g: Poly1, field: FieldSpec) -> RatFunc:
    """The dt-coefficient of dg/g for g in s = 1/t, i.e. -(1/t^2) g'(1/t)/g(1/t)."""
    form_s = RatFunc(g.derivative(), g)
    in_t = form_s.substitute_inverse("t")
    return in_t * RatFunc(Poly1.constant(field, -1, "t"), Poly1.monomial(field, 2, 1, "t"))


def _over_char(D: QDivisorP1, char: int | None) -> QDivisorP1:
    if char is None or char == D.field.characteristic:
        return D
    return D.over(FieldSpec.of_characteristic(char))


def cech_cocycle(D: QDivisorP1, d: int, char: int | None = None) -> CechClass:
    D = _over_char(D, char)
    validate_ample(D)
    f = D.field
    W, L = build_WL(D, d, f.characteristic)
    if W.degree != 0:
        raise HypothesisViolated(f"W = {W} is nonzero for d={d}; the class is only defined when W = 0")
    total = RatFunc.const(f, 0, "t")
    for pl, c in D.terms:
        if classify_component(c.numerator, c.denominator, d, f.characteristic) is not ComponentClass.FREE:
            continue
        g1 = chart_equation(pl, 1, f)
        g2 = chart_equation(pl, 2, f)
        form = RatFunc.const(f, 0, "t")
        if g2 is not None:
            form = form + _dlog_s_in_t(g2, f)
        if g1 is not None:
            form = form - _dlog_t(g1)
        coef = f.div(f.from_int(c.numerator), f.from_int(c.denominator))
        total = total + form * RatFunc.const(f, coef, "t")
    lp = total.to_laurent() if total else LaurentPoly(f, {}, "t")
    if lp is None:
        raise InternalError(f"cocycle {total} is not regular on the chart overlap")
    residue = lp.terms.get(-1, f.zero)
    return CechClass(lp, residue, L.degree >= 1)


def splits(D: QDivisorP1, d: int, char: int | None = None) -> bool:
    cls = cech_cocycle(D, d, char)
    return cls.log_trivial or not cls.residue


def ext_report(D: QDivisorP1, d: int, char: int | None = None) -> dict:
    D = _over_char(D, char)
    cls = cech_cocycle(D, d)
    split = splitting_type(D, d)
    a, b = line_degrees(D, d)
    predicted = cls.log_trivial or not cls.residue
    return {
        "characteristic": D.field.characteristic,
        "d": d,
        "cocycle": cls.cocycle_str(),
        "residue": D.field.fmt(cls.residue),
        "splits": predicted,
        "log_trivial": cls.log_trivial,
        "agrees_with_splitting": predicted == (split.as_tuple() == tuple(sorted((a, b), reverse=True))),
    }
