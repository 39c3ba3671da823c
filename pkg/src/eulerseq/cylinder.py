"""The rank-2 sheaf of degree-d derivations over the two charts of the line.

A degree-d derivation of the section ring is written T^{-d} delta = sigma +
alpha T d/dT, where sigma = sigma_t d/dt is a rational vector field and alpha a
rational function.  On a chart with local equation g of a component (p/q) V,
the pair is a local section iff

    ord_V(sigma_t) >= -s   and   ord_V(i*alpha - m_i*sigma_t*g'/g) >= -s_i

for every integer i (the factor i lives in the ground field).  Since s_i only
depends on i mod q and the instance at i = q is the difference condition, the
samples i = 0..q are already exact.  Away from the support the pair must be
regular.

Charts: U1 = Spec k[t] and U2 = Spec k[s] with s = 1/t.  On U2 the vector
field coefficient is taken with respect to d/ds, so sigma_s = -s^2 sigma_t(1/s).
Twists O(n) mean O(n*{inf}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .divisor import QDivisorP1, chart_equation, floor_divisor, present_section_ring, present_until_complete, validate_ample
from .errors import InternalError, InvalidInput
from .kernel import Echelon, LaurentMatrix, LaurentPoly, Poly1, RatFunc, gcd, laurent_det
from .numerics import ComponentClass, build_WL, classification_table, classify_component, m_value, s_value

CHART_VARS = {1: "t", 2: "s"}


@dataclass(frozen=True)
class LocalDerivationPair:
    """(sigma, alpha): sigma is the vector field coefficient in the chart coordinate."""

    sigma: RatFunc
    alpha: RatFunc

    def __str__(self):
        return f"({self.sigma}, {self.alpha})"

    def scale(self, f: RatFunc) -> LocalDerivationPair:
        return LocalDerivationPair(self.sigma * f, self.alpha * f)

    def __add__(self, other: LocalDerivationPair) -> LocalDerivationPair:
        return LocalDerivationPair(self.sigma + other.sigma, self.alpha + other.alpha)


@dataclass(frozen=True)
class ChartModule:
    chart: int
    degree: int
    basis: tuple  # two LocalDerivationPair values, kernel generator first

    def to_json(self) -> dict:
        return {
            "chart": self.chart,
            "degree": self.degree,
            "basis": [{"sigma": str(b.sigma), "alpha": str(b.alpha)} for b in self.basis],
        }


@dataclass(frozen=True)
class SplittingType:
    a1: int
    a2: int

    def __post_init__(self):
        if self.a1 < self.a2:
            raise InternalError(f"splitting type not ordered: ({self.a1}, {self.a2})")

    def as_tuple(self):
        return (self.a1, self.a2)

    def __iter__(self):
        return iter((self.a1, self.a2))

    def __str__(self):
        return f"O({self.a1}) + O({self.a2})"


def _ratfunc(p: Poly1) -> RatFunc:
    return RatFunc(p)


def _visible(D: QDivisorP1, chart: int):
    """(place, chart equation, coefficient) for the places of D meeting the chart."""
    out = []
    for pl, c in D.terms:
        g = chart_equation(pl, chart, D.field)
        if g is not None:
            out.append((pl, g, c))
    return out


def order_at_least(f: RatFunc, g: Poly1, k: int) -> bool:
    """ord_pi(f) >= k for every prime factor pi of the squarefree polynomial g."""
    if f.is_zero():
        return True
    if k > 0:
        return (f.num % (g**k)).is_zero()
    G = gcd(f.den, g ** (1 - k))
    return (g ** (-k) % G).is_zero()


def _regular_off(f: RatFunc, support: Poly1) -> bool:
    """The denominator of f only involves prime factors of support."""
    den = f.den
    while den.degree > 0:
        h = gcd(den, support)
        if h.degree == 0:
            return False
        den = den.exact_div(h)
    return True


def _default_samples(q: int):
    return range(0, q + 1)


def check_local_conditions(pair: LocalDerivationPair, D: QDivisorP1, d: int, i_samples=None, chart: int = 1) -> bool:
    """Do the pole-order conditions hold on the chart?

    With i_samples None the exact finite system i = 0..q per place is used;
    otherwise the supplied i values are checked at every place.
    """
    f = D.field
    var = CHART_VARS[chart]
    sigma, alpha = pair.sigma, pair.alpha
    for x in (sigma, alpha):
        if not x.is_zero() and x.var != var:
            raise InvalidInput(f"pair is not written in the chart coordinate {var}")
    visible = _visible(D, chart)
    support = Poly1.constant(f, 1, var)
    for _, g, _ in visible:
        support = support * g
    if not (_regular_off(sigma, support) and _regular_off(alpha, support)):
        return False
    for _, g, c in visible:
        p, q = c.numerator, c.denominator
        s = s_value(p, q, d)
        if not order_at_least(sigma, g, -s):
            return False
        log_term = sigma * RatFunc(g.derivative(), g)
        samples = _default_samples(q) if i_samples is None else i_samples
        for i in samples:
            si = m_value(p, q, i + d) - m_value(p, q, i)
            expr = alpha * f.from_int(i) - log_term * f.from_int(m_value(p, q, i))
            if not order_at_least(expr, g, -si):
                return False
    return True


def chart_basis(D: QDivisorP1, d: int, chart: int) -> ChartModule:
    """Basis of the chart module: kernel generator, then the lifted generator.

    The kernel generator is (0, h) with h generating O(floor(dD) + W); the
    lift carries the generator u of the tangent sheaf twisted by
    floor(dD) - L, with alpha = sum over Free components of (p/q) u g'/g.
    """
    if chart not in CHART_VARS:
        raise InvalidInput(f"chart must be 1 or 2, got {chart}")
    validate_ample(D)
    f = D.field
    char = f.characteristic
    var = CHART_VARS[chart]
    one = RatFunc.const(f, 1, var)
    h, u = one, one
    free = []
    for _, g, c in _visible(D, chart):
        p, q = c.numerator, c.denominator
        s = s_value(p, q, d)
        cls = classify_component(p, q, d, char)
        w = 1 if cls is ComponentClass.W_AND_L else 0
        l = 0 if cls is ComponentClass.FREE else 1
        gr = _ratfunc(g)
        h = h * gr ** (-(s + w))
        u = u * gr ** (-(s - l))
        if cls is ComponentClass.FREE:
            free.append((g, c))
    alpha = RatFunc.const(f, 0, var)
    for g, c in free:
        coef = f.div(f.from_int(c.numerator), f.from_int(c.denominator))
        alpha = alpha + u * RatFunc(g.derivative().scale(coef), g)
    zero = RatFunc.const(f, 0, var)
    return ChartModule(chart, d, (LocalDerivationPair(zero, h), LocalDerivationPair(u, alpha)))


def to_second_chart(pair: LocalDerivationPair) -> LocalDerivationPair:
    """Rewrite a U1 pair in the coordinate s = 1/t."""
    f = pair.sigma.field
    sigma = pair.sigma.substitute_inverse("s") if pair.sigma else RatFunc.const(f, 0, "s")
    alpha = pair.alpha.substitute_inverse("s") if pair.alpha else RatFunc.const(f, 0, "s")
    minus_s2 = RatFunc(Poly1.monomial(f, 2, -1, "s"))
    return LocalDerivationPair(sigma * minus_s2, alpha)


def _coordinates(pair: LocalDerivationPair, basis) -> tuple:
    """Solve pair = x*basis[0] + y*basis[1] over the rational functions."""
    e, e2 = basis
    det = e.sigma * e2.alpha - e2.sigma * e.alpha
    if det.is_zero():
        raise InternalError("chart basis is degenerate")
    x = (pair.sigma * e2.alpha - e2.sigma * pair.alpha) / det
    y = (e.sigma * pair.alpha - pair.sigma * e.alpha) / det
    return x, y


def same_module(first, second) -> bool:
    """Do two bases (sequences of pairs on one chart) generate the same module?

    True when each basis has polynomial coordinates in the other.
    """
    for a, b in ((first, second), (second, first)):
        for pair in a:
            for c in _coordinates(pair, tuple(b)):
                if not c.is_polynomial():
                    return False
    return True


def transition_from_bases(first: ChartModule, second: ChartModule) -> LaurentMatrix:
    """Row i holds the U2-coordinates of the i-th U1 basis element."""
    if first.chart != 1 or second.chart != 2:
        raise InvalidInput("expected a U1 module followed by a U2 module")
    f = second.basis[0].alpha.field
    rows = []
    for b in first.basis:
        row = []
        for c in _coordinates(to_second_chart(b), second.basis):
            lp = c.to_laurent() if c else LaurentPoly(f, {}, "s")
            if lp is None:
                raise InternalError(f"transition entry {c} is not a Laurent polynomial")
            row.append(lp)
        rows.append(row)
    m = LaurentMatrix(rows, f, "s")
    if laurent_det(m).monomial_exponent() is None:
        raise InternalError(f"transition determinant {laurent_det(m)} is not a monomial")
    return m


def transition_matrix(D: QDivisorP1, d: int) -> LaurentMatrix:
    return _transition_cached(D, d)


@lru_cache(maxsize=4096)
def _transition_cached(D: QDivisorP1, d: int) -> LaurentMatrix:
    return transition_from_bases(chart_basis(D, d, 1), chart_basis(D, d, 2))


def determinant_exponent(m: LaurentMatrix) -> int:
    k = laurent_det(m).monomial_exponent()
    if k is None:
        raise InternalError("transition determinant is not a monomial")
    return k


def _sections_at_bound(m: LaurentMatrix, n: int, bound: int) -> int:
    """Dimension of {(f_1, f_2) in k[t], deg <= bound} glueing into M(n)."""
    f = m.field
    size = m.size
    col = {}
    for i in range(size):
        for k in range(bound + 1):
            col[(i, k)] = len(col)
    rows: dict = {}
    for i in range(size):
        for j in range(size):
            entry = m[i, j]
            for e, c in entry.terms.items():
                for k in range(bound + 1):
                    ex = e - k
                    if ex < -n:
                        rows.setdefault((j, ex), {})[col[(i, k)]] = c
    ech = Echelon(f)
    for key in sorted(rows):
        ech.add(rows[key])
    return len(col) - ech.rank


def h0_from_transition(m: LaurentMatrix, n: int) -> int:
    span = 0
    for r in m.entries:
        for e in r:
            if not e.is_zero():
                span = max(span, e.max_exp - e.min_exp, abs(e.max_exp), abs(e.min_exp))
    bound = span + abs(n) + 4
    prev = _sections_at_bound(m, n, bound)
    while True:
        bound *= 2
        cur = _sections_at_bound(m, n, bound)
        if cur == prev:
            return cur
        prev = cur


def h0_twisted(D: QDivisorP1, d: int, n: int) -> int:
    """dim H^0 of the derivation sheaf of degree d twisted by O(n*{inf})."""
    return h0_from_transition(transition_matrix(D, d), n)


def splitting_from_transition(m: LaurentMatrix) -> SplittingType:
    total = determinant_exponent(m)
    # a1 >= ceil(total/2), so this twist certainly has sections
    n = -((total + 1) // 2)
    while h0_from_transition(m, n) == 0:
        n += 1
    while h0_from_transition(m, n - 1) > 0:
        n -= 1
    a1 = -n
    return SplittingType(a1, total - a1)


def splitting_type(D: QDivisorP1, d: int) -> SplittingType:
    return splitting_from_transition(transition_matrix(D, d))


def line_degrees(D: QDivisorP1, d: int):
    """(a, b): degrees of the kernel and quotient line bundles."""
    W, L = build_WL(D, d, D.field.characteristic)
    F = floor_divisor(D, d)
    return (F + W).degree, 2 + (F - L).degree


@lru_cache(maxsize=512)
def _presentation(D: QDivisorP1, maxdeg: int | None):
    if maxdeg is None:
        return present_until_complete(D)
    return present_section_ring(D, maxdeg)


def derivation_dimension(D: QDivisorP1, d: int, maxdeg: int | None = None):
    """(dim Der_d of the discovered presentation, completeness flag).

    With maxdeg None the search depth grows until the presentation is complete.
    """
    from .derivations import solve_degree

    model = _presentation(D, maxdeg)
    return solve_degree(model.presentation, d).dimension, model.complete


def euler_report(D: QDivisorP1, d: int, char: int | None = None, maxdeg: int | None = None) -> dict:
    """Classification, line degrees, splitting type and consistency checks."""
    from .kernel import FieldSpec

    if char is not None and char != D.field.characteristic:
        D = D.over(FieldSpec.of_characteristic(char))
    validate_ample(D)
    table = classification_table(D, d, D.field.characteristic)
    a, b = line_degrees(D, d)
    m = transition_matrix(D, d)
    split = splitting_from_transition(m)
    h0 = h0_from_transition(m, 0)
    det_exp = determinant_exponent(m)
    der_dim, complete = derivation_dimension(D, d, maxdeg)
    lower = max(0, a + 1) + max(0, b + 1) - max(0, -a - 1)
    upper = max(0, a + 1) + max(0, b + 1)
    checks = {
        "degree_sum": split.a1 + split.a2 == a + b == det_exp,
        "h0_bounds": lower <= h0 <= upper,
        "der_dim": (der_dim == h0) if complete else True,
    }
    return {
        "characteristic": D.field.characteristic,
        "d": d,
        "components": table["components"],
        "W": table["W"],
        "L": table["L"],
        "a": a,
        "b": b,
        "splitting": [split.a1, split.a2],
        "det_exponent": det_exp,
        "h0_M": h0,
        "der_dim": der_dim,
        "complete": complete,
        "consistent": all(checks.values()),
    }
