"""Q-divisors on the projective line and their section rings.

A place is either a monic squarefree polynomial in t (a finite closed point,
or a cluster of conjugate points sharing one coefficient) or the point at
infinity.  Piece i of the section ring is L(floor(i D)), realized as rational
functions N(t)/Den_i(t) with a fixed denominator per degree; the formal T^i
is bookkeeping only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from .errors import InvalidInput, NonAmple
from .graded import WeightedPresentation, _monomials
from .kernel import Echelon, ExactMatrix, FieldSpec, MPoly, Poly1, RatFunc, parse_univariate, solve_kernel
from .kernel.poly1 import squarefree_coprime_check


@dataclass(frozen=True)
class Place:
    """Finite place (monic squarefree poly in t) or infinity (poly is None)."""

    poly: Poly1 | None = None

    @classmethod
    def infinity(cls) -> Place:
        return cls(None)

    @classmethod
    def finite(cls, poly: Poly1) -> Place:
        if poly.degree < 1:
            raise InvalidInput(f"place polynomial must be nonconstant, got {poly}")
        if not poly.is_monic():
            raise InvalidInput(f"place polynomial must be monic, got {poly}")
        if not squarefree_coprime_check([poly]):
            raise InvalidInput(f"place polynomial {poly} is not squarefree")
        return cls(poly)

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> Place:
        if text.strip() in ("inf", "infinity", "oo"):
            return cls.infinity()
        return cls.finite(parse_univariate(text, field, "t"))

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def __str__(self):
        return "inf" if self.poly is None else str(self.poly)


def chart_equation(place: Place, chart: int, field: FieldSpec) -> Poly1 | None:
    """Local equation of a place on a chart, or None if the place misses it."""
    if chart == 1:
        return None if place.is_infinity else place.poly
    if place.is_infinity:
        return Poly1.x(field, "s")
    rev = place.poly.reversed().with_var("s")
    if rev.degree < 1:
        return None
    return rev.monic()


def _validate_places(places: Sequence[Place]):
    seen_inf = False
    finite = []
    for pl in places:
        if pl.is_infinity:
            if seen_inf:
                raise InvalidInput("infinity listed twice")
            seen_inf = True
        else:
            finite.append(pl.poly)
    if len({f.field for f in finite}) > 1:
        raise InvalidInput("places over different fields")
    if not squarefree_coprime_check(finite):
        raise InvalidInput("place polynomials must be squarefree and pairwise coprime")


@dataclass(frozen=True)
class IntDivisor:
    """Integer divisor; zero coefficients are kept so the support is stable."""

    field: FieldSpec
    terms: tuple  # of (Place, int)

    def __post_init__(self):
        _validate_places([pl for pl, _ in self.terms])
        object.__setattr__(self, "terms", tuple((pl, int(c)) for pl, c in self.terms))

    @property
    def degree(self) -> int:
        return sum(c * pl.degree for pl, c in self.terms)

    def coefficient(self, place: Place) -> int:
        for pl, c in self.terms:
            if pl == place:
                return c
        return 0

    def __add__(self, other: IntDivisor) -> IntDivisor:
        return _combine(self, other, 1)

    def __sub__(self, other: IntDivisor) -> IntDivisor:
        return _combine(self, other, -1)

    def geq(self, other: IntDivisor) -> bool:
        places = {pl for pl, _ in self.terms} | {pl for pl, _ in other.terms}
        return all(self.coefficient(pl) >= other.coefficient(pl) for pl in places)

    def __str__(self):
        parts = [(pl, c) for pl, c in self.terms if c]
        if not parts:
            return "0"
        out = []
        for idx, (pl, c) in enumerate(parts):
            body = f"{{{pl}}}" if abs(c) == 1 else f"{abs(c)}*{{{pl}}}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


def _combine(a: IntDivisor, b: IntDivisor, sign: int) -> IntDivisor:
    order = [pl for pl, _ in a.terms] + [pl for pl, _ in b.terms if pl not in {q for q, _ in a.terms}]
    return IntDivisor(a.field, tuple((pl, a.coefficient(pl) + sign * b.coefficient(pl)) for pl in order))


@dataclass(frozen=True)
class QDivisorP1:
    """D = sum (p_V/q_V) V with distinct, pairwise coprime places."""

    field: FieldSpec
    terms: tuple  # of (Place, Fraction)

    def __post_init__(self):
        _validate_places([pl for pl, _ in self.terms])
        terms = []
        for pl, c in self.terms:
            c = Fraction(c)
            if c == 0:
                raise InvalidInput(f"zero coefficient at place {pl}")
            terms.append((pl, c))
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def build(cls, field: FieldSpec, spec) -> QDivisorP1:
        """From [(place text, coefficient), ...]."""
        return cls(field, tuple((Place.parse(s, field), Fraction(c)) for s, c in spec))

    @property
    def places(self):
        return [pl for pl, _ in self.terms]

    @property
    def degree(self) -> Fraction:
        return sum((c * pl.degree for pl, c in self.terms), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.terms)

    def over(self, field: FieldSpec) -> QDivisorP1:
        """Re-read the place polynomials over another field (same coefficients)."""
        return QDivisorP1(field, tuple((Place.parse(str(pl), field), c) for pl, c in self.terms))

    def shifted(self, shifts: Sequence[int]) -> QDivisorP1:
        return QDivisorP1(self.field, tuple((pl, c + k) for (pl, c), k in zip(self.terms, shifts)))

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "places": [
                {"poly": str(pl), "num": c.numerator, "den": c.denominator} for pl, c in self.terms
            ],
        }

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for idx, (pl, c) in enumerate(self.terms):
            mag = abs(c)
            body = f"{{{pl}}}" if mag == 1 else f"{mag}*{{{pl}}}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


def load_divisor(doc: dict, field: FieldSpec | None = None) -> QDivisorP1:
    """Build a divisor from the JSON divisor document (optionally over another field)."""
    if "places" not in doc:
        raise InvalidInput("divisor document is missing 'places'")
    if field is None:
        field = FieldSpec.from_json(doc.get("field", {"kind": "Q"}))
    terms = []
    for entry in doc["places"]:
        try:
            poly, num, den = entry["poly"], int(entry.get("num", 1)), int(entry.get("den", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed place entry {entry!r}") from exc
        if den <= 0:
            raise InvalidInput(f"denominator must be positive in {entry!r}")
        terms.append((Place.parse(poly, field), Fraction(num, den)))
    return QDivisorP1(field, tuple(terms))


# -- divisor arithmetic ---------------------------------------------------


def floor_divisor(D: QDivisorP1, i: int) -> IntDivisor:
    return IntDivisor(D.field, tuple((pl, floor(i * c)) for pl, c in D.terms))


def validate_ample(D: QDivisorP1) -> None:
    deg = D.degree
    if deg <= 0:
        raise NonAmple(deg)


# -- Riemann-Roch spaces ----------------------------------------------------


@dataclass(frozen=True)
class SectionSpace:
    """L(E) = {f : div(f) + E >= 0}; elements are numerators over ``den``."""

    divisor: IntDivisor
    den: Poly1
    numerators: tuple  # Poly1, one per basis element
    top: int  # numerators have degree <= top

    @property
    def dimension(self) -> int:
        return len(self.numerators)

    @property
    def basis(self):
        return [RatFunc(n, self.den) for n in self.numerators]

    def vector(self, num: Poly1) -> dict:
        return {k: c for k, c in enumerate(num.coeffs) if c}


def _denominator_data(E: IntDivisor):
    f = E.field
    one = Poly1.constant(f, 1, "t")
    den, neg, e_inf = one, one, 0
    for pl, c in E.terms:
        if pl.is_infinity:
            e_inf = c
        elif c > 0:
            den = den * pl.poly**c
        elif c < 0:
            neg = neg * pl.poly**(-c)
    return den, neg, e_inf


def rr_space(E: IntDivisor) -> SectionSpace:
    """Basis of L(E) from the kernel of the pole/divisibility conditions on numerators."""
    f = E.field
    den, neg, e_inf = _denominator_data(E)
    top = den.degree + e_inf
    bound = den.degree + max(0, e_inf) + neg.degree
    ncols = bound + 1
    rows = []
    if neg.degree > 0:
        # remainder of each t^k modulo neg, as columns of the condition matrix
        rems = [Poly1.monomial(f, k, 1, "t") % neg for k in range(ncols)]
        for r in range(neg.degree):
            rows.append([rem.coeff(r) for rem in rems])
    for k in range(max(top + 1, 0), ncols):
        row = [f.zero] * ncols
        row[k] = f.one
        rows.append(row)
    if top < 0:
        return SectionSpace(E, den, (), top)
    m = ExactMatrix.from_rows(f, rows, ncols)
    kernel = solve_kernel(m)
    nums = tuple(Poly1(f, v, "t", _raw=True) for v in kernel)
    return SectionSpace(E, den, nums, top)


def section_ring(D: QDivisorP1, maxdeg: int) -> list:
    validate_ample(D)
    return [rr_space(floor_divisor(D, i)) for i in range(maxdeg + 1)]


# -- presentation discovery -------------------------------------------------


@dataclass
class SectionRingModel:
    divisor: QDivisorP1
    maxdeg: int
    pieces: list
    generators: list  # (degree, numerator Poly1, RatFunc)
    presentation: WeightedPresentation
    complete: bool
    events: dict  # degree -> (new generators, new relations)

    @property
    def relations(self):
        return self.presentation.relations

    @property
    def generator_degrees(self):
        return [g[0] for g in self.generators]

    def to_json(self) -> dict:
        return {
            "divisor": str(self.divisor),
            "maxdeg": self.maxdeg,
            "dims": [p.dimension for p in self.pieces],
            "generators": [
                {"name": name, "degree": deg, "function": str(fn)}
                for name, (deg, _, fn) in zip(self.presentation.variables, self.generators)
            ],
            "weights": list(self.presentation.weights),
            "relations": [str(g) for g in self.presentation.relations],
            "complete": self.complete,
        }


def present_section_ring(D: QDivisorP1, maxdeg: int) -> SectionRingModel:
    """Greedy degree-by-degree generators and relations of the section ring."""
    validate_ample(D)
    if maxdeg < 1:
        raise InvalidInput("maxdeg must be at least 1")
    f = D.field
    pieces = section_ring(D, maxdeg)
    gens = []  # (degree, numerator over pieces[degree].den)
    relations = []  # dicts {exponent tuple: coeff} over current generator list
    events = {}
    values_by_degree = {0: {(): pieces[0].numerators[0]}}

    for i in range(1, maxdeg + 1):
        piece = pieces[i]
        weights = tuple(g[0] for g in gens)
        mons = _monomials(weights, i) if gens else ()
        values = {}
        for exp in mons:
            k = next(j for j, a in enumerate(exp) if a)
            prev = list(exp)
            prev[k] -= 1
            prev = tuple(prev)
            wk = gens[k][0]
            lower = values_by_degree[i - wk][prev] if i - wk > 0 else pieces[0].numerators[0]
            num = lower * gens[k][1] * piece.den
            values[exp] = num.exact_div(pieces[i - wk].den * pieces[wk].den)
        values_by_degree[i] = values

        # relations: kernel of evaluation, modulo multiples of lower relations
        new_rel = 0
        if mons:
            eval_rows: dict = {}
            for col, exp in enumerate(mons):
                for r, c in enumerate(values[exp].coeffs):
                    if c:
                        eval_rows.setdefault(r, {})[col] = c
            ech = Echelon(f)
            for r in sorted(eval_rows):
                ech.add(eval_rows[r])
            kernel = ech.kernel_sparse(len(mons))
            if kernel:
                partial = _presentation(f, weights, relations)
                known = Echelon(f)
                ideal = partial.piece(i).ideal
                for p in ideal.order:
                    known.add(ideal.rows[p])
                for v in kernel:
                    if known.add(v) is not None:
                        relations.append({mons[col]: c for col, c in v.items()})
                        new_rel += 1
            span = Echelon(f)
            for exp in mons:
                span.add(piece.vector(values[exp]))
        else:
            span = Echelon(f)

        new_gen = 0
        for num in piece.numerators:
            if span.add(piece.vector(num)) is not None:
                gens.append((i, num))
                relations = [{e + (0,): c for e, c in rel.items()} for rel in relations]
                for deg in values_by_degree:
                    values_by_degree[deg] = {e + (0,): v for e, v in values_by_degree[deg].items()}
                values_by_degree[i][(0,) * (len(gens) - 1) + (1,)] = num
                new_gen += 1
        if new_gen or new_rel:
            events[i] = (new_gen, new_rel)

    quiet = ceil(maxdeg / 3)
    complete = not any(deg > maxdeg - quiet for deg in events)
    weights = tuple(g[0] for g in gens)
    presentation = _presentation(f, weights, relations)
    generators = [(deg, num, RatFunc(num, pieces[deg].den)) for deg, num in gens]
    return SectionRingModel(D, maxdeg, pieces, generators, presentation, complete, events)


def present_until_complete(D: QDivisorP1, start: int | None = None, step: int = 3, cap: int = 30) -> SectionRingModel:
    """Rerun the presentation search with a growing depth until it is complete.

    The last (possibly incomplete) model is returned once ``cap`` is reached.
    """
    if start is None:
        start = max(6, 3 * max(c.denominator for _, c in D.terms))
    maxdeg = min(start, cap)
    while True:
        model = present_section_ring(D, maxdeg)
        if model.complete or maxdeg >= cap:
            return model
        maxdeg = min(maxdeg + step, cap)


def _presentation(field, weights, relations) -> WeightedPresentation:
    names = tuple(f"x{k + 1}" for k in range(len(weights)))
    rels = tuple(MPoly(field, names, _raw_fix(rel, len(weights)), _raw=True) for rel in relations)
    return WeightedPresentation(field, names, weights, rels)


def _raw_fix(rel, n):
    return {e + (0,) * (n - len(e)): c for e, c in rel.items()}


def evaluate_relation(model: SectionRingModel, rel: MPoly) -> RatFunc:
    """Value of a relation on the generator functions (zero for a true relation)."""
    f = model.divisor.field
    acc = RatFunc.const(f, 0)
    fns = [g[2] for g in model.generators]
    for e, c in rel.terms.items():
        term = RatFunc.const(f, c)
        for fn, a in zip(fns, e):
            if a:
                term = term * fn**a
        acc = acc + term
    return acc
