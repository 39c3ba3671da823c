"""Weighted polynomial rings modulo homogeneous ideals, one degree at a time.

Every graded piece I_e of the ideal is spanned by the monomial multiples
m * g_j with deg m + deg g_j = e, so no Groebner basis is needed: each piece
is plain linear algebra over the monomials of weighted degree e.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import InvalidInput, NonHomogeneous
from .kernel import Echelon, ExactMatrix, FieldSpec, MPoly, parse_poly


@lru_cache(maxsize=None)
def _monomials(weights: tuple, e: int) -> tuple:
    """Exponent vectors of weighted degree e, descending lex order."""
    if e < 0:
        return ()
    n = len(weights)
    out = []

    def rec(i, remaining, prefix):
        if i == n - 1:
            w = weights[i]
            if remaining % w == 0:
                out.append(tuple(prefix) + (remaining // w,))
            return
        w = weights[i]
        for a in range(remaining // w, -1, -1):
            prefix.append(a)
            rec(i + 1, remaining - a * w, prefix)
            prefix.pop()

    if n == 0:
        return ((),) if e == 0 else ()
    rec(0, e, [])
    return tuple(out)


def monomial_count(weights: Sequence[int], e: int) -> int:
    """Coefficient of t^e in prod 1/(1 - t^w), by dynamic programming."""
    if e < 0:
        return 0
    ways = [1] + [0] * e
    for w in weights:
        for k in range(w, e + 1):
            ways[k] += ways[k - w]
    return ways[e]


@dataclass
class GradedPiece:
    """Degree-e slice of P and of the ideal I, with a normal form for P_e/I_e."""

    degree: int
    monomials: tuple
    index: dict
    ideal: Echelon
    standard: tuple  # indices of monomials not led by the ideal; a basis of A_e

    @property
    def dim_polynomials(self) -> int:
        return len(self.monomials)

    @property
    def dim_ideal(self) -> int:
        return self.ideal.rank

    @property
    def dim_quotient(self) -> int:
        return len(self.monomials) - self.ideal.rank

    def ideal_matrix(self) -> ExactMatrix:
        """Matrix whose column span is I_e in the monomial basis."""
        f = self.ideal.field
        n = len(self.monomials)
        cols = [self.ideal.rows[p] for p in self.ideal.pivots()]
        rows = [[col.get(i, f.zero) for col in cols] for i in range(n)]
        return ExactMatrix.from_rows(f, rows, len(cols))

    def vector(self, poly: MPoly) -> dict:
        vec = {}
        for e, c in poly.terms.items():
            if e not in self.index:
                raise InvalidInput(f"monomial {poly.monomial_str(e)} is not of degree {self.degree}")
            vec[self.index[e]] = c
        return vec

    def normal_form(self, vec: dict) -> dict:
        """Reduce modulo I_e; the result is supported on standard monomials."""
        return self.ideal.reduce(vec)

    def contains(self, vec: dict) -> bool:
        return not self.ideal.reduce(vec)

    def poly(self, vec: dict, ring: WeightedPresentation) -> MPoly:
        return MPoly._make(ring.field, ring.variables, {self.monomials[i]: c for i, c in vec.items()})


@dataclass(frozen=True, eq=False)
class WeightedPresentation:
    """A = k[x_1..x_n]/(g_1..g_m) with positive weights and homogeneous g_j."""

    field: FieldSpec
    variables: tuple
    weights: tuple
    relations: tuple = ()
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = dc_field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.variables) != len(self.weights):
            raise InvalidInput("one weight per variable is required")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidInput("duplicate variable names")
        if any(w <= 0 for w in self.weights):
            raise InvalidInput("weights must be positive integers")
        rels = []
        for g in self.relations:
            if not isinstance(g, MPoly):
                raise InvalidInput("relations must be MPoly instances")
            if g.field != self.field or g.vars != self.variables:
                raise InvalidInput("relation over a different ring")
            if g.is_zero():
                continue
            bad = g.homogeneity_witness(self.weights)
            if bad is not None:
                raise NonHomogeneous(str(g), g.monomial_str(bad[0]), g.monomial_str(bad[1]))
            rels.append(g)
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def build(cls, field: FieldSpec, variables, weights, relations=()) -> WeightedPresentation:
        """Convenience constructor accepting relation strings."""
        variables = tuple(variables)
        rels = []
        for r in relations:
            rels.append(parse_poly(r, field, variables) if isinstance(r, str) else r)
        return cls(field, variables, tuple(weights), tuple(rels))

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def relation_degrees(self) -> tuple:
        return tuple(g.weighted_degree(self.weights) for g in self.relations)

    @property
    def weight_gcd(self) -> int:
        g = 0
        for w in self.weights:
            g = gcd(g, w)
        return g

    def over(self, field: FieldSpec) -> WeightedPresentation:
        """The same presentation with coefficients reduced into another field."""
        rels = [MPoly(field, self.variables, {e: _transport(c, field) for e, c in g.terms.items()}) for g in self.relations]
        return WeightedPresentation(field, self.variables, self.weights, tuple(rels))

    def piece(self, e: int) -> GradedPiece:
        cached = self._cache.get(e)
        if cached is not None:
            return cached
        piece = _compute_piece(self, e)
        with self._lock:
            return self._cache.setdefault(e, piece)

    def degree_of(self, poly: MPoly):
        return poly.weighted_degree(self.weights)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "variables": list(self.variables),
            "weights": list(self.weights),
            "relations": [str(g) for g in self.relations],
        }

    def __repr__(self):
        rels = ", ".join(str(g) for g in self.relations)
        return f"WeightedPresentation({self.field}[{', '.join(self.variables)}] weights {self.weights} / ({rels}))"


def _transport(c, field: FieldSpec):
    return field.coerce(c)


def _compute_piece(ring: WeightedPresentation, e: int) -> GradedPiece:
    mons = _monomials(ring.weights, e)
    index = {m: i for i, m in enumerate(mons)}
    ech = Echelon(ring.field)
    for g, dg in zip(ring.relations, ring.relation_degrees):
        rest = e - dg
        if rest < 0:
            continue
        for m in _monomials(ring.weights, rest):
            vec = {}
            for ge, c in g.terms.items():
                vec[index[tuple(a + b for a, b in zip(ge, m))]] = c
            ech.add(vec)
    pivots = set(ech.rows)
    standard = tuple(i for i in range(len(mons)) if i not in pivots)
    return GradedPiece(e, mons, index, ech, standard)


def monomial_basis(ring: WeightedPresentation, e: int) -> list:
    return list(_monomials(ring.weights, e))


def ideal_piece(ring: WeightedPresentation, e: int) -> GradedPiece:
    return ring.piece(e)


def quotient_dim(ring: WeightedPresentation, e: int) -> int:
    if e < 0:
        return 0
    return ring.piece(e).dim_quotient


def hilbert_ci_oracle(weights: Sequence[int], relation_degrees: Sequence[int], e: int) -> int:
    """Coefficient of t^e in prod_j (1 - t^{d_j}) / prod_i (1 - t^{w_i}).

    Only meaningful when the relations form a regular sequence.
    """
    if e < 0:
        return 0
    series = [0] * (e + 1)
    series[0] = 1
    for w in weights:
        for k in range(w, e + 1):
            series[k] += series[k - w]
    for d in relation_degrees:
        for k in range(e, d - 1, -1):
            series[k] -= series[k - d]
    return series[e]


def load_ring(doc: dict) -> WeightedPresentation:
    """Build a presentation from the JSON ring document."""
    for key in ("field", "variables", "weights"):
        if key not in doc:
            raise InvalidInput(f"ring document is missing {key!r}")
    field = FieldSpec.from_json(doc["field"])
    return WeightedPresentation.build(field, doc["variables"], doc["weights"], doc.get("relations", []))
