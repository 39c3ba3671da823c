"""Homogeneous derivations of a presented graded algebra.

A degree-d derivation of A = P/I is given by images h_i = delta(x_i) of
weighted degree w_i + d.  It descends to A exactly when, for every supplied
relation g_j, sum_i (dg_j/dx_i) h_i lies in I.  The images are taken in the
span of standard monomials (a complement of I in each degree), so distinct
kernel vectors are distinct derivations of A and no separate quotient by the
trivial derivations is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm

from .errors import InvalidInput
from .graded import WeightedPresentation
from .kernel import Echelon, MPoly


@dataclass(frozen=True)
class HomogeneousDerivation:
    degree: int
    images: tuple  # one MPoly per generator

    def image(self, i: int) -> MPoly:
        return self.images[i]

    def apply(self, poly: MPoly) -> MPoly:
        """delta(poly) computed on P via the chain rule."""
        acc = MPoly.zero(poly.field, poly.vars)
        for i, h in enumerate(self.images):
            if h.is_zero():
                continue
            dp = poly.diff(i)
            if not dp.is_zero():
                acc = acc + dp * h
        return acc

    def is_zero(self) -> bool:
        return all(h.is_zero() for h in self.images)

    def to_json(self, ring: WeightedPresentation) -> dict:
        return {name: str(h) for name, h in zip(ring.variables, self.images)}

    def pretty(self, ring: WeightedPresentation) -> str:
        parts = []
        for name, h in zip(ring.variables, self.images):
            if h.is_zero():
                continue
            hs = str(h)
            if len(h.terms) > 1:
                hs = f"({hs})"
            parts.append(f"d_{name}" if hs == "1" else "-d_" + name if hs == "-1" else f"{hs}*d_{name}")
        if not parts:
            return "0"
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out


@dataclass
class DerivationSpace:
    degree: int
    dimension: int
    basis: list
    advisory: bool = False
    _coords: Echelon | None = dc_field(default=None, repr=False)
    _layout: list | None = dc_field(default=None, repr=False)

    def contains(self, ring: WeightedPresentation, cand: HomogeneousDerivation) -> bool:
        """Is cand (modulo trivial derivations) in the span of the basis?"""
        if cand.degree != self.degree:
            return False
        vec = _coordinates(ring, cand, self._layout)
        return self._coords.contains(vec)

    def to_json(self, ring: WeightedPresentation) -> dict:
        out = {
            "degree": self.degree,
            "dimension": self.dimension,
            "basis": [b.to_json(ring) for b in self.basis],
        }
        if self.advisory:
            out["advisory"] = True
        return out


def _layout(ring: WeightedPresentation, d: int):
    """Unknowns: (generator, standard monomial index) pairs."""
    layout = []
    for i, w in enumerate(ring.weights):
        e = w + d
        if e < 0:
            continue
        piece = ring.piece(e)
        for k in piece.standard:
            layout.append((i, k))
    return layout


def _coordinates(ring, cand, layout):
    pos = {key: n for n, key in enumerate(layout)}
    vec = {}
    for i, h in enumerate(cand.images):
        e = ring.weights[i] + cand.degree
        if h.is_zero():
            continue
        if e < 0:
            raise InvalidInput(f"image of {ring.variables[i]} must vanish in negative degree")
        piece = ring.piece(e)
        nf = piece.normal_form(piece.vector(h))
        for k, c in nf.items():
            vec[pos[(i, k)]] = c
    return vec


def _check_degrees(ring: WeightedPresentation, cand: HomogeneousDerivation):
    if len(cand.images) != ring.nvars:
        raise InvalidInput("one image per generator is required")
    for i, h in enumerate(cand.images):
        if h.field != ring.field or h.vars != ring.variables:
            raise InvalidInput("derivation image over a different ring")
        if h.is_zero():
            continue
        degs = h.weighted_degrees(ring.weights)
        want = ring.weights[i] + cand.degree
        if degs != {want}:
            raise InvalidInput(
                f"image of {ring.variables[i]} has degree {sorted(degs)}, expected {want} for d={cand.degree}"
            )


def _partials(ring: WeightedPresentation):
    return [[g.diff(i) for i in range(ring.nvars)] for g in ring.relations]


def verify_derivation(ring: WeightedPresentation, cand: HomogeneousDerivation):
    """Return (ok, diagnostic); the diagnostic names the first failing relation."""
    _check_degrees(ring, cand)
    for j, (g, dg) in enumerate(zip(ring.relations, ring.relation_degrees)):
        e = dg + cand.degree
        if e < 0:
            continue
        image = cand.apply(g)
        if image.is_zero():
            continue
        piece = ring.piece(e)
        if not piece.contains(piece.vector(image)):
            return False, f"relation {j} ({g}): image {image} is not in I_{e}"
    return True, None


def _primitive(vec: dict, field):
    """Scale a rational vector to coprime integers with positive lead."""
    if field.p or not vec:
        return vec
    den = 1
    for c in vec.values():
        den = lcm(den, Fraction(c).denominator)
    ints = {k: Fraction(c) * den for k, c in vec.items()}
    g = 0
    for c in ints.values():
        g = gcd(g, c.numerator)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {k: Fraction(c.numerator // g) for k, c in ints.items()}


def solve_degree(ring: WeightedPresentation, d: int) -> DerivationSpace:
    """Basis of Der_k(A)_d."""
    field = ring.field
    layout = _layout(ring, d)
    partials = _partials(ring)
    rows: dict = {}
    for j, (g, dg) in enumerate(zip(ring.relations, ring.relation_degrees)):
        e = dg + d
        if e < 0:
            continue
        target = ring.piece(e)
        for col, (i, k) in enumerate(layout):
            dgi = partials[j][i]
            if dgi.is_zero():
                continue
            mono = ring.piece(ring.weights[i] + d).monomials[k]
            vec = target.vector(dgi.mul_monomial(mono))
            for r, c in target.normal_form(vec).items():
                rows.setdefault((j, r), {})[col] = c
    ech = Echelon(field)
    for key in sorted(rows):
        ech.add(rows[key])
    kernel = ech.kernel_sparse(len(layout))
    basis = []
    coords = Echelon(field)
    for v in kernel:
        v = _primitive(v, field)
        coords.add(v)
        images = [dict() for _ in range(ring.nvars)]
        for col, c in v.items():
            i, k = layout[col]
            images[i][ring.piece(ring.weights[i] + d).monomials[k]] = c
        basis.append(HomogeneousDerivation(d, tuple(MPoly._make(field, ring.variables, t) for t in images)))
    return DerivationSpace(d, len(basis), basis, _coords=coords, _layout=layout)


def euler_derivation(ring: WeightedPresentation) -> HomogeneousDerivation:
    """E = sum w_i x_i d/dx_i, degree 0."""
    f = ring.field
    images = []
    for i, w in enumerate(ring.weights):
        images.append(MPoly.var(f, ring.variables, i).scale(f.from_int(w)))
    return HomogeneousDerivation(0, tuple(images))


def derivation_dims(ring: WeightedPresentation, degrees) -> dict:
    return {d: solve_degree(ring, d).dimension for d in degrees}


def make_derivation(ring: WeightedPresentation, d: int, images: dict) -> HomogeneousDerivation:
    """Build a derivation from {variable name: expression string or MPoly}."""
    from .kernel import parse_poly

    out = []
    for name in ring.variables:
        h = images.get(name, "0")
        if isinstance(h, str):
            h = parse_poly(h, ring.field, ring.variables)
        out.append(h)
    unknown = set(images) - set(ring.variables)
    if unknown:
        raise InvalidInput(f"unknown generators {sorted(unknown)}")
    return HomogeneousDerivation(d, tuple(out))
