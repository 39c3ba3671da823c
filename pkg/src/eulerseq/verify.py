"""Built-in reference checks on the conic, ICIS and small-divisor examples."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable

from .cylinder import (
    LocalDerivationPair,
    chart_basis,
    check_local_conditions,
    euler_report,
    h0_twisted,
    same_module,
    splitting_type,
)
from .derivations import make_derivation, solve_degree, verify_derivation, euler_derivation
from .divisor import IntDivisor, Place, QDivisorP1, load_divisor, present_section_ring, rr_space, validate_ample
from .extclass import splits
from .graded import WeightedPresentation, load_ring
from .kernel import FieldSpec, Poly1, RatFunc
from .numerics import s_i_value, s_value
from .errors import EulerSeqError

ETA_IMAGES = {"x1": "2*x3*(x5 - x6)", "x2": "-2*x3*(x4 - x5)", "x3": "x4*x6 - x5^2"}


def load_builtin(name: str) -> dict:
    text = resources.files("eulerseq").joinpath("data", f"{name}.json").read_text()
    return json.loads(text)


def builtin_names():
    return sorted(p.name[:-5] for p in resources.files("eulerseq").joinpath("data").iterdir() if p.name.endswith(".json"))


def conic_ring(char: int = 0) -> WeightedPresentation:
    return load_ring(load_builtin("conic_ring")).over(FieldSpec(char))


def icis_ring() -> WeightedPresentation:
    return load_ring(load_builtin("icis_ring"))


def conic_divisor(char: int = 0) -> QDivisorP1:
    return load_divisor(load_builtin("conic_divisor"), FieldSpec(char))


def eta(ring: WeightedPresentation):
    return make_derivation(ring, -1, ETA_IMAGES)


@dataclass
class Verdict:
    name: str
    location: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"[{mark}] {self.name} ({self.location}): {self.detail}"

    def to_json(self) -> dict:
        return {"name": self.name, "location": self.location, "ok": self.ok, "detail": self.detail}


def _pairs(var: str, spec, field):
    out = []
    for sig, alp in spec:
        out.append(LocalDerivationPair(RatFunc(Poly1(field, sig, var)), RatFunc(Poly1(field, alp, var))))
    return out


# -- items ------------------------------------------------------------------


def item_conic_degree_one():
    piece = conic_ring().piece(1)
    ok = piece.dim_ideal == 0 and piece.dim_quotient == 3
    return ok, f"dim I_1 = {piece.dim_ideal}, dim A_1 = {piece.dim_quotient}"


def item_conic_no_negative_derivation():
    dim = solve_degree(conic_ring(0), -1).dimension
    return dim == 0, f"dim Der_-1 over QQ = {dim}"


def item_conic_char2_derivation():
    ring = conic_ring(2)
    space = solve_degree(ring, -1)
    dz = make_derivation(ring, -1, {"z": "1"})
    ok = space.dimension == 1 and space.contains(ring, dz)
    basis = ", ".join(b.pretty(ring) for b in space.basis)
    return ok, f"dim Der_-1 over GF(2) = {space.dimension}, basis {{{basis}}}"


def item_icis_eta():
    ring = icis_ring()
    ok_eta, diag = verify_derivation(ring, eta(ring))
    space = solve_degree(ring, -1)
    inside = space.contains(ring, eta(ring))
    ok = ok_eta and space.dimension >= 1 and inside
    return ok, f"eta accepted = {ok_eta}, dim Der_-1 = {space.dimension}, eta in span = {inside}" + (f" ({diag})" if diag else "")


def item_icis_euler():
    ring = icis_ring()
    e = euler_derivation(ring)
    ok, _ = verify_derivation(ring, e)
    return ok and solve_degree(ring, 0).contains(ring, e), e.pretty(ring)


def item_conic_rr_space():
    f = FieldSpec(0)
    E = IntDivisor(f, ((Place.parse("t", f), 1), (Place.infinity(), 1)))
    space = rr_space(E)
    t = RatFunc(Poly1.x(f))
    want = [RatFunc.const(f, 1), t, t.inverse()]
    basis = space.basis
    ok = space.dimension == 3 and all(_in_span(w, basis) for w in want)
    return ok, "L({0}+{inf}) = span(" + ", ".join(str(b) for b in basis) + ")"


def _in_span(target: RatFunc, basis) -> bool:
    from .kernel import Echelon

    f = target.field
    den = target.den
    for b in basis:
        den = den * b.den
    ech = Echelon(f)
    vecs = []
    for b in basis:
        num = (b * RatFunc(den)).num
        vecs.append({k: c for k, c in enumerate(num.coeffs) if c})
        ech.add(vecs[-1])
    tnum = (target * RatFunc(den)).num
    return ech.contains({k: c for k, c in enumerate(tnum.coeffs) if c})


def item_conic_ample():
    D = conic_divisor()
    validate_ample(D)
    return True, f"deg D = {D.degree}"


def item_conic_section_dims():
    model = present_section_ring(conic_divisor(), 8)
    dims = [p.dimension for p in model.pieces[:4]]
    return dims == [1, 3, 5, 7], f"dims A_0..A_3 = {dims}"


def item_conic_presentation():
    model = present_section_ring(conic_divisor(), 8)
    rels = model.relations
    ok = (model.generator_degrees == [1, 1, 1] and len(rels) == 1
          and model.presentation.relation_degrees == (2,) and model.complete)
    return ok, f"weights {model.generator_degrees}, relations {[str(g) for g in rels]}, complete = {model.complete}"


def item_conic_chart_bases():
    D = conic_divisor()
    f = D.field
    one = _pairs("t", [([0, 1], [1]), ([0, 0, 1], [])], f)
    two = _pairs("s", [([0, 1], [1]), ([0, 0, 1], [])], f)
    b1 = chart_basis(D, -1, 1).basis
    b2 = chart_basis(D, -1, 2).basis
    ok = same_module(b1, one) and same_module(b2, two)
    return ok, "U1 basis " + ", ".join(map(str, b1)) + "; U2 basis " + ", ".join(map(str, b2))


def item_conic_local_conditions():
    D = conic_divisor()
    pair = _pairs("t", [([0, 1], [1])], D.field)[0]
    ok = check_local_conditions(pair, D, -1, range(-6, 7))
    return ok, "(t, 1) satisfies the pole conditions for i in [-6, 6]"


def item_conic_gluing():
    got = {c: splitting_type(conic_divisor(c), -1).as_tuple() for c in (0, 2)}
    return got == {0: (-1, -1), 2: (0, -2)}, f"degree -1 splitting by characteristic: {got}"


def item_conic_sections():
    got = {c: h0_twisted(conic_divisor(c), -1, 0) for c in (0, 2)}
    return got == {0: 0, 2: 1}, f"h0 of the degree -1 sheaf: {got}"


def item_conic_degree_zero():
    got = {c: splitting_type(conic_divisor(c), 0).as_tuple() for c in (0, 2, 3, 5)}
    want = {0: (1, 1), 2: (2, 0), 3: (1, 1), 5: (1, 1)}
    return got == want, f"degree 0 splitting by characteristic: {got}"


def item_conic_line_degrees():
    details = []
    ok = True
    for d, (a, b) in ((-1, (-2, 0)), (0, (0, 2))):
        for c in (0, 2):
            r = euler_report(conic_divisor(c), d)
            ok &= (r["a"], r["b"]) == (a, b) and sum(r["splitting"]) == a + b and r["consistent"]
            details.append(f"d={d} char {c}: a={r['a']} b={r['b']} splitting={tuple(r['splitting'])}")
    return ok, "; ".join(details)


def item_conic_splits():
    got = {c: splits(conic_divisor(c), -1) for c in (0, 2)}
    return got == {0: False, 2: True}, f"sequence splits at d=-1: {got}"


def item_conic_euler_command():
    d0 = {c: tuple(euler_report(conic_divisor(c), 0)["splitting"]) for c in (0, 2)}
    dm = {c: euler_report(conic_divisor(c), -1) for c in (0, 2)}
    der = {c: r["der_dim"] for c, r in dm.items()}
    ok = d0 == {0: (1, 1), 2: (2, 0)} and der == {0: 0, 2: 1} and all(r["consistent"] for r in dm.values())
    return ok, f"d=0 splittings {d0}; d=-1 derivation dims {der}"


def item_char2_anomaly():
    chars = (0, 2, 3, 5)
    sig = {c: (solve_degree(conic_ring(c), -1).dimension, splitting_type(conic_divisor(c), 0).as_tuple()) for c in chars}
    generic = sig[0]
    flagged = [c for c in chars if sig[c] != generic]
    return flagged == [2], f"characteristics deviating from char 0: {flagged}"


def item_floor_sweep():
    cases = 0
    for p in range(-7, 8):
        for q in range(1, 9):
            if Fraction(p, q).denominator != q:
                continue
            for d in range(-6, 7):
                s = s_value(p, q, d)
                values = [s_i_value(p, q, d, i) for i in range(q)]
                if min(v for v, _ in values) != s:
                    return False, f"minimum mismatch at p={p} q={q} d={d}"
                if (p * d + 1) % q == 0:
                    achievers = [i for i in range(-2 * q, 2 * q + 1) if s_i_value(p, q, d, i)[1]]
                    if achievers != [i for i in range(-2 * q, 2 * q + 1) if i % q == 0]:
                        return False, f"achievers not a multiple of q at p={p} q={q} d={d}"
                cases += 1
    return True, f"{cases} (p, q, d) cases"


ITEMS: list[tuple[str, str, Callable]] = [
    ("conic degree-1 piece", "conic example", item_conic_degree_one),
    ("no degree -1 derivation over QQ", "conic example", item_conic_no_negative_derivation),
    ("d/dz in characteristic 2", "conic example", item_conic_char2_derivation),
    ("negative derivation eta", "ICIS example", item_icis_eta),
    ("Euler derivation", "ICIS example", item_icis_euler),
    ("L({0}+{inf})", "conic divisor", item_conic_rr_space),
    ("conic divisor is ample", "conic divisor", item_conic_ample),
    ("section ring dimensions", "conic divisor", item_conic_section_dims),
    ("section ring presentation", "conic divisor", item_conic_presentation),
    ("chart bases", "conic gluing", item_conic_chart_bases),
    ("pole conditions", "conic gluing", item_conic_local_conditions),
    ("degree -1 gluing", "conic gluing", item_conic_gluing),
    ("degree -1 global sections", "conic gluing", item_conic_sections),
    ("degree 0 splitting", "conic splitting", item_conic_degree_zero),
    ("Euler sequence degrees", "conic splitting", item_conic_line_degrees),
    ("extension class", "conic splitting", item_conic_splits),
    ("euler command", "conic splitting", item_conic_euler_command),
    ("characteristic anomaly", "conic dichotomy", item_char2_anomaly),
    ("floor minimum sweep", "floor arithmetic", item_floor_sweep),
]


def run_suite() -> list[Verdict]:
    out = []
    for name, location, fn in ITEMS:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except EulerSeqError as exc:
            ok, detail = False, f"error: {exc}"
        out.append(Verdict(name, location, bool(ok), detail, time.perf_counter() - t0))
    return out
