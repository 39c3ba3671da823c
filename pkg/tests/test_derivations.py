import random

import pytest

from eulerseq.derivations import (
    HomogeneousDerivation,
    derivation_dims,
    euler_derivation,
    make_derivation,
    solve_degree,
    verify_derivation,
)
from eulerseq.errors import InvalidInput
from eulerseq.graded import WeightedPresentation, load_ring
from eulerseq.kernel import QQ, FieldSpec, MPoly
from eulerseq.verify import ETA_IMAGES, load_builtin

CONIC = load_ring(load_builtin("conic_ring"))
CONIC2 = CONIC.over(FieldSpec(2))
ICIS = load_ring(load_builtin("icis_ring"))
PLANE = load_ring(load_builtin("plane_ring"))


def test_conic_negative_degree_dichotomy():
    assert solve_degree(CONIC, -1).dimension == 0
    space = solve_degree(CONIC2, -1)
    assert space.dimension == 1
    assert space.basis[0].pretty(CONIC2) == "d_z"


def test_dimension_tables():
    assert derivation_dims(CONIC, range(-2, 1)) == {-2: 0, -1: 0, 0: 4}
    assert derivation_dims(CONIC2, range(-1, 1)) == {-1: 1, 0: 4}
    assert derivation_dims(PLANE, range(-1, 2)) == {-1: 2, 0: 4, 1: 6}


def test_eta_is_a_negative_derivation():
    eta = make_derivation(ICIS, -1, ETA_IMAGES)
    ok, diag = verify_derivation(ICIS, eta)
    assert ok and diag is None
    space = solve_degree(ICIS, -1)
    assert space.dimension >= 1 and space.contains(ICIS, eta)


def test_d_z_fails_over_rationals():
    ok, diag = verify_derivation(CONIC, make_derivation(CONIC, -1, {"z": "1"}))
    assert not ok and "relation 0" in diag


def test_zero_derivation_always_valid():
    for ring in (CONIC, ICIS, PLANE):
        for d in (-3, 0, 2):
            ok, _ = verify_derivation(ring, make_derivation(ring, d, {}))
            assert ok


def test_degree_mismatch_is_rejected():
    with pytest.raises(InvalidInput):
        verify_derivation(CONIC, make_derivation(CONIC, -1, {"x": "y"}))
    with pytest.raises(InvalidInput):
        make_derivation(CONIC, 0, {"w": "x"})


def test_euler_derivation():
    assert euler_derivation(CONIC).pretty(CONIC) == "x*d_x + z*d_z + y*d_y"
    assert euler_derivation(ICIS).pretty(ICIS) == (
        "8*x1*d_x1 + 8*x2*d_x2 + 5*x3*d_x3 + 2*x4*d_x4 + 2*x5*d_x5 + 2*x6*d_x6"
    )
    even = WeightedPresentation.build(FieldSpec(2), "xy", (2, 4), ["x^2 + y"])
    assert euler_derivation(even).is_zero()


def test_pretty_signs():
    d = make_derivation(CONIC, 0, {"x": "x", "y": "-y"})
    assert d.pretty(CONIC) == "x*d_x - y*d_y"


RINGS = [CONIC, CONIC2, CONIC.over(FieldSpec(3)), ICIS, PLANE,
         WeightedPresentation.build(QQ, "xyz", (2, 3, 6), ["x^3 + y^2 - z"]),
         WeightedPresentation.build(FieldSpec(3), "xyz", (1, 1, 1), ["x^3 + y^3 + z^3"])]


@pytest.mark.parametrize("ring", RINGS, ids=lambda r: repr(r)[:60])
def test_basis_elements_verify_and_euler_in_span(ring):
    for d in range(-2, 2):
        space = solve_degree(ring, d)
        for b in space.basis:
            assert verify_derivation(ring, b)[0]
    assert solve_degree(ring, 0).contains(ring, euler_derivation(ring))


def _random_element(ring, e, rng):
    piece = ring.piece(e)
    terms = {}
    for k in piece.standard:
        c = rng.randint(-2, 2)
        if c:
            terms[piece.monomials[k]] = ring.field.coerce(c)
    return MPoly(ring.field, ring.variables, terms)


@pytest.mark.parametrize("ring", RINGS[:4], ids=lambda r: repr(r)[:60])
def test_leibniz_rule_modulo_the_ideal(ring):
    rng = random.Random(3)
    for d in (-1, 0):
        for delta in solve_degree(ring, d).basis:
            for _ in range(5):
                e1, e2 = rng.randint(1, 3), rng.randint(1, 3)
                a, b = _random_element(ring, e1, rng), _random_element(ring, e2, rng)
                lhs = delta.apply(a * b) - a * delta.apply(b) - b * delta.apply(a)
                if lhs.is_zero():
                    continue
                piece = ring.piece(e1 + e2 + d)
                assert piece.contains(piece.vector(lhs))


def test_derivation_json():
    space = solve_degree(CONIC2, -1)
    assert space.to_json(CONIC2) == {"degree": -1, "dimension": 1, "basis": [{"x": "0", "z": "1", "y": "0"}]}
    assert isinstance(space.basis[0], HomogeneousDerivation)
