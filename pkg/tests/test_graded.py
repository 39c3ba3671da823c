import random

import pytest
from hypothesis import given, strategies as st

from eulerseq.errors import InvalidInput, NonHomogeneous
from eulerseq.graded import (
    WeightedPresentation,
    hilbert_ci_oracle,
    load_ring,
    monomial_basis,
    monomial_count,
    quotient_dim,
)
from eulerseq.kernel import QQ, FieldSpec, MPoly, parse_poly
from eulerseq.verify import load_builtin

ICIS = load_ring(load_builtin("icis_ring"))
VERONESE = load_ring(load_builtin("icis_veronese_ring"))
CONIC = load_ring(load_builtin("conic_ring"))


def test_monomial_basis_examples():
    plane3 = WeightedPresentation.build(QQ, "xyz", (1, 1, 1))
    assert len(monomial_basis(plane3, 1)) == 3
    assert monomial_basis(ICIS, 2) == [(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)]
    assert monomial_basis(ICIS, 5) == [(0, 0, 1, 0, 0, 0)]


def test_conic_pieces():
    assert CONIC.piece(0).dim_ideal == 0 and CONIC.piece(0).dim_quotient == 1
    assert CONIC.piece(1).dim_ideal == 0 and CONIC.piece(1).dim_quotient == 3
    assert CONIC.piece(2).dim_ideal == 1 and CONIC.piece(2).dim_quotient == 5
    assert quotient_dim(CONIC, -1) == 0


def test_hilbert_oracle_examples():
    assert hilbert_ci_oracle((1, 1, 1), (2,), 2) == 5
    assert hilbert_ci_oracle((8, 8, 5, 2, 2, 2), (10, 10), 2) == 3
    assert all(hilbert_ci_oracle((1, 1), (), d) == d + 1 for d in range(10))
    assert quotient_dim(ICIS, 2) == 3


def test_icis_matches_complete_intersection_series():
    assert [quotient_dim(ICIS, e) for e in range(31)] == [hilbert_ci_oracle(ICIS.weights, (10, 10), e) for e in range(31)]


def test_veronese_identity():
    assert [quotient_dim(ICIS, 2 * j) for j in range(16)] == [quotient_dim(VERONESE, j) for j in range(16)]


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 25))
def test_monomial_count_matches_enumeration(weights, e):
    ring = WeightedPresentation.build(QQ, [f"v{i}" for i in range(len(weights))], weights)
    mons = monomial_basis(ring, e)
    assert len(mons) == monomial_count(weights, e)
    assert all(sum(a * w for a, w in zip(m, weights)) == e for m in mons)
    assert mons == sorted(mons, reverse=True)


def test_ideal_pieces_are_monotone():
    rng = random.Random(7)
    for ring in (CONIC, CONIC.over(FieldSpec(2)), VERONESE):
        for _ in range(20):
            e = rng.randint(0, 6)
            f = rng.randint(0, 3)
            piece = ring.piece(e)
            if not piece.ideal.rows:
                continue
            row = piece.ideal.rows[rng.choice(piece.ideal.pivots())]
            elem = piece.poly(row, ring)
            mon = rng.choice(monomial_basis(ring, f)) if monomial_basis(ring, f) else None
            if mon is None:
                continue
            prod = elem.mul_monomial(mon)
            target = ring.piece(e + f)
            assert target.contains(target.vector(prod))


def test_nonhomogeneous_relation_rejected():
    with pytest.raises(NonHomogeneous):
        WeightedPresentation.build(QQ, "xy", (1, 2), ["x^2 + y^2"])


def test_invalid_documents():
    with pytest.raises(InvalidInput):
        load_ring({"variables": ["x"], "weights": [1]})
    with pytest.raises(InvalidInput):
        WeightedPresentation.build(QQ, "xy", (1, 0))
    with pytest.raises(InvalidInput):
        WeightedPresentation.build(QQ, "xx", (1, 1))


def test_reduction_to_prime_field():
    ring = CONIC.over(FieldSpec(2))
    assert str(ring.relations[0]) == "x*y + z^2"
    assert ring.weight_gcd == 1 and ICIS.weight_gcd == 1
    assert VERONESE.relation_degrees == (5,)


def test_ring_json_round_trip():
    again = load_ring(ICIS.to_json())
    assert again.relations == ICIS.relations and again.weights == ICIS.weights


def test_normal_form_is_supported_on_standard_monomials():
    piece = CONIC.piece(2)
    vec = piece.vector(parse_poly("z^2", QQ, CONIC.variables))
    nf = piece.normal_form(vec)
    assert set(nf) <= set(piece.standard)
    diff = piece.poly(nf, CONIC) - MPoly(QQ, CONIC.variables, {(0, 2, 0): 1})
    assert piece.contains(piece.vector(diff))
