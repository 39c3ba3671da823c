import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulerseq.divisor import (
    IntDivisor,
    Place,
    QDivisorP1,
    evaluate_relation,
    floor_divisor,
    load_divisor,
    present_section_ring,
    present_until_complete,
    rr_space,
    section_ring,
    validate_ample,
)
from eulerseq.errors import InvalidInput, NonAmple
from eulerseq.graded import quotient_dim
from eulerseq.kernel import QQ, FieldSpec, RatFunc
from eulerseq.sampling import sample_divisors

F3 = FieldSpec(3)


def D(spec, field=QQ):
    return QDivisorP1.build(field, spec)


def E(spec, field=QQ):
    return IntDivisor(field, tuple((Place.parse(p, field), c) for p, c in spec))


def test_place_validation():
    with pytest.raises(InvalidInput):
        Place.parse("t^2", QQ)
    with pytest.raises(InvalidInput):
        Place.parse("2*t", QQ)
    with pytest.raises(InvalidInput):
        D([("t", 1), ("t*(t - 1)", 1)])
    assert Place.parse("oo", QQ).is_infinity
    with pytest.raises(InvalidInput):
        D([("t", 0)])


def test_floor_divisor_examples():
    assert floor_divisor(D([("t", "1/2"), ("inf", "1/3")]), 2).terms == E([("t", 1), ("inf", 0)]).terms
    assert str(floor_divisor(D([("t", 1), ("inf", 1)]), -1)) == "-{t} - {inf}"
    assert str(floor_divisor(D([("t", "1/2")]), -1)) == "-{t}"


def _functions(space):
    return [str(b) for b in space.basis]


def test_rr_space_examples():
    assert _functions(rr_space(E([("t", 0)]))) == ["1"]
    assert rr_space(E([("inf", 2)])).dimension == 3
    assert {str(b) for b in rr_space(E([("inf", 2)])).basis} == {"1", "t", "t^2"}
    assert rr_space(E([("t", -1)])).dimension == 0


def _order_ok(f: RatFunc, E: IntDivisor) -> bool:
    """div(f) + E >= 0, checked place by place without the solver."""
    for pl, c in E.terms:
        if pl.is_infinity:
            if f.order_at_infinity() + c < 0:
                return False
            continue
        g = pl.poly
        num_ord = 0
        n = f.num
        while (n % g).is_zero():
            n = n // g
            num_ord += 1
        den_ord = 0
        dd = f.den
        while (dd % g).is_zero():
            dd = dd // g
            den_ord += 1
        if num_ord - den_ord + c < 0:
            return False
    poles_elsewhere = f.den
    for pl, _ in E.terms:
        if not pl.is_infinity:
            while (poles_elsewhere % pl.poly).is_zero():
                poles_elsewhere = poles_elsewhere // pl.poly
    infinite = [c for pl, c in E.terms if pl.is_infinity]
    return poles_elsewhere.degree == 0 and (infinite or f.order_at_infinity() >= 0)


POOL = ["t", "t - 1", "t + 1", "t^2 + 1", "inf"]


@pytest.mark.parametrize("field", [QQ, F3])
def test_rr_space_dimension_and_orders(field):
    rng = random.Random(11 + field.p)
    pool = [p for p in POOL if not (field.p == 3 and p == "t + 1")]
    for _ in range(150):
        places = rng.sample(pool, rng.randint(1, 4))
        E_ = E([(p, rng.randint(-3, 3)) for p in places], field)
        space = rr_space(E_)
        assert space.dimension == max(0, E_.degree + 1)
        for f in space.basis:
            assert _order_ok(f, E_)


def test_product_closure():
    rng = random.Random(5)
    for _ in range(30):
        a = E([("t", rng.randint(-2, 2)), ("inf", rng.randint(-1, 3))])
        b = E([("t", rng.randint(-2, 2)), ("inf", rng.randint(-1, 3))])
        s = a + b
        for f in rr_space(a).basis:
            for g in rr_space(b).basis:
                assert _order_ok(f * g, s)


def test_validate_ample():
    validate_ample(D([("t", 1), ("inf", 1)]))
    with pytest.raises(NonAmple) as info:
        validate_ample(D([("t", "1/2"), ("inf", -1)]))
    assert info.value.degree == Fraction(-1, 2)
    with pytest.raises(NonAmple):
        validate_ample(QDivisorP1(QQ, ()))


def test_section_dims():
    assert [s.dimension for s in section_ring(D([("t", 1), ("inf", 1)]), 3)] == [1, 3, 5, 7]
    assert [s.dimension for s in section_ring(D([("t", "1/2"), ("inf", "1/3")]), 6)] == [i // 2 + i // 3 + 1 for i in range(7)]
    assert [s.dimension for s in section_ring(D([("t", 1)]), 5)] == [1, 2, 3, 4, 5, 6]


def test_presentations():
    conic = present_section_ring(D([("t", 1), ("inf", 1)]), 8)
    assert conic.generator_degrees == [1, 1, 1] and conic.presentation.relation_degrees == (2,) and conic.complete
    point = present_section_ring(D([("t", 1)]), 8)
    assert point.generator_degrees == [1, 1] and not point.relations and point.complete
    half = present_section_ring(D([("t", "1/2")]), 8)
    assert half.generator_degrees == [1, 2] and not half.relations and half.complete
    ht = present_section_ring(D([("t", "1/2"), ("inf", "1/3")]), 12)
    assert ht.generator_degrees == [1, 2, 3] and ht.presentation.relation_degrees == (5,)


@pytest.mark.parametrize("char", [0, 2, 3])
def test_complete_presentations_reproduce_the_section_ring(char):
    for D0 in sample_divisors(12, seed=99):
        Dc = D0.over(FieldSpec(char))
        model = present_until_complete(Dc)
        for rel in model.relations:
            assert evaluate_relation(model, rel).is_zero()
        if model.complete:
            for i, piece in enumerate(model.pieces):
                assert quotient_dim(model.presentation, i) == piece.dimension


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 4)), min_size=3, max_size=3),
       st.integers(-6, 6), st.integers(-6, 6))
def test_floor_superadditive(coeffs, i, j):
    terms = [(p, Fraction(a, b)) for p, (a, b) in zip(["t", "t - 1", "inf"], coeffs) if a]
    if not terms:
        return
    Dx = D(terms)
    assert floor_divisor(Dx, i + j).geq(floor_divisor(Dx, i) + floor_divisor(Dx, j))


def test_divisor_json_round_trip():
    Dx = D([("t^2 + 1", "2/3"), ("inf", "-1/2")])
    assert load_divisor(Dx.to_json()) == Dx
    assert str(Dx) == "2/3*{t^2 + 1} - 1/2*{inf}"
    assert Dx.degree == Fraction(4, 3) - Fraction(1, 2)


def test_over_other_field_rejects_bad_places():
    with pytest.raises(InvalidInput):
        D([("t^2 + 1", 1)]).over(FieldSpec(2))
