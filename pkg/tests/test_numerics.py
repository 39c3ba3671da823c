from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from eulerseq.divisor import QDivisorP1
from eulerseq.errors import InvalidInput
from eulerseq.kernel import FieldSpec
from eulerseq.numerics import (
    ComponentClass,
    build_WL,
    classification_table,
    classify_component,
    s_i_value,
    s_value,
)

SWEEP = [(p, q, d) for p in range(-7, 8) for q in range(1, 9) if gcd(p, q) == 1 for d in range(-6, 7)]


def test_s_value_examples():
    assert s_value(1, 2, -1) == -1
    assert all(s_value(1, 1, d) == d for d in range(-5, 6))
    assert s_value(3, 5, 4) == 12 // 5 == 2


def test_non_coprime_rejected():
    with pytest.raises(InvalidInput):
        s_value(2, 4, 1)
    with pytest.raises(InvalidInput):
        s_i_value(3, 6, 1, 0)


def test_s_i_examples():
    for i in range(-20, 21):
        si, achiever = s_i_value(1, 2, -1, i)
        assert (si, achiever) == ((-1, True) if i % 2 == 0 else (0, False))
        assert s_i_value(1, 1, 3, i) == (3, True)


def test_classification_examples():
    for char in (0, 2, 3, 5):
        for d in range(-3, 4):
            assert classify_component(1, 1, d, char) is ComponentClass.FREE
    assert classify_component(1, 2, 1, 2) is ComponentClass.W_AND_L
    assert classify_component(1, 3, 1, 0) is ComponentClass.L_ONLY


def test_minimum_over_one_period():
    for p, q, d in SWEEP:
        values = [s_i_value(p, q, d, i) for i in range(q)]
        assert min(v for v, _ in values) == s_value(p, q, d)


def test_achiever_flag_matches_fractional_parts():
    def frac(x):
        return x - (x.numerator // x.denominator)

    for p, q, d in SWEEP:
        for i in range(-q, 2 * q):
            _, flag = s_i_value(p, q, d, i)
            assert flag == (frac(Fraction(p * d, q)) + frac(Fraction(p * i, q)) < 1)


def test_achievers_are_multiples_of_q_in_the_free_congruence():
    for p, q, d in SWEEP:
        if (p * d + 1) % q:
            continue
        achievers = {i for i in range(-3 * q, 3 * q) if s_i_value(p, q, d, i)[1]}
        assert achievers == {i for i in range(-3 * q, 3 * q) if i % q == 0}


def D(spec, char=0):
    return QDivisorP1.build(FieldSpec(char), spec)


def test_build_WL_examples():
    for char in (0, 2, 3):
        for d in range(-2, 3):
            W, L = build_WL(D([("t", 1), ("inf", 1)], char), d, char)
            assert str(W) == "0" and str(L) == "0"
    W, L = build_WL(D([("t", "1/2"), ("inf", "1/3")]), 1, 0)
    assert (str(W), str(L)) == ("0", "{inf}")
    W, L = build_WL(D([("t", "1/2")], 2), 1, 2)
    assert (str(W), str(L)) == ("{t}", "{t}")


coeff = st.tuples(st.integers(-5, 5), st.integers(1, 4)).filter(lambda pq: pq[0] != 0)


@given(st.lists(coeff, min_size=1, max_size=3), st.integers(-6, 6), st.sampled_from([0, 2, 3]))
def test_W_inside_L_and_free_means_absent(coeffs, d, char):
    places = ["t", "t - 1", "inf"][: len(coeffs)]
    Dx = D([(pl, Fraction(p, q)) for pl, (p, q) in zip(places, coeffs)], char)
    W, L = build_WL(Dx, d, char)
    assert L.geq(W)
    for (_, c), (_, lc) in zip(Dx.terms, L.terms):
        free = classify_component(c.numerator, c.denominator, d, char) is ComponentClass.FREE
        assert (lc == 0) == free


@given(st.lists(coeff, min_size=1, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.integers(-6, 6), st.sampled_from([0, 2, 3]))
def test_WL_invariant_under_integer_shifts(coeffs, shifts, d, char):
    places = ["t", "t - 1", "inf"][: len(coeffs)]
    Dx = D([(pl, Fraction(p, q)) for pl, (p, q) in zip(places, coeffs)], char)
    if any(c + k == 0 for k, (_, c) in zip(shifts, Dx.terms)):
        return
    Dy = Dx.shifted(shifts)
    assert [str(x) for x in build_WL(Dx, d, char)] == [str(x) for x in build_WL(Dy, d, char)]


def test_classification_table_shape():
    table = classification_table(D([("t", "1/2")]), 0, 0)
    assert table == {"components": [{"place": "t", "p": 1, "q": 2, "s": 0, "class": "LOnly"}], "W": "0", "L": "{t}"}
