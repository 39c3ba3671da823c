from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eulerseq.cylinder import line_degrees, splitting_type
from eulerseq.divisor import QDivisorP1
from eulerseq.errors import HypothesisViolated
from eulerseq.extclass import cech_cocycle, ext_report, splits
from eulerseq.kernel import FieldSpec
from eulerseq.numerics import build_WL
from eulerseq.sampling import sample_divisors
from eulerseq.verify import conic_divisor


def D(spec, char=0):
    return QDivisorP1.build(FieldSpec(char), spec)


def test_conic_residue_vanishes_only_in_char_2():
    for char in (0, 3, 5, 7):
        cls = cech_cocycle(conic_divisor(char), -1)
        assert cls.residue == FieldSpec(char).coerce(-2) != 0
        assert not cls.log_trivial
    assert cech_cocycle(conic_divisor(2), -1).residue == 0
    assert cech_cocycle(conic_divisor(), 0).cocycle_str() == "-2/t"


def test_point_divisor_never_splits():
    for char in (0, 2, 3, 5):
        for d in (-1, 0, 1):
            assert cech_cocycle(D([("t", 1)], char), d).residue != 0
            assert not splits(D([("t", 1)], char), d)
    assert splitting_type(D([("t", 1)]), 0).as_tuple() == (1, 1)
    assert line_degrees(D([("t", 1)]), 0) == (0, 2)


def test_half_point_is_log_trivial():
    cls = cech_cocycle(D([("t", "1/2")]), 0)
    assert cls.residue == 0 and cls.log_trivial and cls.cocycle.is_zero()
    assert splits(D([("t", "1/2")]), 0)


def test_conic_split_predicate_matches_splitting():
    assert ext_report(conic_divisor(), -1, 2)["splits"] is True
    assert ext_report(conic_divisor(), -1, 0)["splits"] is False
    for char in (0, 2):
        assert ext_report(conic_divisor(), -1, char)["agrees_with_splitting"]


def test_nonzero_W_rejected():
    with pytest.raises(HypothesisViolated):
        cech_cocycle(D([("t", "1/2")], 2), 1)


def test_report_shape():
    r = ext_report(conic_divisor(), -1, 0)
    assert {k: r[k] for k in ("cocycle", "residue", "splits", "log_trivial")} == {
        "cocycle": "-2/t", "residue": "-2", "splits": False, "log_trivial": False}


@pytest.mark.parametrize("char", [0, 2, 3])
def test_split_predicate_agrees_with_splitting_type(char):
    checked = 0
    for D0 in sample_divisors(30, seed=3):
        Dc = D0.over(FieldSpec(char))
        for d in range(-2, 3):
            W, L = build_WL(Dc, d, char)
            if W.degree:
                continue
            a, b = line_degrees(Dc, d)
            want = splitting_type(Dc, d).as_tuple() == tuple(sorted((a, b), reverse=True))
            assert splits(Dc, d) == want
            if L.degree >= 1:
                assert want
            checked += 1
    assert checked > 50


coeff = st.tuples(st.integers(-5, 5), st.integers(1, 4)).filter(lambda pq: pq[0] != 0)


@settings(max_examples=60)
@given(st.lists(coeff, min_size=2, max_size=3), st.integers(-2, 2), st.integers(-2, 2),
       st.integers(-3, 3), st.sampled_from([0, 2, 3]))
def test_split_predicate_invariant_under_linear_equivalence(coeffs, k1, k2, d, char):
    # integer shifts of total degree zero keep the class of D, hence the ring
    places = ["t", "t - 1", "inf"][: len(coeffs)]
    Dx = D([(pl, Fraction(p, q)) for pl, (p, q) in zip(places, coeffs)], char)
    shifts = [k1, k2, 0][: len(coeffs)]
    shifts[-1] -= sum(shifts)
    if Dx.degree <= 0 or any(c + k == 0 for k, (_, c) in zip(shifts, Dx.terms)):
        return
    if build_WL(Dx, d, char)[0].degree:
        return
    Dy = Dx.shifted(shifts)
    assert splits(Dx, d) == splits(Dy, d)
    assert splitting_type(Dx, d) == splitting_type(Dy, d)


def test_split_predicate_not_invariant_under_arbitrary_shifts():
    # 2{0} is equivalent to {0} + {inf}, whose sequence splits in char 2
    assert not splits(D([("t", 1)], 2), 0)
    assert splits(D([("t", 2)], 2), 0)
