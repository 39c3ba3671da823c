from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulerseq.errors import InvalidInput, ParseError
from eulerseq.kernel import (
    QQ,
    ExactMatrix,
    FieldSpec,
    LaurentMatrix,
    LaurentPoly,
    MPoly,
    Poly1,
    RatFunc,
    gcd,
    is_prime,
    laurent_det,
    parse_poly,
    parse_univariate,
    rank,
    rank_by_elimination,
    solve_kernel,
    squarefree_coprime_check,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)
FIELDS = [QQ, F2, F3, FieldSpec(5)]


# -- fields ---------------------------------------------------------------------


def test_prime_validation():
    assert is_prime(2) and is_prime(7) and not is_prime(9) and not is_prime(1)
    with pytest.raises(InvalidInput):
        FieldSpec(4)
    with pytest.raises(InvalidInput):
        FieldSpec(1)


def test_field_json_round_trip():
    for f in FIELDS:
        assert FieldSpec.from_json(f.to_json()) == f
    assert QQ.to_json() == {"kind": "Q"}
    assert F3.to_json() == {"kind": "Fp", "p": 3}


def test_prime_field_arithmetic():
    assert F3.inv(2) == 2
    assert F3.coerce(Fraction(1, 2)) == 2
    assert F2.from_int(2) == 0
    assert F3.fmt(2) == "-1"


def test_mixed_field_elements_rejected():
    with pytest.raises(InvalidInput):
        _ = F2(1) + F3(1)


@given(st.integers(-50, 50), st.integers(1, 50), st.sampled_from([2, 3, 5, 7]))
def test_reduction_is_a_ring_map(a, b, p):
    f = FieldSpec(p)
    if b % p == 0:
        return
    x = Fraction(a, b)
    assert f.coerce(x * x + 1) == f.add(f.mul(f.coerce(x), f.coerce(x)), 1)


# -- matrices -------------------------------------------------------------------


def test_identity_has_trivial_kernel():
    assert solve_kernel(ExactMatrix.from_rows(QQ, [[1, 0], [0, 1]])) == []


def test_zero_row_kernel_over_f2():
    assert len(solve_kernel(ExactMatrix.from_rows(F2, [[0, 0, 0]]))) == 3


def test_rank_one_kernel_direction():
    (v,) = solve_kernel(ExactMatrix.from_rows(QQ, [[1, 1], [2, 2]]))
    assert v[0] == -v[1] != 0


def test_mixed_field_matrix_rejected():
    with pytest.raises(InvalidInput):
        ExactMatrix.from_rows(QQ, [[F2(1), 0]])


small_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=5)
)


@given(small_matrices, st.sampled_from(FIELDS))
def test_kernel_plus_rank_is_column_count(rows, field):
    m = ExactMatrix.from_rows(field, rows)
    kernel = solve_kernel(m)
    assert len(kernel) + rank_by_elimination(field, rows) == m.ncols
    assert rank(m) == rank_by_elimination(field, rows)
    for v in kernel:
        assert all(x == 0 for x in m.apply(v))


# -- univariate polynomials -------------------------------------------------------


def test_squarefree_coprime_examples():
    t = Poly1.x(QQ)
    assert squarefree_coprime_check([t, t + 1])
    assert not squarefree_coprime_check([t * t, t + 1])
    assert not squarefree_coprime_check([t**2 + 1, t**4 - 1])


def test_gcd_is_monic():
    t = Poly1.x(QQ)
    g = gcd((t - 1) * (t + 2).scale(3), (t - 1) * t)
    assert g == t - 1


@given(st.lists(st.integers(-4, 4), max_size=5), st.lists(st.integers(-4, 4), min_size=1, max_size=4))
def test_division_identity(a, b):
    pa, pb = Poly1(QQ, a), Poly1(QQ, b)
    if pb.is_zero():
        return
    q, r = pa.divmod(pb)
    assert q * pb + r == pa
    assert r.degree < pb.degree


def test_ratfunc_normalization_and_inverse_substitution():
    t = Poly1.x(QQ)
    f = RatFunc(t * t - 1, (t - 1).scale(2))
    assert f == RatFunc((t + 1).scale(Fraction(1, 2)))
    g = RatFunc(t + 1, t)  # (1/s + 1)/(1/s) = 1 + s
    assert str(g.substitute_inverse("s")) == "s + 1"
    assert RatFunc(Poly1.constant(QQ, 3), t * t).to_laurent() == LaurentPoly(QQ, {-2: Fraction(3)}, "t")
    assert RatFunc(Poly1.constant(QQ, 1), t + 1).to_laurent() is None


# -- Laurent determinants ----------------------------------------------------------


def lp(terms):
    return LaurentPoly(QQ, {k: Fraction(c) for k, c in terms.items()}, "t")


def test_laurent_det_examples():
    assert laurent_det(LaurentMatrix([[lp({1: 1}), lp({})], [lp({}), lp({-2: 1})]])) == lp({-1: 1})
    assert laurent_det(LaurentMatrix([[lp({}), lp({0: 1})], [lp({0: -1}), lp({})]])) == lp({0: 1})


laurent = st.dictionaries(st.integers(-2, 2), st.integers(-2, 2), max_size=3).map(lp)


@given(st.lists(laurent, min_size=8, max_size=8))
def test_laurent_det_multiplicative(e):
    a = LaurentMatrix([e[0:2], e[2:4]], QQ, "t")
    b = LaurentMatrix([e[4:6], e[6:8]], QQ, "t")
    assert laurent_det(a @ b) == laurent_det(a) * laurent_det(b)


# -- parsing ---------------------------------------------------------------------


VARS = ("x", "y", "z")


def test_parse_examples():
    p = parse_poly("z^2 - x*y + 1/2*x", QQ, VARS)
    assert str(p) == "-x*y + z^2 + 1/2*x"
    assert parse_poly("(x + y)^2", F2, VARS) == parse_poly("x^2 + y^2", F2, VARS)
    assert str(parse_univariate("t^2 - 1", QQ)) == "t^2 - 1"


@pytest.mark.parametrize("text", ["x +", "x^-1", "w", "x / y", "x ** 2", "(x"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(text, QQ, VARS)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_poly("x + w", QQ, VARS)
    assert info.value.position == 4


mpolys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=5,
)


@given(mpolys, st.sampled_from([QQ, F3]))
def test_print_parse_round_trip(terms, field):
    p = MPoly(field, VARS, {e: field.coerce(c) for e, c in terms.items() if field.p == 0 or c.denominator % field.p})
    assert parse_poly(str(p), field, VARS) == p
