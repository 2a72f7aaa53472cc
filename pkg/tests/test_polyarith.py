from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artinforge.errors import AmbientMismatchError
from artinforge.polyarith import (
    DEGLEX,
    GREVLEX,
    LEX,
    Polynomial,
    TermOrder,
    cmp_monomials,
    format_polynomial,
    mono_lcm,
    monomials_of_degree,
    parse_polynomial,
    reduce,
    s_polynomial,
    xring,
)

R3 = xring(3)


def p(text, ring=R3):
    return ring.poly(text)


# ---------------------------------------------------------------------------
# strategies

monomials3 = st.tuples(*(st.integers(0, 4),) * 3)
coeffs = st.one_of(
    st.integers(-9, 9).filter(bool),
    st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool),
)


@st.composite
def polys3(draw, max_terms=4):
    terms = draw(
        st.dictionaries(monomials3, coeffs, min_size=0, max_size=max_terms)
    )
    return Polynomial(3, terms)


# ---------------------------------------------------------------------------
# term orders

def grevlex_by_definition(a, b):
    """Independent oracle: total degree first, then the last nonzero entry
    of the exponent difference must be negative for the larger monomial."""
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    diff = [x - y for x, y in zip(a, b)]
    last = next((d for d in reversed(diff) if d), 0)
    if last == 0:
        return 0
    return 1 if last < 0 else -1


def test_grevlex_example_equal_degree():
    # x1*x2 vs x3^2: difference (1, 1, -2) has last nonzero entry -2 < 0
    assert cmp_monomials((1, 1, 0), (0, 0, 2), GREVLEX) == 1
    assert grevlex_by_definition((1, 1, 0), (0, 0, 2)) == 1


def test_one_is_minimal():
    assert cmp_monomials((0, 0, 0), (1, 0, 0), GREVLEX) == -1
    for order in (GREVLEX, LEX, DEGLEX):
        for m in [(1, 0, 0), (0, 0, 1), (2, 1, 3)]:
            assert cmp_monomials((0, 0, 0), m, order) == -1


def test_lex_first_coordinate():
    assert cmp_monomials((2, 0, 0), (1, 1, 0), LEX) == 1


@given(monomials3, monomials3)
def test_grevlex_matches_definition(a, b):
    assert cmp_monomials(a, b, GREVLEX) == grevlex_by_definition(a, b)


@given(monomials3, monomials3, monomials3)
def test_orders_are_multiplicative(a, b, c):
    from artinforge.polyarith import mono_mul

    for order in (GREVLEX, LEX, DEGLEX, TermOrder.elimination((0,))):
        s = cmp_monomials(a, b, order)
        assert cmp_monomials(mono_mul(a, c), mono_mul(b, c), order) == s


def test_order_totality():
    monos = monomials_of_degree(3, 2)
    for order in (GREVLEX, LEX, DEGLEX):
        keys = [order.key(m) for m in monos]
        assert len(set(keys)) == len(keys)


def test_elimination_order_block_dominates():
    order = TermOrder.elimination((2,))
    # any monomial containing x3 beats any monomial without it
    assert cmp_monomials((0, 0, 1), (5, 5, 0), order) == 1


def test_elimination_block_size_form():
    assert TermOrder.elimination(2) == TermOrder.elimination((0, 1))


def test_cmp_dimension_error():
    with pytest.raises(AmbientMismatchError):
        cmp_monomials((1, 0), (1, 0, 0), GREVLEX)


# ---------------------------------------------------------------------------
# arithmetic

def test_add_telescopes():
    assert p("x1 - x2") + p("x2 - x3") == p("x1 - x3")


def test_add_identity_and_inverse():
    q = p("x1*x2 - 2*x3")
    assert q + Polynomial.zero(3) == q
    assert p("x1") + p("-x1") == Polynomial.zero(3)


def test_mul_difference_of_squares():
    assert p("x1 - x2") * p("x1 + x2") == p("x1^2 - x2^2")


def test_mul_identity_and_monomial():
    q = p("x2*x3 - x1")
    assert q * R3.one() == q
    assert q * p("x1") == p("x1*x2*x3 - x1^2")


def test_dimension_errors():
    with pytest.raises(AmbientMismatchError):
        p("x1") + xring(2).poly("x1")
    with pytest.raises(AmbientMismatchError):
        p("x1") * xring(2).poly("x1")


@given(polys3(), polys3(), polys3())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# ---------------------------------------------------------------------------
# leading terms

def test_leading_terms_grevlex():
    assert p("x2*x3 - x1").leading_term(GREVLEX) == ((0, 1, 1), 1)
    assert p("x3^3 - x3").leading_term(GREVLEX) == ((0, 0, 3), 1)
    assert Polynomial.constant(3, 5).leading_term(GREVLEX) == ((0, 0, 0), 5)


def test_leading_term_of_zero_is_undefined():
    with pytest.raises(ValueError):
        Polynomial.zero(3).leading_term(GREVLEX)


# ---------------------------------------------------------------------------
# division

J3_GENS = [p(t) for t in ("x1^2", "x2^2", "x1*x2", "x1*x3", "x2*x3", "x3^3")]


def test_reduce_single_step():
    nf, quots = reduce(p("x1^2"), [p("x1^2 - x3^2")])
    assert nf == p("x3^2")
    assert quots[0] == R3.one()


def test_reduce_already_standard():
    nf, _ = reduce(p("x3^2"), J3_GENS)
    assert nf == p("x3^2")


def test_reduce_zero():
    nf, quots = reduce(Polynomial.zero(3), J3_GENS)
    assert not nf
    assert all(not q for q in quots)


@given(polys3())
def test_reduce_contract_and_idempotence(f):
    reducers = [p("x1^2 - x3^2"), p("x2^2 - x3"), p("x1*x2*x3 - 1")]
    nf, quots = reduce(f, reducers)
    # division identity
    total = nf
    for q, g in zip(quots, reducers):
        total = total + q * g
    assert total == f
    # no term of the remainder is reducible
    lms = [g.leading_monomial(GREVLEX) for g in reducers]
    for m in nf.terms:
        assert not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)
    # reducing again changes nothing
    assert reduce(nf, reducers)[0] == nf


def test_s_polynomial_cancellation():
    s = s_polynomial(p("x1*x2 - x3"), p("x1*x3 - x2"))
    assert s == p("x2^2 - x3^2")


def test_s_polynomial_self_is_zero():
    f = p("x1*x2 - x3")
    assert not s_polynomial(f, f)


def test_s_polynomial_coprime_reduces_to_zero():
    f, g = p("x1^2"), p("x2^2")
    s = s_polynomial(f, g)
    assert not reduce(s, [f, g])[0]


def test_mono_lcm():
    assert mono_lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)


# ---------------------------------------------------------------------------
# the text format

def test_parse_examples():
    q = parse_polynomial("x2*x3 - x1", R3)
    assert q.terms == {(0, 1, 1): 1, (1, 0, 0): -1}
    q = parse_polynomial("-2*x1^2*x3 + 1/3*x2", R3)
    assert q.terms == {(2, 0, 1): -2, (0, 1, 0): Fraction(1, 3)}


def test_parse_whitespace_insignificant():
    assert parse_polynomial(" x2 * x3-x1 ", R3) == p("x2*x3 - x1")


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_polynomial("x1 + q7", R3)
    with pytest.raises(ValueError):
        parse_polynomial("", R3)


def test_format_zero_and_descending_order():
    assert format_polynomial(Polynomial.zero(3), R3) == "0"
    assert format_polynomial(p("x1 - x2*x3"), R3) == "-x2*x3 + x1"


def test_dual_and_extended_variables():
    from artinforge.polyarith import yring

    y = yring(2)
    assert y.poly("y1^2 + y2^2").terms == {(2, 0): 1, (0, 2): 1}
    rz = xring(2, "z", "t")
    assert rz.poly("x1*z - t").terms == {(1, 0, 1, 0): 1, (0, 0, 0, 1): -1}


@given(polys3())
def test_roundtrip(f):
    assert parse_polynomial(format_polynomial(f, R3), R3) == f


def test_ideal_homogeneous_flag_is_checked():
    from artinforge.polyarith import Ideal

    Ideal(R3, (p("x1^2 - x2*x3"),), homogeneous=True)
    with pytest.raises(ValueError):
        Ideal(R3, (p("x1^2 - x3"),), homogeneous=True)
    assert Ideal(R3, (Polynomial.zero(3), p("x1"))).gens == (p("x1"),)


def test_monomials_of_degree_count():
    from math import comb

    for nv in (2, 3, 4):
        for d in range(5):
            assert len(monomials_of_degree(nv, d)) == comb(nv + d - 1, d)
