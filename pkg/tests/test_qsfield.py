"""Tests for exact Q(q,s) arithmetic.

Independent oracle: evaluation at a rational point is a field homomorphism,
so a value assembled through QSRat operations must evaluate (via Fraction)
to the same number as the direct Fraction computation.  The oracle never
touches the gcd/canonicalization code under test.
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from vvmacd.errors import DivisionByZero
from vvmacd.qsfield import (
    QSRat,
    arith,
    from_int,
    iota,
    monomial,
    one,
    parse_qsrat,
    pochhammer,
    poincare,
    zero,
)

Q = monomial(1, 0)
S = monomial(0, 1)

# a couple of generic evaluation points; nothing in the tests relies on
# any particular value beyond "not a root of the tiny polynomials we build"
POINTS = [
    (Fraction(7, 3), Fraction(5, 2)),
    (Fraction(-4, 5), Fraction(9, 7)),
    (Fraction(11, 2), Fraction(-3, 8)),
]


@st.composite
def qspoly_values(draw, max_terms=4, max_deg=3):
    """A random polynomial value built ONLY from public constructors."""
    n = draw(st.integers(min_value=0, max_value=max_terms))
    acc = zero()
    for _ in range(n):
        c = draw(st.integers(min_value=-6, max_value=6))
        a = draw(st.integers(min_value=0, max_value=max_deg))
        b = draw(st.integers(min_value=0, max_value=max_deg))
        acc = acc + from_int(c) * monomial(a, b)
    return acc


@st.composite
def qsrat_values(draw):
    num = draw(qspoly_values())
    den = draw(qspoly_values())
    assume(not den.is_zero())
    return num / den


# ---------------------------------------------------------------------------
# golden values
# ---------------------------------------------------------------------------


def test_gcd_cancellation_goldens():
    assert (one() - monomial(0, 2)) / (one() - S) == one() + S
    lhs = ((one() - Q * S) * (one() - Q)) / (one() - Q * S)
    assert lhs == one() - Q


def test_monomial_goldens():
    assert monomial(0, 0) == one()
    assert str(monomial(1, -1)) == "(1*q)/(1*s)"
    assert monomial(6, 1) == Q**6 * S


def test_pochhammer_goldens():
    a = monomial(1, -1)
    assert pochhammer(a, 0) == one()
    assert pochhammer(a, 2) == (one() - a) * (one() - Q * a)
    assert pochhammer(Q, 1) == one() - Q


def test_poincare_goldens():
    assert poincare(0) == one()
    assert poincare(1) == one()
    assert poincare(2) == one() + S
    assert poincare(3) == (one() + S) * (one() + S + S * S)


def test_iota_goldens():
    assert iota(one()) == one()
    assert iota(Q * S * S) == one() / (Q * S * S)
    f = (one() - Q * S) / (one() - S)
    assert iota(iota(f)) == f


def test_sign_canonicalization():
    # -1/(1-s) and 1/(s-1) are the same canonical value
    a = from_int(-1) / (one() - S)
    b = one() / (S - one())
    assert a == b
    assert hash(a) == hash(b)
    assert (one() - S) / (S - one()) == from_int(-1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        one() / zero()
    with pytest.raises(DivisionByZero):
        arith(one(), zero(), "div")
    with pytest.raises(DivisionByZero):
        zero().inverse()


def test_parse_rejects_negative_exponents():
    with pytest.raises(ValueError):
        parse_qsrat("1*s^-1")
    with pytest.raises(ValueError):
        parse_qsrat("q")  # bare variable: coefficient is mandatory


def test_print_parse_goldens():
    assert str(one() + S) == "1*s+1"
    assert str(zero()) == "0"
    assert str(from_int(-3) * Q) == "-3*q"
    # canonical sign: denominator's lex-leading coefficient is positive
    f = (one() - Q) / (one() - S)
    assert str(f) == "(1*q-1)/(1*s-1)"
    assert parse_qsrat(str(f)) == f


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


@given(qsrat_values(), qsrat_values(), qsrat_values())
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert (a - a).is_zero()
    assert a * (b * c) == (a * b) * c


@given(qsrat_values())
@settings(max_examples=60, deadline=None)
def test_multiplicative_inverse(a):
    assume(not a.is_zero())
    assert a * a.inverse() == one()
    assert a / a == one()


@given(qsrat_values(), qspoly_values())
@settings(max_examples=60, deadline=None)
def test_common_factor_cancellation(a, c):
    assume(not c.is_zero())
    assert (a * c) / c == a


@given(qsrat_values())
@settings(max_examples=80, deadline=None)
def test_print_parse_roundtrip(a):
    assert parse_qsrat(str(a)) == a


@given(qsrat_values())
@settings(max_examples=40, deadline=None)
def test_iota_involution(a):
    assert iota(iota(a)) == a


@given(qsrat_values(), st.integers(min_value=0, max_value=3))
@settings(max_examples=30, deadline=None)
def test_pochhammer_recurrence(a, n):
    assert pochhammer(a, n + 1) == pochhammer(a, n) * (one() - Q**n * a)


@st.composite
def expr_trees(draw, depth=0):
    """Random arithmetic expression over Q(q,s), evaluated two ways."""
    if depth >= 3 or draw(st.booleans()):
        c = draw(st.integers(min_value=-5, max_value=5))
        a = draw(st.integers(min_value=0, max_value=2))
        b = draw(st.integers(min_value=0, max_value=2))
        val = from_int(c) * monomial(a, b)
        return val, [(Fraction(c) * qv**a * sv**b) for qv, sv in POINTS]
    op = draw(st.sampled_from(["add", "sub", "mul"]))
    lv, lnums = draw(expr_trees(depth=depth + 1))
    rv, rnums = draw(expr_trees(depth=depth + 1))
    val = arith(lv, rv, op)
    fop = {"add": lambda x, y: x + y,
           "sub": lambda x, y: x - y,
           "mul": lambda x, y: x * y}[op]
    return val, [fop(x, y) for x, y in zip(lnums, rnums)]


@given(expr_trees(), expr_trees())
@settings(max_examples=80, deadline=None)
def test_evaluation_homomorphism_oracle(left, right):
    lv, lnums = left
    rv, rnums = right
    assume(not rv.is_zero())
    ratio = lv / rv
    for (qv, sv), ln, rn in zip(POINTS, lnums, rnums):
        assume(rn != 0)
        assert ratio.evaluate(qv, sv) == ln / rn


@given(qsrat_values(), qsrat_values())
@settings(max_examples=40, deadline=None)
def test_canonical_equality_is_representation_equality(a, b):
    # built differently but equal as functions => equal dicts
    if a == b:
        assert a.num == b.num and a.den == b.den
        assert hash(a) == hash(b)


if __name__ == "__main__":
    pytest.main([__file__, "-q"])
