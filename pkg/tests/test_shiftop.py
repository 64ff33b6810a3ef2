from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import laurent_polys, polynomials, q_values, small_fractions
from oracle import apply_op, laurent_expr, rf_expr, same

from hawalg.arith import LaurentPoly, Polynomial, RationalFunction
from hawalg.errors import InvalidInputError
from hawalg.shiftop import ShiftOperator, commutator, op_apply, op_combine, op_compose, op_is_scalar, op_is_zero

Z = RationalFunction(Polynomial([0, 1]))
ZINV = RationalFunction(1, Polynomial([0, 1]))


def T(q, k=1):
    return ShiftOperator.shift(q, k)


@st.composite
def operators(draw, q=None):
    q = draw(q_values()) if q is None else q
    terms = {}
    for k in draw(st.lists(st.integers(-2, 2), max_size=3, unique=True)):
        num = draw(polynomials(3))
        den = Polynomial([1, draw(small_fractions)])
        terms[k] = RationalFunction(num, den)
    return ShiftOperator(q, terms)


@st.composite
def operator_pairs(draw, n=2):
    q = draw(q_values())
    return tuple(draw(operators(q)) for _ in range(n))


def test_apply_examples():
    q = Fraction(2)
    assert op_apply(T(q), LaurentPoly({1: 1})) == RationalFunction(Polynomial([0, 4]))
    f = LaurentPoly({-2: 3, 5: Fraction(1, 7)})
    assert op_apply(ShiftOperator.identity(q), f) == f.to_rational_function()
    A = ShiftOperator(q, {1: Z, -1: ZINV})
    assert op_apply(A, LaurentPoly({0: 1})) == LaurentPoly({1: 1, -1: 1}).to_rational_function()


def test_compose_examples():
    q = Fraction(2)
    zT = ShiftOperator(q, {1: Z})
    assert op_compose(zT, zT) == ShiftOperator(q, {2: RationalFunction(Polynomial([0, 0, 4]))})
    assert op_compose(zT, ShiftOperator.identity(q)) == zT
    assert op_compose(T(q, 1), T(q, -1)) == ShiftOperator.identity(q)
    with pytest.raises(InvalidInputError):
        op_compose(zT, T(Fraction(3)))


def test_combine_examples():
    q = Fraction(2)
    A, B = ShiftOperator(q, {1: Z}), ShiftOperator(q, {-1: Z, 0: ZINV})
    assert op_is_zero(op_combine([(1, [A]), (-1, [A])]))
    assert op_combine([(1, [A, B]), (-1, [B, A])]) == commutator(A, B)
    assert op_combine([(q, [A, B]), (-1 / q, [B, A])]) == (A @ B).scale(2) - (B @ A).scale(Fraction(1, 2))


def test_scalar_detection():
    q = Fraction(3)
    assert op_is_scalar(ShiftOperator.identity(q)) == 1
    assert op_is_scalar(ShiftOperator(q, {1: Z})) is None
    assert op_is_scalar(ShiftOperator.multiplication(q, Z)) is None
    assert op_is_scalar(ShiftOperator.zero(q)) == 0
    assert not op_is_zero(ShiftOperator.identity(q))


@given(operator_pairs(2), laurent_polys())
def test_composition_matches_successive_application(pair, f):
    # normal form soundness: (A o B) f computed from the normal form equals A(B f) by substitution
    A, B = pair
    lhs = rf_expr(op_apply(op_compose(A, B), f))
    rhs = apply_op(A, apply_op(B, laurent_expr(f)))
    assert same(lhs, rhs)


@given(operator_pairs(3))
def test_composition_is_associative(ops):
    A, B, C = ops
    assert (A @ B) @ C == A @ (B @ C)


@given(operator_pairs(3), small_fractions, small_fractions)
def test_commutator_bilinear_and_antisymmetric(ops, a, b):
    A, B, C = ops
    lhs = commutator(A.scale(a) + B.scale(b), C)
    assert lhs == commutator(A, C).scale(a) + commutator(B, C).scale(b)
    assert commutator(A, B) == -commutator(B, A)


@given(operators())
def test_q_commutator_with_self(A):
    q = A.q
    assert commutator(A, A, q) == (A @ A).scale(q - 1 / q)
    assert op_is_zero(commutator(A, A))


@given(operators(), laurent_polys())
def test_apply_matches_substitution(A, f):
    assert same(rf_expr(op_apply(A, f)), apply_op(A, laurent_expr(f)))
