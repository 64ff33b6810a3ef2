from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import laurent_polys, nonzero_fractions, nonzero_polynomials, polynomials, xpolynomials
from oracle import R, poly_expr, rf_expr, same, z

from hawalg.arith import (
    LaurentPoly,
    Polynomial,
    RationalFunction,
    XPolynomial,
    laurent_to_x,
    poly_gcd,
    rf_eval_shift,
    rf_reduce,
    x_to_laurent,
)
from hawalg.errors import InvalidInputError, NotInImageError

Z = Polynomial([0, 1])


# -- worked examples ---------------------------------------------------------


def test_reduce_cancels_common_factor():
    r = rf_reduce(Polynomial([-1, 0, 1]), Polynomial([-1, 1]))
    assert (r.num, r.den) == (Polynomial([1, 1]), Polynomial.one())


def test_reduce_zero_numerator():
    r = rf_reduce(Polynomial.zero(), Polynomial([2, 0, 0, 1]))
    assert r.num.is_zero() and r.den == Polynomial.one()


def test_reduce_makes_denominator_monic():
    r = rf_reduce(Polynomial([0, 2]), Polynomial([4]))
    assert r.num == Polynomial([0, Fraction(1, 2)])
    assert r.den == Polynomial.one()


def test_reduce_rejects_zero_denominator():
    with pytest.raises(InvalidInputError):
        rf_reduce(Z, Polynomial.zero())


@pytest.mark.parametrize(
    "coeffs, terms",
    [([0, 1], {1: 1, -1: 1}), ([0, 0, 1], {2: 1, 0: 2, -2: 1}), ([1], {0: 1})],
)
def test_x_to_laurent_examples(coeffs, terms):
    assert x_to_laurent(XPolynomial(coeffs)) == LaurentPoly(terms)


def test_laurent_to_x_examples():
    assert laurent_to_x(LaurentPoly({1: 1, -1: 1})) == XPolynomial([0, 1])
    assert laurent_to_x(LaurentPoly({2: 1, 0: 2, -2: 1})) == XPolynomial([0, 0, 1])
    with pytest.raises(NotInImageError):
        laurent_to_x(LaurentPoly({1: 1, -1: -1}))


def test_eval_shift_examples():
    assert rf_eval_shift(RationalFunction(Z), 4) == RationalFunction(Polynomial([0, 4]))
    f = RationalFunction(1, Polynomial([1, -1]))
    assert rf_eval_shift(f, 4) == RationalFunction(1, Polynomial([1, -4]))
    c = RationalFunction(Fraction(7, 3))
    assert rf_eval_shift(c, Fraction(9, 5)) == c
    with pytest.raises(InvalidInputError):
        rf_eval_shift(f, 0)


def test_rational_function_evaluation_and_inverse():
    f = RationalFunction(Polynomial([1, 1]), Polynomial([0, 0, 1]))
    assert f(2) == Fraction(3, 4)
    assert f.inverse() * f == RationalFunction(1)
    with pytest.raises(InvalidInputError):
        f(0)


# -- ring laws ---------------------------------------------------------------


@given(polynomials(), polynomials(), polynomials())
def test_polynomial_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero()


@given(polynomials(), nonzero_polynomials())
def test_divmod_identity(a, b):
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@given(nonzero_polynomials(), nonzero_polynomials())
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    ref = sp.Poly(sp.gcd(poly_expr(a.coeffs), poly_expr(b.coeffs)), z).monic()
    assert g.monic().coeffs == tuple(Fraction(int(c.p), int(c.q)) for c in reversed(ref.all_coeffs()))


@given(polynomials(), nonzero_polynomials(), nonzero_polynomials())
def test_rational_function_is_canonical(n, d, g):
    # multiplying through by a common factor does not change the representative
    assert RationalFunction(n * g, d * g) == RationalFunction(n, d)
    r = RationalFunction(n, d)
    assert r.den.lead == 1
    assert same(rf_expr(r), poly_expr(n.coeffs) / poly_expr(d.coeffs))


@given(polynomials(4), nonzero_polynomials(3), polynomials(4), nonzero_polynomials(3))
def test_rational_function_field_ops_against_sympy(n1, d1, n2, d2):
    f, g = RationalFunction(n1, d1), RationalFunction(n2, d2)
    fe, ge = rf_expr(f), rf_expr(g)
    assert same(rf_expr(f + g), fe + ge)
    assert same(rf_expr(f * g), fe * ge)
    assert same(rf_expr(f - g), fe - ge)


@given(polynomials(4), nonzero_polynomials(3), nonzero_fractions, nonzero_fractions)
def test_eval_shift_composes(n, d, a, b):
    f = RationalFunction(n, d)
    assert rf_eval_shift(rf_eval_shift(f, a), b) == rf_eval_shift(f, a * b)
    assert same(rf_expr(rf_eval_shift(f, a)), rf_expr(f).subs(z, R(a) * z))


# -- x-polynomials -------------------------------------------------------------


@given(xpolynomials())
def test_x_round_trip(p):
    f = x_to_laurent(p)
    assert f.is_palindromic()
    assert laurent_to_x(f) == p


@given(xpolynomials(4), xpolynomials(4))
def test_palindromic_closure(a, b):
    prod = x_to_laurent(a) * x_to_laurent(b)
    assert prod.is_palindromic()
    assert laurent_to_x(prod) == a * b


@given(laurent_polys())
def test_antisymmetric_part_is_rejected(f):
    g = f - f.invert_var()
    if g.is_zero():
        return
    with pytest.raises(NotInImageError):
        laurent_to_x(g)


@given(xpolynomials(), st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(bool))
def test_x_evaluation_agrees_with_laurent(p, zv):
    f = x_to_laurent(p)
    lhs = p(zv + 1 / zv)
    rhs = sum((c * zv**k for k, c in f.terms.items()), Fraction(0))
    assert lhs == rhs
