from fractions import Fraction

import pytest

import oracle
from hawalg.arith import Polynomial, RationalFunction, XPolynomial
from hawalg.errors import DegenerateParametersError, InvalidInputError
from hawalg.operators import (
    ParameterSet,
    apply_x,
    aw_polynomial,
    build_P_basis,
    build_W_algebraic,
    build_W_from_Q,
    build_X,
    build_Y,
    build_phi_basis,
    closed_form_sequences,
    expand_in_basis,
    heun_tridiagonal_coeffs,
    induced_p1,
    induced_Q,
    monomial_matrix,
)
from hawalg.shiftop import ShiftOperator, op_is_zero


def _with_tau(p, tau):
    return p.with_tau(tuple(Fraction(t) for t in tau))


def test_X_is_multiplication_by_x(example_params):
    X = build_X(example_params)
    assert X.terms == {0: RationalFunction(Polynomial([1, 0, 1]), Polynomial([0, 1]))}
    assert apply_x(X, XPolynomial([1])) == XPolynomial([0, 1])
    assert apply_x(X, XPolynomial.monomial(4)) == XPolynomial.monomial(5)


def test_Y_kills_constants_and_is_triangular(example_params):
    p = example_params
    Y = build_Y(p)
    assert apply_x(Y, XPolynomial([1])).is_zero()
    for n, img in enumerate(monomial_matrix(Y, 6)):
        assert img.coeff(n) == p.eigenvalue(n)
        assert img.degree <= n


def test_lambda_one_example():
    p = ParameterSet(2, (2, 3, 5, 7), (0, 3, 1, 0, 0))
    lam, nu, mu, rho = closed_form_sequences(p, 1)
    assert lam == Fraction(627, 4)
    assert closed_form_sequences(p, 0)[:2] == (0, 0)


def test_phi_examples():
    p = ParameterSet(2, (2, 3, 5, 7), (0, 3, 1, 0, 0))
    phi = build_phi_basis(p, 3)
    assert phi[0] == XPolynomial([1])
    assert phi[1] == XPolynomial([5, -2])
    _, _, mu0, rho0 = closed_form_sequences(p, 0)
    assert (mu0, rho0) == (Fraction(-1, 2), Fraction(5, 2))
    assert apply_x(build_X(p), phi[0]) == phi[1] * mu0 + phi[0] * rho0


def test_Y_on_phi_one(example_params):
    p = example_params
    phi = build_phi_basis(p, 2)
    lam, nu, _, _ = closed_form_sequences(p, 1)
    assert apply_x(build_Y(p), phi[1]) == phi[1] * lam + phi[0] * nu


def test_W_from_Q_special_members(example_params):
    p = example_params
    Q = Polynomial([0, 1]) * aw_polynomial(p)
    assert build_W_from_Q(p, Q, XPolynomial()) == build_Y(p)
    assert build_W_from_Q(p, Polynomial.zero(), XPolynomial([0, 1])) == build_X(p)
    with pytest.raises(InvalidInputError):
        build_W_from_Q(p, Polynomial.monomial(7), XPolynomial())
    with pytest.raises(InvalidInputError):
        build_W_from_Q(p, Q, XPolynomial([0, 0, 1]))


def test_generic_degree_six_member_raises_degree(example_params):
    p = example_params
    Q = Polynomial([Fraction(k + 1, 7 - k) for k in range(7)])
    W = build_W_from_Q(p, Q, XPolynomial([Fraction(1, 2), 3]))
    for n in range(9):
        assert apply_x(W, XPolynomial.monomial(n)).degree == n + 1


def test_W_algebraic_trivial_tau(example_params):
    p = example_params
    W = build_W_algebraic(_with_tau(p, (Fraction(5, 3), 0, 0, 0, 0)))
    assert W == ShiftOperator.scalar(p.q, Fraction(5, 3))
    assert build_W_algebraic(_with_tau(p, (0, 0, 0, 1, 0))) == build_X(p)


def test_W_algebraic_first_coefficient(params):
    for p in params:
        W = build_W_algebraic(p)
        expected = RationalFunction(induced_Q(p), Polynomial([0, 1]) * Polynomial([1, 0, -1]) * Polynomial([1, 0, -p.q2]))
        assert W.coeff(1) == expected
        assert W.coeff(-1) == expected.invert_var()
        assert op_is_zero(W - build_W_from_Q(p, induced_Q(p), induced_p1(p, W)))


def test_W_against_substitution_oracle(p0):
    W = build_W_algebraic(p0)
    for n in range(4):
        mine = apply_x(W, XPolynomial.monomial(n))
        ref = oracle.apply_W(p0, oracle.xpoly_expr(XPolynomial.monomial(n)))
        assert oracle.same(oracle.xpoly_expr(mine), ref)


def test_Y_leading_coefficients_against_oracle(p0):
    for n in range(5):
        ref = oracle.x_coefficients(oracle.apply_Y(p0, oracle.xpoly_expr(XPolynomial.monomial(n))), n)
        assert ref is not None
        assert ref[n] == oracle.lambda_n(p0, n) == oracle.R(p0.eigenvalue(n))


def test_P_basis_eigenvectors(p0):
    basis = build_P_basis(p0, 8)
    Y = build_Y(p0)
    assert basis[0] == XPolynomial([1])
    for n in range(9):
        assert basis[n].degree == n and basis[n].lead == 1
        assert apply_x(Y, basis[n]) == basis[n] * p0.eigenvalue(n)


def test_P_basis_recurrence(p0):
    basis = build_P_basis(p0, 7)
    X = build_X(p0)
    for n in range(1, 7):
        c = expand_in_basis(apply_x(X, basis[n]) - basis[n + 1], basis)
        assert all(v == 0 for v in c[: n - 1])


def test_repeated_eigenvalue_is_rejected():
    # xi1 xi2 xi3 xi4 = 1 makes lambda_1 = lambda_0 = 0
    p = ParameterSet(2, (1, 1, 2, Fraction(1, 2)), (0, 3, 1, 0, 0))
    assert p.eigenvalue(1) == 0
    with pytest.raises(DegenerateParametersError):
        build_P_basis(p, 3)
    assert p.degeneracies()


def test_heun_coefficients_trivial_cases(example_params):
    p = example_params
    lam = [Fraction(n) for n in range(5)]
    x_only = _with_tau(p, (0, 0, 0, 1, 0))
    y_only = _with_tau(p, (0, 0, 0, 0, 1))
    assert heun_tridiagonal_coeffs(x_only, 2, Fraction(3, 2), 7, lam) == (1, Fraction(3, 2), 7)
    assert heun_tridiagonal_coeffs(y_only, 2, Fraction(3, 2), 7, lam) == (0, lam[2], 0)
    with pytest.raises(InvalidInputError):
        heun_tridiagonal_coeffs(p, 0, 1, 1, lam)


def test_parameter_json_round_trip(p0):
    assert ParameterSet.from_json(p0.to_json()) == p0
    with pytest.raises(InvalidInputError):
        ParameterSet.from_json({"q": "2"})
    with pytest.raises(InvalidInputError):
        ParameterSet.from_json({"q": "2", "xi": ["1"] * 3, "tau": ["1"] * 5})
