from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hawalg.errors import InvalidInputError
from hawalg.operators import build_realization
from hawalg.relations import Binding, Expr, RelationTemplate, comm, eval_template, fit_coefficients, qcomm, verify_identity
from hawalg.shiftop import op_is_zero
from hawalg.suite import sample_parameters
from hawalg.structure import (
    AW_NAMES,
    HAW_NAMES,
    HAWConstants,
    aw_templates,
    fit_aw_constants,
    fit_haw_constants,
    haw_relation_exprs,
    jacobi_constraint_check,
)

X, Y = Expr.sym("X"), Expr.sym("Y")
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=7)

# module-level realization so that @given tests can share it
P = sample_parameters(0)
BIND = Binding(build_realization(P).ops())
H, _ = fit_haw_constants(P.q, BIND)


@pytest.fixture(scope="module")
def binding():
    return BIND


def test_empty_template_is_zero(binding):
    t = RelationTemplate("empty", ("X",), Expr())
    assert op_is_zero(eval_template(t, binding))
    assert verify_identity(t, binding).ok


def test_undeclared_symbol_is_rejected():
    with pytest.raises(InvalidInputError):
        RelationTemplate("bad", ("X",), X * Y)


def test_eval_with_unknowns_is_rejected(binding):
    t = RelationTemplate("t", ("X",), X - Expr.unknown("c"))
    with pytest.raises(InvalidInputError):
        eval_template(t, binding)


def test_q_commutator_expression():
    q = Fraction(2)
    assert qcomm(X, Y, q).terms == (X * Y * 2 - Y * X * Fraction(1, 2)).terms
    assert comm(X, X).terms == {}


def test_aw_fit_verify_closure(binding, p0):
    a, fit = fit_aw_constants(p0.q, binding)
    assert fit.status == "unique" and fit.nullspace_dim == 0
    for t in aw_templates(p0.q):
        assert verify_identity(t.substitute(a.as_dict()), binding).ok


def test_haw_fit_verify_closure(binding, p0):
    h, fit = fit_haw_constants(p0.q, binding)
    assert fit.status == "unique"
    for t in haw_relation_exprs(h, p0.q):
        assert verify_identity(t, binding).ok
    assert jacobi_constraint_check(h, p0.q)


@given(st.sampled_from(HAW_NAMES), coeffs.filter(bool))
def test_haw_mutation_is_detected(name, delta):
    bad = H.replace(**{name: getattr(H, name) + delta})
    failures = [verify_identity(t, BIND) for t in haw_relation_exprs(bad, P.q)]
    assert any(not r.ok for r in failures)
    witness = next(r.residual_witness for r in failures if not r.ok)
    assert {"template", "shift", "coefficient"} <= set(witness)


@given(st.sampled_from(AW_NAMES), coeffs.filter(bool))
def test_aw_mutation_is_detected(name, delta):
    a, _ = fit_aw_constants(P.q, BIND)
    bad = a.replace(**{name: getattr(a, name) + delta})
    results = [verify_identity(t.substitute(bad.as_dict()), BIND) for t in aw_templates(P.q)]
    assert any(not r.ok for r in results)


@given(coeffs, coeffs, coeffs)
def test_fit_recovers_planted_coefficients(a, b, c):
    # plant a combination of independent words and ask for it back
    target = X * Y * a + Y * X * b + X * X * c
    unknown = X * Y * Expr.unknown("u") + Y * X * Expr.unknown("v") + X * X * Expr.unknown("w")
    t = RelationTemplate("planted", ("X", "Y"), target - unknown)
    fit = fit_coefficients(t, BIND)
    assert fit.status == "unique"
    assert fit.solution == {"u": a, "v": b, "w": c}


def test_fit_reports_inconsistency(binding):
    t = RelationTemplate("impossible", ("X",), X - Expr.unknown("c"))
    fit = fit_coefficients(t, binding)
    assert fit.status == "inconsistent"
    assert fit.residual_witness["template"] == "impossible"


def test_fit_reports_family(binding):
    t = RelationTemplate("free", ("X",), X * Expr.unknown("c") - X * Expr.unknown("d"))
    fit = fit_coefficients(t, binding)
    assert fit.status == "affine-family" and fit.nullspace_dim == 1


def test_jacobi_constraint_examples():
    zero = {k: Fraction(0) for k in HAW_NAMES}
    h = HAWConstants(**{**zero, "b1": Fraction(3), "b1p": Fraction(3), "b3": Fraction(-2), "b3p": Fraction(-2)})
    assert jacobi_constraint_check(h, 2)
    h1 = HAWConstants(**{**zero, "e1": Fraction(1), "e3": Fraction(21, 4)})
    assert jacobi_constraint_check(h1, 2)
    assert not jacobi_constraint_check(h1.replace(e3=Fraction(5)), 2)
