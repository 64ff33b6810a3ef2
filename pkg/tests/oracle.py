"""Independent reference computations built on sympy.

Nothing here imports the package's arithmetic: operators are applied by
literal substitution ``f(z) -> f(q^2 z)`` and simplified with ``cancel``.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

z = sp.Symbol("z")


def R(v) -> sp.Rational:
    v = Fraction(v)
    return sp.Rational(v.numerator, v.denominator)


def poly_expr(coeffs) -> sp.Expr:
    return sum((R(c) * z**i for i, c in enumerate(coeffs)), sp.Integer(0))


def rf_expr(rf) -> sp.Expr:
    return poly_expr(rf.num.coeffs) / poly_expr(rf.den.coeffs)


def laurent_expr(f) -> sp.Expr:
    return sum((R(c) * z**k for k, c in f.terms.items()), sp.Integer(0))


def xpoly_expr(p) -> sp.Expr:
    x = z + 1 / z
    return sum((R(c) * x**i for i, c in enumerate(p.coeffs)), sp.Integer(0))


def same(a: sp.Expr, b: sp.Expr) -> bool:
    return sp.cancel(sp.together(a - b)) == 0


def shift(f: sp.Expr, q, k: int) -> sp.Expr:
    return f.subs(z, R(q) ** (2 * k) * z)


def apply_op(op, f: sp.Expr) -> sp.Expr:
    """Apply a ShiftOperator coefficient by coefficient without using its composition law."""
    return sum((rf_expr(c) * shift(f, op.q, k) for k, c in op.terms.items()), sp.Integer(0))


def aw_A1(p) -> sp.Expr:
    P = sp.Integer(1)
    for v in p.xi:
        P *= 1 - R(v) * z
    q2 = R(p.q) ** 2
    return P / ((1 - z**2) * (1 - q2 * z**2))


def apply_X(p, f: sp.Expr) -> sp.Expr:
    return (z + 1 / z) * f


def apply_Y(p, f: sp.Expr) -> sp.Expr:
    a1 = aw_A1(p)
    a2 = a1.subs(z, 1 / z)
    return a1 * (shift(f, p.q, 1) - f) + a2 * (shift(f, p.q, -1) - f)


def apply_W(p, f: sp.Expr) -> sp.Expr:
    t0, t1, t2, t3, t4 = (R(t) for t in p.tau)
    return (
        t1 * apply_X(p, apply_Y(p, f))
        + t2 * apply_Y(p, apply_X(p, f))
        + t3 * apply_X(p, f)
        + t4 * apply_Y(p, f)
        + t0 * f
    )


def lambda_n(p, n: int) -> sp.Rational:
    q2n = R(p.q) ** (2 * n)
    prod = R(p.xi[0]) * R(p.xi[1]) * R(p.xi[2]) * R(p.xi[3])
    return (1 - q2n) * (1 - prod * q2n / R(p.q) ** 2) / q2n


def x_coefficients(expr: sp.Expr, max_degree: int) -> list[sp.Rational] | None:
    """Coefficients in ``x = z + 1/z`` of a palindromic Laurent polynomial, or None."""
    expr = sp.cancel(sp.together(expr))
    num, den = sp.fraction(expr)
    num, den = sp.Poly(num, z), sp.Poly(den, z)
    if len(den.terms()) != 1:
        return None
    k = den.degree()
    c = den.LC()
    laurent = {e[0] - k: v / c for e, v in num.terms()}
    out = [sp.Integer(0)] * (max_degree + 1)
    for n in range(max_degree, -1, -1):
        top = laurent.get(n, 0)
        if top:
            out[n] = top
            for j in range(n + 1):
                e = n - 2 * j
                laurent[e] = laurent.get(e, 0) - top * sp.binomial(n, j)
    if any(v != 0 for v in laurent.values()):
        return None
    return out
