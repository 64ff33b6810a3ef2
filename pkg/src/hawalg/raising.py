"""Solve for every second-order q-difference operator that raises x-degree by at most one.

Ansatz: ``W = A1 T^+ + A2 T^- + A0`` with ``A_i = N_i(z) / D(z)`` where the
numerators are independent and ``D`` carries more poles than needed.  The
condition "``W x^n`` is an x-polynomial of degree <= n+1" is linear in the
numerator coefficients and in the coefficients of the image, so the whole
family is a nullspace.  Each basis vector is then rewritten in the
coordinates ``r0..r6`` (numerator of ``A1`` over ``z(1-z^2)(1-q^2 z^2)``) and
``kappa1, kappa0`` (the image of the constant 1).
"""

from __future__ import annotations

from fractions import Fraction

from .arith import LaurentPoly, Polynomial, RationalFunction, x_to_laurent, XPolynomial
from .errors import InvalidInputError, NotInImageError
from .linalg import solve
from .operators import ParameterSet
from .relations import FitResult

RAISING_NAMES = tuple(f"r{k}" for k in range(7)) + ("kappa1", "kappa0")


def _ansatz_denominator(q2: Fraction) -> Polynomial:
    d = Polynomial.monomial(2)
    for c in (1, q2, 1 / q2, q2 * q2, 1 / (q2 * q2)):
        d = d * Polynomial([1, 0, -c])
    return d


def _family_nullspace(p: ParameterSet, n_probe: int, num_degree: int) -> tuple[Polynomial, list[list[Fraction]], int]:
    q2 = p.q2
    D = _ansatz_denominator(q2)
    width = num_degree + 1
    n_num = 3 * width
    # column layout: N1, N2, N0 coefficients, then image coefficients per n
    img_col = {}
    col = n_num
    for n in range(n_probe + 1):
        for k in range(n + 2):
            img_col[(n, k)] = col
            col += 1
    ncols = col
    dcoef = D.coeffs
    rows: list[list[Fraction]] = []
    for n in range(n_probe + 1):
        f = x_to_laurent(XPolynomial.monomial(n))
        shifted = (f.scale_var(q2), f.scale_var(1 / q2), f)
        eqs: dict[int, list[Fraction]] = {}

        def row(e: int) -> list[Fraction]:
            r = eqs.get(e)
            if r is None:
                r = eqs[e] = [Fraction(0)] * ncols
            return r

        for i, g in enumerate(shifted):
            for j in range(width):
                c = i * width + j
                for e, v in g.terms.items():
                    row(e + j)[c] += v
        # minus D * L with L = c0 + sum_k ck (z^k + z^-k)
        for k in range(n + 2):
            c = img_col[(n, k)]
            for dj, dv in enumerate(dcoef):
                if not dv:
                    continue
                row(dj + k)[c] -= dv
                if k:
                    row(dj - k)[c] -= dv
        rows.extend(eqs[e] for e in sorted(eqs))
    sol = solve(rows, None, ncols)
    return D, sol.nullspace, width


def _coordinates(p: ParameterSet, D: Polynomial, vec: list[Fraction], width: int) -> list[Fraction]:
    """``(r0..r6, kappa1, kappa0)`` of one family member; raises if it is not of the closed form."""
    q2 = p.q2
    N1, N2, N0 = (Polynomial(vec[i * width:(i + 1) * width]) for i in range(3))
    A1, A2, A0 = (RationalFunction(N, D) for N in (N1, N2, N0))
    base = Polynomial([0, 1]) * Polynomial([1, 0, -1]) * Polynomial([1, 0, -q2])
    Qrf = A1 * RationalFunction.from_poly(base)
    if not Qrf.den.is_constant() or Qrf.num.degree > 6:
        raise NotInImageError(f"A1 numerator is not a polynomial of degree <= 6: {Qrf}")
    Q = Qrf.num * (1 / Qrf.den.lead)
    if A2 != A1.invert_var():
        raise NotInImageError("A2 is not A1(1/z)")
    p1 = (A0 + A1 + A2).to_xpoly()
    if p1.degree > 1:
        raise NotInImageError(f"A0 + A1 + A2 has x-degree {p1.degree}")
    return [Q.coeff(k) for k in range(7)] + [p1.coeff(1), p1.coeff(0)]


def _rref(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    rows = [list(v) for v in vectors]
    out = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    out = [row for row in rows[:r]]
    return out


def fit_degree_raising_family(p: ParameterSet, n_probe: int = 9, num_degree: int = 14) -> FitResult:
    """Family of operators with ``deg W x^n <= n + 1`` for ``n = 0..n_probe``.

    The result is expressed over ``r0..r6, kappa1, kappa0``; its nullspace
    is reduced to echelon form.  ``equations`` counts rows of the raw system.
    """
    if n_probe < 9:
        raise InvalidInputError("n_probe must be >= 9")
    D, null, width = _family_nullspace(p, n_probe, num_degree)
    coords = [_coordinates(p, D, v, width) for v in null]
    basis = _rref(coords) if coords else []
    if len(basis) != len(coords):
        # two raw solutions with equal coordinates would mean hidden freedom
        raise NotInImageError("family members are not determined by (r, kappa)")
    nullspace = [dict(zip(RAISING_NAMES, v)) for v in basis]
    zero = {k: Fraction(0) for k in RAISING_NAMES}
    status = "affine-family" if nullspace else "unique"
    return FitResult(status, list(RAISING_NAMES), zero, len(nullspace), nullspace, None, 0)


def family_member_in_span(fit: FitResult, coords: dict[str, Fraction]) -> bool:
    """Whether a coordinate vector lies in the fitted family."""
    vecs = [[v[k] for k in RAISING_NAMES] for v in fit.nullspace]
    target = [Fraction(coords.get(k, 0)) for k in RAISING_NAMES]
    if not vecs:
        return not any(target)
    A = [[vecs[j][i] for j in range(len(vecs))] for i in range(len(RAISING_NAMES))]
    return solve(A, target, len(vecs)).particular is not None


def coordinates_of(Q: Polynomial, p1: XPolynomial) -> dict[str, Fraction]:
    vals = [Q.coeff(k) for k in range(7)] + [p1.coeff(1), p1.coeff(0)]
    return dict(zip(RAISING_NAMES, vals))
