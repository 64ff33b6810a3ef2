"""Concrete operators of the Askey-Wilson realization and the bases they act on."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .arith import (
    LaurentPoly,
    Polynomial,
    RationalFunction,
    XPolynomial,
    as_rational,
    rational_str,
    x_to_laurent,
)
from .errors import DegenerateParametersError, InvalidInputError
from .shiftop import ShiftOperator, op_apply, op_compose

DEFAULT_NMAX = 10


@dataclass(frozen=True)
class ParameterSet:
    """Exact values of ``q``, the four ``xi`` and the five ``tau`` (``tau[0]`` is the constant term)."""

    q: Fraction
    xi: tuple[Fraction, Fraction, Fraction, Fraction]
    tau: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]
    seed: int | None = None
    resamples: int = 0
    nmax: int = DEFAULT_NMAX

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))
        xi = tuple(as_rational(v) for v in self.xi)
        tau = tuple(as_rational(v) for v in self.tau)
        if len(xi) != 4 or len(tau) != 5:
            raise InvalidInputError("expected four xi and five tau values")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "tau", tau)

    @property
    def q2(self) -> Fraction:
        return self.q * self.q

    @property
    def rho(self) -> Fraction:
        return self.q2 + 1 / self.q2 - 2

    @property
    def xi_product(self) -> Fraction:
        s = Fraction(1)
        for v in self.xi:
            s *= v
        return s

    def with_tau(self, tau: Sequence) -> "ParameterSet":
        return replace(self, tau=tuple(as_rational(t) for t in tau))

    def eigenvalue(self, n: int) -> Fraction:
        q2n = self.q2**n
        return (1 - q2n) * (1 - self.xi_product * q2n / self.q2) / q2n

    def degeneracies(self, nmax: int | None = None, require_generic_tau: bool = True) -> list[str]:
        """Names of violated nondegeneracy conditions (empty when usable)."""
        q = self.q
        bad = []
        if q in (0, 1, -1):
            bad.append("q in {0, 1, -1}")
            return bad
        if self.rho == 0:
            bad.append("rho = 0")
        if q - 1 / q == 0:
            bad.append("q - 1/q = 0")
        s = self.q2 + 1 / self.q2
        if s == 0 or s + 1 == 0:
            bad.append("q^2 + q^-2 (+1) = 0")
        if self.xi[0] == 0:
            bad.append("xi1 = 0")
        t0, t1, t2, t3, t4 = self.tau
        if require_generic_tau:
            if t1 == t2:
                bad.append("tau1 = tau2")
            if t1 == 0:
                bad.append("tau1 = 0")
        n = self.nmax if nmax is None else nmax
        lams = [self.eigenvalue(k) for k in range(n + 2)]
        if len(set(lams)) != len(lams):
            bad.append(f"eigenvalues lambda_0..lambda_{n + 1} not distinct")
        return bad

    def validate(self, nmax: int | None = None, require_generic_tau: bool = True) -> "ParameterSet":
        bad = self.degeneracies(nmax, require_generic_tau)
        if bad:
            raise DegenerateParametersError("; ".join(bad))
        return self

    def to_json(self) -> dict:
        return {
            "q": rational_str(self.q),
            "xi": [rational_str(v) for v in self.xi],
            "tau": [rational_str(v) for v in self.tau],
            "nmax": self.nmax,
            "seed": self.seed,
            "resamples": self.resamples,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ParameterSet":
        try:
            return cls(
                q=as_rational(data["q"]),
                xi=tuple(as_rational(v) for v in data["xi"]),
                tau=tuple(as_rational(v) for v in data["tau"]),
                seed=data.get("seed"),
                resamples=int(data.get("resamples", 0)),
                nmax=int(data.get("nmax", DEFAULT_NMAX)),
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed parameter document: {exc}") from exc


def _zpoly(*coeffs) -> Polynomial:
    return Polynomial(coeffs)


def aw_polynomial(p: ParameterSet) -> Polynomial:
    """``(1 - xi1 z)(1 - xi2 z)(1 - xi3 z)(1 - xi4 z)``."""
    out = Polynomial.one()
    for v in p.xi:
        out = out * _zpoly(1, -v)
    return out


def aw_coefficient(p: ParameterSet) -> RationalFunction:
    """Coefficient of ``T^+`` in the Askey-Wilson operator."""
    den = _zpoly(1, 0, -1) * _zpoly(1, 0, -p.q2)
    return RationalFunction(aw_polynomial(p), den)


def build_X(p: ParameterSet) -> ShiftOperator:
    """Multiplication by ``x = z + 1/z``."""
    return ShiftOperator.multiplication(p.q, RationalFunction(_zpoly(1, 0, 1), _zpoly(0, 1)))


def build_Y(p: ParameterSet) -> ShiftOperator:
    """The Askey-Wilson operator ``A1 (T^+ - 1) + A2 (T^- - 1)`` with ``A2(z) = A1(1/z)``."""
    a1 = aw_coefficient(p)
    a2 = a1.invert_var()
    return ShiftOperator(p.q, {1: a1, -1: a2, 0: -(a1 + a2)})


def build_W_from_Q(p: ParameterSet, Q: Polynomial, p1: XPolynomial) -> ShiftOperator:
    """Second-order operator with ``A1 = Q / (z (1 - z^2)(1 - q^2 z^2))``, ``A2(z) = A1(1/z)``
    and ``A0 = p1(x) - A1 - A2``."""
    if Q.degree > 6:
        raise InvalidInputError(f"Q must have degree <= 6, got {Q.degree}")
    if p1.degree > 1:
        raise InvalidInputError(f"p1 must have degree <= 1, got {p1.degree}")
    den = _zpoly(0, 1) * _zpoly(1, 0, -1) * _zpoly(1, 0, -p.q2)
    a1 = RationalFunction(Q, den)
    a2 = a1.invert_var()
    p1_rf = x_to_laurent(p1).to_rational_function()
    return ShiftOperator(p.q, {1: a1, -1: a2, 0: p1_rf - a1 - a2})


def build_W_algebraic(p: ParameterSet, X: ShiftOperator | None = None, Y: ShiftOperator | None = None) -> ShiftOperator:
    """``tau1 XY + tau2 YX + tau3 X + tau4 Y + tau0``."""
    X = build_X(p) if X is None else X
    Y = build_Y(p) if Y is None else Y
    t0, t1, t2, t3, t4 = p.tau
    return (
        op_compose(X, Y).scale(t1)
        + op_compose(Y, X).scale(t2)
        + X.scale(t3)
        + Y.scale(t4)
        + ShiftOperator.scalar(p.q, t0)
    )


def induced_Q(p: ParameterSet) -> Polynomial:
    """``z [(tau1 + q^2 tau2) z + (tau1 + q^-2 tau2) z^-1 + tau4] P(z)`` as a polynomial."""
    t0, t1, t2, t3, t4 = p.tau
    lin = _zpoly(t1 + t2 / p.q2, t4, t1 + p.q2 * t2)
    return lin * aw_polynomial(p)


def induced_p1(p: ParameterSet, W: ShiftOperator | None = None) -> XPolynomial:
    """``A1 + A2 + A0`` of the algebraic operator, i.e. its image of the constant 1."""
    W = build_W_algebraic(p) if W is None else W
    return apply_x(W, XPolynomial([1]))


def apply_x(op: ShiftOperator, f: XPolynomial) -> XPolynomial:
    """Apply an operator to an x-polynomial; raises NotInImageError if the result leaves that space."""
    return op_apply(op, x_to_laurent(f)).to_xpoly()


# ---------------------------------------------------------------------------
# closed forms and bases
# ---------------------------------------------------------------------------


def closed_form_sequences(p: ParameterSet, n: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(lambda_n, nu_n, mu_n, rho_n)`` of the bidiagonal actions on the phi basis."""
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    x1, x2, x3, x4 = p.xi
    q2n = p.q2**n
    r = q2n / p.q2  # q^(2n-2)
    lam = (1 - q2n) * (1 - x1 * x2 * x3 * x4 * r) / q2n
    nu = (q2n - 1) * (1 - x1 * x2 * r) * (1 - x1 * x3 * r) * (1 - x1 * x4 * r) / q2n
    mu = -1 / (x1 * q2n)
    rho_n = x1 * q2n + 1 / (x1 * q2n)
    return lam, nu, mu, rho_n


@dataclass
class BasisFamily:
    kind: str  # "AW-polynomial" | "phi"
    members: list[XPolynomial] = field(default_factory=list)

    def __getitem__(self, n: int) -> XPolynomial:
        return self.members[n]

    def __len__(self) -> int:
        return len(self.members)


def build_phi_basis(p: ParameterSet, N: int) -> BasisFamily:
    """``phi_n = prod_{k<n} (1 - xi1 q^(2k) x + xi1^2 q^(4k))``."""
    if N < 0:
        raise InvalidInputError("N must be >= 0")
    x1 = p.xi[0]
    members = [XPolynomial([1])]
    for k in range(N):
        a = x1 * p.q2**k
        members.append(members[-1] * XPolynomial([1 + a * a, -a]))
    return BasisFamily("phi", members)


def monomial_matrix(op: ShiftOperator, N: int) -> list[XPolynomial]:
    """Images ``op x^n`` for ``n = 0..N``."""
    return [apply_x(op, XPolynomial.monomial(n)) for n in range(N + 1)]


def build_P_basis(p: ParameterSet, N: int, Y: ShiftOperator | None = None) -> BasisFamily:
    """Monic eigenpolynomials of ``Y`` by back-substitution on its triangular monomial matrix."""
    if N < 0:
        raise InvalidInputError("N must be >= 0")
    Y = build_Y(p) if Y is None else Y
    cols = monomial_matrix(Y, N)
    for n, c in enumerate(cols):
        if c.degree > n:
            raise DegenerateParametersError(f"Y x^{n} has degree {c.degree} > {n}")
    diag = [c.coeff(n) for n, c in enumerate(cols)]
    if len(set(diag)) != len(diag):
        raise DegenerateParametersError("repeated eigenvalue in lambda_0..lambda_N")
    members = []
    for n in range(N + 1):
        lam = diag[n]
        v = [Fraction(0)] * (n + 1)
        v[n] = Fraction(1)
        for i in range(n - 1, -1, -1):
            s = sum((cols[j].coeff(i) * v[j] for j in range(i + 1, n + 1)), Fraction(0))
            v[i] = -s / (diag[i] - lam)
        members.append(XPolynomial(v))
    return BasisFamily("AW-polynomial", members)


def expand_in_basis(f: XPolynomial, basis: BasisFamily) -> list[Fraction]:
    """Coefficients of ``f`` in a graded basis (member n of exact degree n)."""
    if f.degree >= len(basis):
        raise InvalidInputError(f"degree {f.degree} exceeds basis depth {len(basis) - 1}")
    rest = f
    out = [Fraction(0)] * (max(f.degree, -1) + 1)
    for n in range(f.degree, -1, -1):
        c = rest.coeff(n)
        if c:
            b = basis[n]
            t = c / b.coeff(n)
            out[n] = t
            rest = rest - b * t
    return out


def heun_tridiagonal_coeffs(p: ParameterSet, n: int, b_n, u_n, lam: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of ``P_{n+1}, P_n, P_{n-1}`` in ``W P_n``.

    ``lam`` is the eigenvalue sequence (indexable at ``n - 1, n, n + 1``),
    ``b_n, u_n`` the recurrence coefficients of ``x P_n``.
    """
    if n < 1:
        raise InvalidInputError("n must be >= 1")
    t0, t1, t2, t3, t4 = p.tau
    b_n, u_n = as_rational(b_n), as_rational(u_n)
    r1 = t1 * lam[n] + t2 * lam[n + 1] + t3
    r2 = (t1 + t2) * lam[n] * b_n + t3 * b_n + t4 * lam[n] + t0
    r3 = (t1 * lam[n] + t2 * lam[n - 1] + t3) * u_n
    return r1, r2, r3


def laurent_of(f: XPolynomial) -> LaurentPoly:
    return x_to_laurent(f)


@dataclass(frozen=True)
class Realization:
    """Concrete ``X``, ``Y`` and ``W = tau1 XY + tau2 YX + tau3 X + tau4 Y + tau0``.

    ``alpha`` and ``beta`` shift the generators to ``x + alpha`` and
    ``Y + beta`` before ``W`` is formed; nonzero shifts switch on the AW
    constant ``a2``, which vanishes for the unshifted pair.
    """

    p: ParameterSet
    X: ShiftOperator
    Y: ShiftOperator
    W: ShiftOperator
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)

    def ops(self) -> dict[str, ShiftOperator]:
        return {"X": self.X, "Y": self.Y, "W": self.W}


def build_realization(p: ParameterSet, alpha=0, beta=0) -> Realization:
    alpha, beta = as_rational(alpha), as_rational(beta)
    X = build_X(p) + ShiftOperator.scalar(p.q, alpha)
    Y = build_Y(p) + ShiftOperator.scalar(p.q, beta)
    return Realization(p, X, Y, build_W_algebraic(p, X, Y), alpha, beta)
