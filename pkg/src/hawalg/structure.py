"""Relation templates, structure constants and central elements of the AW and HAW algebras."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Mapping

from .arith import as_rational, rational_str
from .errors import DegenerateParametersError, InvalidInputError
from .operators import ParameterSet
from .relations import (
    Binding,
    Expr,
    FitResult,
    RelationTemplate,
    anti,
    comm,
    eval_template,
    fit_coefficients,
    qcomm,
)
from .shiftop import ShiftOperator


def _rho(q: Fraction) -> Fraction:
    return q * q + 1 / (q * q) - 2


# ---------------------------------------------------------------------------
# constant records
# ---------------------------------------------------------------------------


class _Constants:
    def as_dict(self) -> dict[str, Fraction]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self) -> dict[str, str]:
        return {k: rational_str(v) for k, v in self.as_dict().items()}

    @classmethod
    def from_mapping(cls, values: Mapping[str, object]):
        return cls(**{f.name: as_rational(values[f.name]) for f in fields(cls)})

    def replace(self, **changes):
        d = self.as_dict()
        d.update({k: as_rational(v) for k, v in changes.items()})
        return type(self)(**d)


@dataclass(frozen=True)
class AWConstants(_Constants):
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a5: Fraction
    a6: Fraction
    a7: Fraction


@dataclass(frozen=True)
class HAWConstants(_Constants):
    e1: Fraction
    e2: Fraction
    e3: Fraction
    e4: Fraction
    b1: Fraction
    b2: Fraction
    b3: Fraction
    b4: Fraction
    b5: Fraction
    b6: Fraction
    b7: Fraction
    b1p: Fraction
    b3p: Fraction


AW_NAMES = tuple(f"a{i}" for i in range(1, 8))
HAW_NAMES = tuple(f.name for f in fields(HAWConstants))


# ---------------------------------------------------------------------------
# relation templates
# ---------------------------------------------------------------------------


def aw_templates(q, A: str = "X", B: str = "Y", prefix: str = "a") -> list[RelationTemplate]:
    """Askey-Wilson relations for the pair ``(A, B)`` with unknowns ``prefix1..prefix7``."""
    q = as_rational(q)
    rho = _rho(q)
    x, y = Expr.sym(A), Expr.sym(B)
    u = {i: Expr.unknown(f"{prefix}{i}") for i in range(1, 8)}
    r1 = comm(x, comm(x, y)) - (rho * x * y * x + u[1] * x * x + u[2] * anti(x, y) + u[3] * x + u[4] * y + u[5])
    r2 = comm(y, comm(y, x)) - (rho * y * x * y + u[1] * anti(x, y) + u[2] * y * y + u[3] * y + u[6] * x + u[7])
    return [
        RelationTemplate(f"aw-1[{A},{B}]", (A, B), r1),
        RelationTemplate(f"aw-2[{A},{B}]", (A, B), r2),
    ]


def haw_templates(q, A: str = "X", B: str = "W", names: Mapping[str, str] | None = None) -> list[RelationTemplate]:
    """HAW relations for ``(A, B)``; every structure constant is a free unknown.

    ``names`` renames the default unknowns (``e1``, ``b1p``, ...).
    """
    q = as_rational(q)
    rho = _rho(q)
    nm = {k: k for k in HAW_NAMES}
    nm.update(names or {})
    u = {k: Expr.unknown(v) for k, v in nm.items()}
    x, w = Expr.sym(A), Expr.sym(B)
    r1 = comm(x, comm(x, w)) - (
        rho * x * w * x + u["e1"] * x**3 + u["b1"] * x * x + u["b2"] * anti(x, w)
        + u["b3"] * x + u["b4"] * w + u["b5"]
    )
    r2 = comm(w, comm(w, x)) - (
        rho * w * x * w + u["e2"] * x**3 + u["e3"] * x * w * x + u["e4"] * x * x
        + u["b1p"] * anti(x, w) + u["b2"] * w * w + u["b3p"] * w + u["b6"] * x + u["b7"]
    )
    return [
        RelationTemplate(f"haw-1[{A},{B}]", (A, B), r1),
        RelationTemplate(f"haw-2[{A},{B}]", (A, B), r2),
    ]


YW_NAMES = {
    "e1": "g1", "e2": "g2", "e3": "g3", "e4": "g4",
    "b1": "c1", "b2": "c2", "b3": "c3", "b4": "c4", "b5": "c5", "b6": "c6", "b7": "c7",
    "b1p": "c1p", "b3p": "c3p",
}


def haw_constants_from(values: Mapping[str, Fraction], names: Mapping[str, str] | None = None) -> HAWConstants:
    nm = {k: k for k in HAW_NAMES}
    nm.update(names or {})
    return HAWConstants(**{k: values[v] for k, v in nm.items()})


def _require_unique(fit: FitResult, what: str) -> None:
    if fit.status != "unique":
        raise DegenerateParametersError(f"{what}: fit status {fit.status} (nullspace {fit.nullspace_dim})")


def fit_aw_constants(q, binding, A: str = "X", B: str = "Y") -> tuple[AWConstants, FitResult]:
    fit = fit_coefficients(aw_templates(q, A, B), binding)
    _require_unique(fit, "AW constants")
    return AWConstants.from_mapping(fit.solution), fit


def fit_haw_constants(q, binding, A: str = "X", B: str = "W", names: Mapping[str, str] | None = None) -> tuple[HAWConstants, FitResult]:
    fit = fit_coefficients(haw_templates(q, A, B, names), binding)
    _require_unique(fit, "HAW constants")
    return haw_constants_from(fit.solution, names), fit


def jacobi_constraint_check(h: HAWConstants, q) -> bool:
    """``e3 = e1 (rho + 3)``, ``b1' = b1 + e1 b2``, ``b3' = b3 + e1 b4``."""
    rho = _rho(as_rational(q))
    return (
        h.e3 == h.e1 * (rho + 3)
        and h.b1p == h.b1 + h.e1 * h.b2
        and h.b3p == h.b3 + h.e1 * h.b4
    )


def haw_relation_exprs(h: HAWConstants, q, A: str = "X", B: str = "W") -> list[RelationTemplate]:
    """The two HAW relations with all constants substituted."""
    return [t.substitute(h.as_dict()) for t in haw_templates(q, A, B)]


# ---------------------------------------------------------------------------
# central elements
# ---------------------------------------------------------------------------


def omega_aw_expr(a: AWConstants, q, A: str = "X", B: str = "Y") -> Expr:
    q = as_rational(q)
    x, y = Expr.sym(A), Expr.sym(B)
    G = qcomm(y, x, q)
    Gt = qcomm(x, y, q)
    qi = 1 / q
    dq = q - qi
    return (
        (q * q - qi * qi) * qi * x * y * G
        + a.a6 * qi * qi * x * x
        + a.a4 * q * q * y * y
        - qi * qi * G * G
        + (a.a7 * (1 + qi * qi) + a.a2 * a.a6) * x
        + (a.a5 * (1 + q * q) + a.a1 * a.a4) * y
        + (a.a3 + a.a1 * a.a2) / dq * (G + Gt)
        + (1 / dq) * (a.a1 * x * G + a.a1 * qi * qi * x * Gt + a.a2 * y * G + a.a2 * q * q * y * Gt)
    )


def build_omega_AW(a: AWConstants, p: ParameterSet | Fraction, X: ShiftOperator, Y: ShiftOperator) -> ShiftOperator:
    q = p.q if isinstance(p, ParameterSet) else as_rational(p)
    t = RelationTemplate("omega-aw", ("X", "Y"), omega_aw_expr(a, q))
    return eval_template(t, {"X": X, "Y": Y})


OMEGA_N_READINGS = ("corrected", "printed")


def omega_haw_coefficients(h: HAWConstants, q, n_reading: str = "corrected") -> dict[str, Fraction]:
    """The sixteen coefficients ``A..P`` of the HAW central element.

    The coefficient ``N`` of ``X^2 H1~`` is ``e1 q^-4 / (q - q^-1)``.  The
    reading ``"printed"`` uses ``e1 q^-2 / (q - q^-1)`` instead, which is
    central only when ``e1 b2 = 0``; it is kept for comparison.
    """
    if n_reading not in OMEGA_N_READINGS:
        raise InvalidInputError(f"n_reading must be one of {OMEGA_N_READINGS}")
    q = as_rational(q)
    if q in (0, 1, -1):
        raise DegenerateParametersError("q must avoid {0, 1, -1}")
    qi = 1 / q
    q2, qi2 = q * q, qi * qi
    s = q2 + qi2
    s1 = s + 1
    dq = q - qi
    d2 = q2 - qi2
    e1, e2, e4 = h.e1, h.e2, h.e4
    b1, b2, b3, b4, b5, b6, b7 = h.b1, h.b2, h.b3, h.b4, h.b5, h.b6, h.b7
    return {
        "A": d2 * qi,
        "B": qi2 * b6 - (e2 * b2 * b2 - s * (q + qi) ** 2 * e4 * b2 - s1 * e2 * b4) / (s * s1),
        "C": b4 * q2,
        "D": -qi2,
        "E": (1 + qi2) * b7 + b2 * b6 - ((e2 * b2 - s * e4) * b4) / (s * s1),
        "F": (1 + q2) * b5 + b1 * b4 + e1 * b2 * b4,
        "G": (b3 + b1 * b2 + e1 * b2 * b2) / dq + s1 * qi * b4 * e1 / d2,
        "H": (b3 + b1 * b2 + e1 * b2 * b2) / dq + (1 + 2 * qi2) * q * b4 * e1 / d2,
        "I": (b1 + s1 * e1 * b2) / dq,
        "J": (b1 * qi2 + (1 + 2 * qi2) * e1 * b2) / dq,
        "K": b2 / dq,
        "L": b2 * q2 / dq,
        "M": e1 / dq,
        "N": e1 * (qi2 * qi2 if n_reading == "corrected" else qi2) / dq,
        "O": ((q2 * q2 + 2 * q2 + 4 + 2 * qi2 + qi2 * qi2) * e2 * b2 + (q + qi) * s * qi**3 * e4) / (s * s1),
        "P": e2 * qi2 * qi2 / s,
    }


def omega_haw_expr(h: HAWConstants, q, A: str = "X", B: str = "W", n_reading: str = "corrected") -> Expr:
    q = as_rational(q)
    c = omega_haw_coefficients(h, q, n_reading)
    x, w = Expr.sym(A), Expr.sym(B)
    H1 = qcomm(w, x, q)
    H1t = qcomm(x, w, q)
    return (
        c["A"] * x * w * H1 + c["B"] * x * x + c["C"] * w * w + c["D"] * H1 * H1
        + c["E"] * x + c["F"] * w + c["G"] * H1 + c["H"] * H1t
        + c["I"] * x * H1 + c["J"] * x * H1t + c["K"] * w * H1 + c["L"] * w * H1t
        + c["M"] * x * x * H1 + c["N"] * x * x * H1t + c["O"] * x**3 + c["P"] * x**4
    )


def build_omega_HAW(
    h: HAWConstants, p: ParameterSet | Fraction, X: ShiftOperator, W: ShiftOperator, n_reading: str = "corrected"
) -> ShiftOperator:
    q = p.q if isinstance(p, ParameterSet) else as_rational(p)
    t = RelationTemplate("omega-haw", ("X", "W"), omega_haw_expr(h, q, n_reading=n_reading))
    return eval_template(t, {"X": X, "W": W})


def symmetric_casimir_template(q, A: str = "X", B: str = "W") -> RelationTemplate:
    """Minimal symmetric ansatz with twelve unknown coefficients plus an unknown constant ``c0``.

    A solution makes the combination equal to ``c0`` times the identity.
    """
    x, w = Expr.sym(A), Expr.sym(B)
    z = comm(x, w)
    u = Expr.unknown
    e = (
        u("a40") * z * z + u("a41") * x**4 + u("a42") * anti(x**3, w) + u("a43") * anti(x * x, w * w)
        + u("a31") * x**3 + u("a32") * x * w * x + u("a33") * w * x * w
        + u("a21") * x * x + u("a22") * w * w + u("a23") * anti(x, w)
        + u("a11") * x + u("a12") * w
        - u("c0")
    )
    return RelationTemplate("omega-sym", (A, B), e)


SYMMETRIC_NAMES = ("a40", "a41", "a42", "a43", "a31", "a32", "a33", "a21", "a22", "a23", "a11", "a12")
