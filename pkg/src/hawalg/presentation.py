"""The three-generator presentation of the AW algebra in terms of ``X``, ``Y`` and ``W``.

With ``Z = [X, Y]`` and ``tau1 != tau2`` one can trade ``Z`` for ``W``;
the commutators ``[W, X]`` and ``[Y, W]`` then close on symmetric
combinations plus linear terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParametersError, InvalidInputError
from .operators import ParameterSet
from .relations import Expr, RelationTemplate, anti, comm
from .structure import AWConstants


@dataclass(frozen=True)
class PresentationConstants:
    sigma0: Fraction
    sigma1: Fraction
    sigma2: Fraction
    sigma3: Fraction
    sigma4: Fraction
    kappa: Fraction
    mu: tuple[Fraction, ...]  # mu1..mu7
    # coefficient of W in [W, X] and in [Y, W]; the displayed relations omit these
    w_coeff_wx: Fraction
    w_coeff_yw: Fraction
    p_coeff: Fraction | None = None
    kappa_tilde: Fraction | None = None
    mu_tilde: tuple[Fraction, ...] | None = None

    def as_dict(self) -> dict[str, Fraction | None]:
        d = {f"sigma{i}": getattr(self, f"sigma{i}") for i in range(5)}
        d["kappa"] = self.kappa
        d.update({f"mu{i + 1}": m for i, m in enumerate(self.mu)})
        d["w_coeff_wx"] = self.w_coeff_wx
        d["w_coeff_yw"] = self.w_coeff_yw
        d["p_coeff"] = self.p_coeff
        d["kappa_tilde"] = self.kappa_tilde
        if self.mu_tilde is not None:
            d.update({f"mu_tilde{i + 1}": m for i, m in enumerate(self.mu_tilde)})
        return d


def presentation_constants(a: AWConstants, p: ParameterSet) -> PresentationConstants:
    """sigma, kappa and mu, plus the rescaled ``p``-form values when they exist."""
    q2 = p.q2
    t0, t1, t2, t3, t4 = p.tau
    if t1 == t2:
        raise DegenerateParametersError("tau1 = tau2: Z cannot be expressed through W")
    d = t1 - t2
    sigma1 = 2 / d
    sigma2 = (t1 + t2) / (t2 - t1)
    sigma3 = 2 * t3 / (t2 - t1)
    sigma4 = 2 * t4 / (t2 - t1)
    sigma0 = 2 * t0 / (t2 - t1)
    kappa = 2 * (q2 * t1 + t2) * (t1 + q2 * t2) / (d * q2)
    tt = t1 * t2
    mu = (
        2 * (tt * a.a1 + t2 * t3 + t1 * t3) / d,
        2 * (tt * a.a2 + t2 * t4 + t1 * t4) / d,
        2 * (t2 * t0 + t1 * t0 + t4 * t3 + tt * a.a3) / d,
        2 * (t4 * t4 + tt * a.a4) / d,
        2 * (tt * a.a5 + t4 * t0) / d,
        2 * (t3 * t3 + tt * a.a6) / d,
        2 * (t3 * t0 + tt * a.a7) / d,
    )
    p_coeff = kappa_t = mu_t = None
    if t1 != 0:
        p_coeff = -t2 / t1
    if sigma2 != 1:
        kappa_t = kappa / (1 - sigma2)
        mu_t = tuple(m / (1 - sigma2) for m in mu)
    return PresentationConstants(
        sigma0, sigma1, sigma2, sigma3, sigma4, kappa, mu, sigma4, sigma3, p_coeff, kappa_t, mu_t
    )


def presentation_templates(c: PresentationConstants, p: ParameterSet, with_w_terms: bool = True) -> list[RelationTemplate]:
    """The relations for ``[X, Y]``, ``[W, X]`` and ``[Y, W]`` with all constants filled in.

    ``with_w_terms=False`` drops the linear ``W`` terms, reproducing the
    relations exactly as displayed (these fail unless ``tau3 = tau4 = 0``).
    """
    t0, t1, t2, t3, t4 = p.tau
    x, y, w = Expr.sym("X"), Expr.sym("Y"), Expr.sym("W")
    m1, m2, m3, m4, m5, m6, m7 = c.mu
    wx = c.w_coeff_wx if with_w_terms else 0
    yw = c.w_coeff_yw if with_w_terms else 0
    alphabet = ("X", "Y", "W")
    return [
        RelationTemplate(
            "z3-XY", alphabet,
            comm(x, y) - (c.sigma1 * w + c.sigma2 * anti(x, y) + c.sigma3 * x + c.sigma4 * y + c.sigma0),
        ),
        RelationTemplate(
            "z3-WX", alphabet,
            comm(w, x) - (c.sigma2 * anti(w, x) + c.kappa * x * y * x + m1 * x * x + m2 * anti(x, y)
                          + m3 * x + m4 * y + m5 + wx * w),
        ),
        RelationTemplate(
            "z3-YW", alphabet,
            comm(y, w) - (c.sigma2 * anti(w, y) + c.kappa * y * x * y + m1 * anti(x, y) + m2 * y * y
                          + m3 * y + m6 * x + m7 + yw * w),
        ),
    ]


def p_form_templates(c: PresentationConstants, p: ParameterSet, with_w_terms: bool = True) -> list[RelationTemplate]:
    """``XY - p YX``, ``WX - p XW`` and ``YW - p WY`` relations."""
    if c.p_coeff is None or c.mu_tilde is None:
        raise DegenerateParametersError("p-form needs tau1 != 0 and sigma2 != 1")
    t0, t1, t2, t3, t4 = p.tau
    pc = c.p_coeff
    k = c.kappa_tilde
    m1, m2, m3, m4, m5, m6, m7 = c.mu_tilde
    scale = 1 / (1 - c.sigma2)
    wx = c.w_coeff_wx * scale if with_w_terms else 0
    yw = c.w_coeff_yw * scale if with_w_terms else 0
    x, y, w = Expr.sym("X"), Expr.sym("Y"), Expr.sym("W")
    alphabet = ("X", "Y", "W")
    return [
        RelationTemplate("p-XY", alphabet, x * y - pc * y * x - (1 / t1) * (w - t3 * x - t4 * y - t0)),
        RelationTemplate(
            "p-WX", alphabet,
            w * x - pc * x * w - (k * x * y * x + m1 * x * x + m2 * anti(x, y) + m3 * x + m4 * y + m5 + wx * w),
        ),
        RelationTemplate(
            "p-YW", alphabet,
            y * w - pc * w * y - (k * y * x * y + m1 * anti(x, y) + m2 * y * y + m3 * y + m6 * x + m7 + yw * w),
        ),
    ]


def presentation_fit_templates() -> list[RelationTemplate]:
    """``[W, X]`` and ``[Y, W]`` with every coefficient unknown (shared names where the displayed relations share them)."""
    x, y, w = Expr.sym("X"), Expr.sym("Y"), Expr.sym("W")
    u = Expr.unknown
    alphabet = ("X", "Y", "W")
    return [
        RelationTemplate(
            "z3-WX", alphabet,
            comm(w, x) - (u("sigma2") * anti(w, x) + u("kappa") * x * y * x + u("mu1") * x * x
                          + u("mu2") * anti(x, y) + u("mu3") * x + u("mu4") * y + u("mu5") + u("w_coeff_wx") * w),
        ),
        RelationTemplate(
            "z3-YW", alphabet,
            comm(y, w) - (u("sigma2") * anti(w, y) + u("kappa") * y * x * y + u("mu1") * anti(x, y)
                          + u("mu2") * y * y + u("mu3") * y + u("mu6") * x + u("mu7") + u("w_coeff_yw") * w),
        ),
    ]


# ---------------------------------------------------------------------------
# special choices of tau
# ---------------------------------------------------------------------------


def special_tau(p: ParameterSet, case: str) -> tuple[Fraction, ...]:
    """tau adjusted to a special case, keeping the free entries of ``p.tau``.

    ``case-i``: tau2 = -q^2 tau1, tau4 = 0, tau3 = tau1 (q^-2 - 1)(q^2 + xi1 xi2 xi3 xi4).
    ``case-ii``: the same with tau1 and tau2 exchanged.
    ``kappa-zero``: tau2 = -q^2 tau1 only.
    """
    q2 = p.q2
    s = p.xi_product
    t0, t1, t2, t3, t4 = p.tau
    if case == "case-i":
        return (t0, t1, -q2 * t1, t1 * (1 / q2 - 1) * (q2 + s), Fraction(0))
    if case == "case-ii":
        return (t0, -q2 * t2, t2, t2 * (1 / q2 - 1) * (q2 + s), Fraction(0))
    if case == "kappa-zero":
        return (t0, t1, -q2 * t1, t3, t4)
    if case == "generic":
        return p.tau
    raise InvalidInputError(f"unknown specialization {case!r}")


SPECIALIZATIONS = ("generic", "case-i", "case-ii", "kappa-zero")
