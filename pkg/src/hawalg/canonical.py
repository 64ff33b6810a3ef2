"""Affine change of HAW generators that removes the ``X^3``, ``X^2`` and ``{X, W}`` terms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateParametersError, InvalidInputError
from .operators import ParameterSet
from .relations import FitResult
from .shiftop import ShiftOperator
from .structure import HAWConstants, fit_haw_constants


@dataclass(frozen=True)
class CanonicalForm:
    alpha0: Fraction
    beta0: Fraction
    beta2: Fraction
    X: ShiftOperator
    W: ShiftOperator
    constants: HAWConstants
    fit: FitResult

    def vanishing_terms(self) -> dict[str, Fraction]:
        """Coefficients that the canonical form must kill."""
        c = self.constants
        return {"e1": c.e1, "b1": c.b1, "b2": c.b2, "e3": c.e3, "b1p": c.b1p}


B1_READINGS = ("corrected", "printed")


def canonical_shifts(h: HAWConstants, p: ParameterSet, b1_reading: str = "corrected") -> tuple[Fraction, Fraction, Fraction]:
    """``(alpha0, beta0, beta2)`` making the transformed ``e1``, ``b1`` and ``b2`` vanish.

    Expanding the first relation in the new generators gives
    ``b1~ = b1 - 2 beta2 b2 + 3 alpha0 (rho beta2 - e1) - rho beta0``.
    ``b1_reading="printed"`` uses ``+2 beta2 b2`` instead; the two agree
    only when ``e1 b2 = 0``.
    """
    if b1_reading not in B1_READINGS:
        raise InvalidInputError(f"b1_reading must be one of {B1_READINGS}")
    rho = p.rho
    if rho == 0:
        raise DegenerateParametersError("rho = 0 has no canonical form here")
    beta2 = h.e1 / rho
    alpha0 = h.b2 / rho
    sign = -2 if b1_reading == "corrected" else 2
    beta0 = (h.b1 + sign * beta2 * h.b2 + 3 * alpha0 * (rho * beta2 - h.e1)) / rho
    return alpha0, beta0, beta2


def canonical_transform(
    h: HAWConstants, p: ParameterSet, X: ShiftOperator, W: ShiftOperator, b1_reading: str = "corrected"
) -> CanonicalForm:
    """Shift to ``X~ = X + alpha0``, ``W~ = W + beta2 X + beta0`` and refit all constants."""
    alpha0, beta0, beta2 = canonical_shifts(h, p, b1_reading)
    q = p.q
    Xt = X + ShiftOperator.scalar(q, alpha0)
    Wt = W + X.scale(beta2) + ShiftOperator.scalar(q, beta0)
    constants, fit = fit_haw_constants(q, {"X": Xt, "W": Wt})
    return CanonicalForm(alpha0, beta0, beta2, Xt, Wt, constants, fit)


def geometric_spectrum(values: Sequence[Fraction], q) -> tuple[Fraction, Fraction] | None:
    """``(c1, c2)`` with ``values[n] = c1 q^(2n) + c2 q^(-2n)`` for every ``n``, or ``None``."""
    q2 = Fraction(q) ** 2
    if len(values) < 2 or q2 * q2 == 1:
        return None
    l0, l1 = Fraction(values[0]), Fraction(values[1])
    # c1 + c2 = l0, c1 q2 + c2 / q2 = l1
    c1 = (l1 - l0 / q2) / (q2 - 1 / q2)
    c2 = l0 - c1
    for n, v in enumerate(values):
        if c1 * q2**n + c2 / q2**n != v:
            return None
    return c1, c2


def spectrum_identities(values: Sequence[Fraction], q, b4) -> list[str]:
    """Failures of ``l_n^2 + l_{n+1}^2 - (q^2+q^-2) l_n l_{n+1} = b4`` and of the linear recurrence."""
    q2 = Fraction(q) ** 2
    s = q2 + 1 / q2
    bad = []
    for n in range(len(values) - 1):
        a, b = values[n], values[n + 1]
        if a * a + b * b - s * a * b != b4:
            bad.append(f"quadratic identity fails at n={n}")
    for n in range(1, len(values) - 1):
        if values[n + 1] + values[n - 1] - s * values[n] != 0:
            bad.append(f"linear recurrence fails at n={n}")
    return bad
