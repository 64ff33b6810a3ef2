"""Closed-form HAW structure constants of the image ``W = tau1 XY + tau2 YX + tau3 X + tau4 Y + tau0``.

The constants are expressed through the AW constants ``a1..a7``, the ``tau``
and the Casimir value ``omega``.  A few lines of the published table are
ambiguous or misprinted; each such line carries a set of named readings in
:data:`READINGS`, and :func:`resolve_readings` decides which one agrees with
a fitted :class:`HAWConstants`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping

from .arith import as_rational
from .errors import DegenerateParametersError, InvalidInputError
from .operators import ParameterSet
from .structure import AWConstants, HAWConstants, HAW_NAMES


@dataclass(frozen=True)
class Reading:
    """One interpretation of an ambiguous table line."""

    name: str
    note: str


# line -> readings; the first entry is the literal (as printed) one
READINGS: dict[str, tuple[Reading, ...]] = {
    "b3": (
        Reading("minus", "'+ - tau3 a4' read as -tau3 a4"),
        Reading("plus", "stray minus dropped: +tau3 a4"),
    ),
    "b6": (
        Reading("q-minus-inverse", "tau0^2 coefficient (q - q^-1)^2"),
        Reading("literal-q-minus-1", "tau0^2 coefficient rendered as (q - q - 1)^2 = 1"),
    ),
    "b7": (
        Reading("q2-plus-q-inverse", "factor (q^2 + q^-1 - 1)"),
        Reading("q2-plus-q-inverse-squared", "factor (q^2 + q^-2 - 1)"),
    ),
    "e2": (
        Reading("minus-tau3-squared", "last term -(q - q^-1)^2 tau3^2"),
        Reading("plus-tau3-squared", "last term +(q - q^-1)^2 tau3^2"),
    ),
    "e4": (
        Reading("plus", "missing joiner before the a2 a6 term read as +"),
        Reading("minus", "missing joiner before the a2 a6 term read as -"),
    ),
}

PRINTED: dict[str, str] = {line: rs[0].name for line, rs in READINGS.items()}

# readings that pass verification on every parameter set we have tried
RESOLVED: dict[str, str] = {
    "b3": "minus",
    "b6": "q-minus-inverse",
    "b7": "q2-plus-q-inverse-squared",
    "e2": "plus-tau3-squared",
    "e4": "plus",
}


def _choice(readings: Mapping[str, str], line: str) -> str:
    name = readings.get(line, RESOLVED[line])
    if name not in {r.name for r in READINGS[line]}:
        raise InvalidInputError(f"unknown reading {name!r} for line {line}")
    return name


def appendixA_constants(
    a: AWConstants, p: ParameterSet, omega, readings: Mapping[str, str] | None = None
) -> HAWConstants:
    """HAW constants of the image of the homomorphism.

    ``readings`` selects an interpretation per ambiguous line (see
    :data:`READINGS`); lines not mentioned use :data:`RESOLVED`.  Pass
    :data:`PRINTED` to evaluate the table literally.
    """
    readings = dict(readings or {})
    unknown = set(readings) - set(READINGS)
    if unknown:
        raise InvalidInputError(f"no alternative readings for {sorted(unknown)}")
    q = p.q
    qi = 1 / q
    q2, qi2 = q * q, qi * qi
    s = q2 + qi2
    if q - qi == 0 or s == 0 or s + 1 == 0:
        raise DegenerateParametersError("table denominators vanish")
    om = as_rational(omega)
    t0, t1, t2, t3, t4 = p.tau
    a1, a2, a3, a4, a5, a6, a7 = a.a1, a.a2, a.a3, a.a4, a.a5, a.a6, a.a7
    T = t1 + t2
    dq2 = (q - qi) ** 2
    Pq = (t1 + q2 * t2) * (t1 + qi2 * t2)

    b3_sign = -1 if _choice(readings, "b3") == "minus" else 1
    b6_c = dq2 if _choice(readings, "b6") == "q-minus-inverse" else Fraction(1)
    b7_c = q2 + qi - 1 if _choice(readings, "b7") == "q2-plus-q-inverse" else s - 1
    e2_sign = -1 if _choice(readings, "e2") == "minus-tau3-squared" else 1
    e4_sign = 1 if _choice(readings, "e4") == "plus" else -1

    b1 = T * a3 - dq2 * t0 + t4 * a1 - 2 * t3 * a2
    b3 = T * a5 + b3_sign * t3 * a4 + t4 * a3 - 2 * t0 * a2
    b5 = -t0 * a4 + t4 * a5
    e1 = T * a1 - dq2 * t3
    b1p = (T * a2 + t4) * a1 - s * t3 * a2 + T * a3 - dq2 * t0
    b3p = T * a4 * a1 - 2 * t0 * a2 + t4 * a3 + (1 - s) * t3 * a4 + t1 * a5 + a5 * t2
    b6 = (
        t1 * t2 * (-a1 * a2 * a3 + a2 * a2 * a6 - a3 * a3 + a4 * a6 - s * a1 * a5 + (q + qi) ** 2 * a2 * a7)
        + T * (-2 * t0 * a1 * a2 - t3 * a1 * a4 + t4 * a2 * a6 - 2 * t0 * a3 - s * t3 * a5 + (q + qi) ** 2 * t4 * a7)
        - 2 * t0 * t4 * a1 + t4 * t4 * a6 + s * (2 * t0 * t3 * a2 - t3 * t4 * a3)
        + (s - 1) * t3 * t3 * a4 + b6_c * t0 * t0
        - Pq * om
    )
    b7 = (
        t1 * t2 * (-a1 * a2 * a5 - om * a2 - a3 * a5 + a4 * a7)
        - T * (t0 * a1 * a4 + t0 * a5 + om * t4)
        + t0 * t0 * a2 - t0 * t4 * a3 + t4 * t4 * a7 + b7_c * t3 * (t0 * a4 - t4 * a5)
    )
    e2 = s * (-t1 * t2 * a1 * a1 - 2 * t3 * T * a1 + Pq * a6 + e2_sign * dq2 * t3 * t3)
    e3 = (s + 1) * (T * a1 - dq2 * t3)
    e4 = (
        -t1 * t2 * a2 * a1 * a1 - 2 * T * t3 * a1 * a2
        - (1 + s) * (t1 * t2 * a1 * a3 + T * t0 * a1 + t3 * t4 * a1)
        + e4_sign * (t1 * t1 + (1 + 2 * s) * t1 * t2 + t2 * t2) * a2 * a6
        + (2 * s - 1) * t3 * t3 * a2
        + (1 + s) * (T * (-t3 * a3 + t4 * a6) + Pq * a7 + dq2 * t3 * t0)
    )
    return HAWConstants(
        e1=e1, e2=e2, e3=e3, e4=e4,
        b1=b1, b2=a2, b3=b3, b4=a4, b5=b5, b6=b6, b7=b7,
        b1p=b1p, b3p=b3p,
    )


def constant_diff(expected: HAWConstants, fitted: HAWConstants) -> list[dict]:
    """Term-by-term mismatches as ``{term, expected, fitted}`` records."""
    out = []
    for name in HAW_NAMES:
        e, f = getattr(expected, name), getattr(fitted, name)
        if e != f:
            out.append({"term": name, "expected": str(e), "fitted": str(f)})
    return out


def resolve_readings(a: AWConstants, p: ParameterSet, omega, fitted: HAWConstants) -> dict[str, list[str]]:
    """For each ambiguous line, the readings that reproduce ``fitted``.

    Every combination of readings is tried, so a line whose outcome depends
    on another line's choice is still resolved correctly.  A line is uniquely
    resolved when its list has exactly one entry.
    """
    lines = list(READINGS)
    ok: dict[str, set[str]] = {line: set() for line in lines}
    for combo in product(*(READINGS[line] for line in lines)):
        choice = {line: r.name for line, r in zip(lines, combo)}
        if not constant_diff(appendixA_constants(a, p, omega, choice), fitted):
            for line, name in choice.items():
                ok[line].add(name)
    return {line: sorted(ok[line]) for line in lines}
