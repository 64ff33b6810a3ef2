"""Parse x-polynomials written as text, e.g. ``"x^2 - 3/2*x + 1"``."""

from __future__ import annotations

import re
from fractions import Fraction

from .arith import XPolynomial
from .errors import InvalidInputError

_TERM = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?:
        (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?(?P<var1>x(?:\s*(?:\^|\*\*)\s*(?P<exp1>\d+))?)?
      | (?P<var2>x(?:\s*(?:\^|\*\*)\s*(?P<exp2>\d+))?)
    )
    \s*
    """,
    re.VERBOSE,
)


def parse_xpolynomial(text: str) -> XPolynomial:
    """Read a polynomial in ``x`` with rational coefficients.

    Terms are ``c``, ``c*x^k``, ``c x^k``, ``x^k`` or ``x`` joined by ``+``/``-``;
    ``**`` works as well as ``^``.
    """
    s = text.strip()
    if not s:
        raise InvalidInputError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise InvalidInputError(f"cannot parse polynomial near {s[pos:]!r}")
        if m.group("coef") is None and m.group("var2") is None:
            raise InvalidInputError(f"dangling sign near {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            try:
                c = Fraction(m.group("coef"))
            except ZeroDivisionError as exc:
                raise InvalidInputError(f"zero denominator in {m.group('coef')!r}") from exc
            var, exp = m.group("var1"), m.group("exp1")
        else:
            c, var, exp = Fraction(1), m.group("var2"), m.group("exp2")
        k = 0 if var is None else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
        pos = m.end()
        first = False
    top = max(coeffs)
    return XPolynomial([coeffs.get(k, 0) for k in range(top + 1)])
