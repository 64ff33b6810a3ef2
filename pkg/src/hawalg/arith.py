"""Exact univariate arithmetic in the lattice variable ``z``.

Scalars are :class:`fractions.Fraction`.  A :class:`Polynomial` keeps integer
numerators over one shared positive denominator, which keeps products and
sums in integer arithmetic; gcds use a primitive pseudo-remainder sequence.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Mapping

from .errors import InvalidInputError, NotInImageError

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"not a rational: {value!r}") from exc
    raise InvalidInputError(f"not an exact rational: {value!r}")


def rational_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _content(nums: Iterable[int]) -> int:
    g = 0
    for a in nums:
        g = gcd(g, a)
        if g == 1:
            return 1
    return g


def _trim(nums: list[int]) -> list[int]:
    while nums and nums[-1] == 0:
        nums.pop()
    return nums


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------


class Polynomial:
    """Univariate polynomial over Q, stored as ``nums / den`` (ints, den > 0).

    ``nums[i]`` is the numerator of the coefficient of ``z**i``.  The pair is
    kept canonical (no trailing zeros, ``gcd(content, den) == 1``) so that
    ``==`` is structural.
    """

    __slots__ = ("nums", "den")

    def __init__(self, coeffs: Iterable = ()):
        fr = [as_rational(c) for c in coeffs]
        d = 1
        for c in fr:
            d = lcm(d, c.denominator)
        nums = [c.numerator * (d // c.denominator) for c in fr]
        self._set(nums, d)

    def _set(self, nums: list[int], den: int) -> None:
        nums = _trim(nums)
        if not nums:
            self.nums, self.den = (), 1
            return
        if den < 0:
            nums = [-a for a in nums]
            den = -den
        g = gcd(_content(nums), den)
        if g != 1:
            nums = [a // g for a in nums]
            den //= g
        self.nums, self.den = tuple(nums), den

    @classmethod
    def _raw(cls, nums: list[int], den: int = 1) -> "Polynomial":
        p = cls.__new__(cls)
        p._set(nums, den)
        return p

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw([], 1)

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw([1], 1)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = as_rational(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, n: int, c=1) -> "Polynomial":
        if n < 0:
            raise InvalidInputError("negative exponent in Polynomial.monomial")
        c = as_rational(c)
        return cls._raw([0] * n + [c.numerator], c.denominator)

    # basic properties -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.nums)

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.nums):
            return Fraction(self.nums[i], self.den)
        return Fraction(0)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.nums) - 1

    def is_zero(self) -> bool:
        return not self.nums

    def is_constant(self) -> bool:
        return len(self.nums) <= 1

    @property
    def lead(self) -> Fraction:
        if not self.nums:
            return Fraction(0)
        return Fraction(self.nums[-1], self.den)

    def low_order(self) -> int:
        """Exponent of the lowest nonzero term (0 for the zero polynomial)."""
        for i, a in enumerate(self.nums):
            if a:
                return i
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nums, self.den))

    def __bool__(self) -> bool:
        return bool(self.nums)

    # ring operations --------------------------------------------------------
    def __neg__(self) -> "Polynomial":
        return Polynomial._raw([-a for a in self.nums], self.den)

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.constant(other)
            else:
                return NotImplemented
        if not other.nums:
            return self
        if not self.nums:
            return other
        L = lcm(self.den, other.den)
        fa, fb = L // self.den, L // other.den
        a, b = self.nums, other.nums
        if len(a) < len(b):
            a, b, fa, fb = b, a, fb, fa
        out = [x * fa for x in a]
        for i, y in enumerate(b):
            out[i] += y * fb
        return Polynomial._raw(out, L)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            if not c or not self.nums:
                return Polynomial.zero()
            return Polynomial._raw([a * c.numerator for a in self.nums], self.den * c.denominator)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.nums, other.nums
        if not a or not b:
            return Polynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial._raw(out, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise InvalidInputError("negative power of a polynomial")
        result, base = Polynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_degree(self, k: int) -> "Polynomial":
        """Multiply by ``z**k`` (k >= 0)."""
        if k < 0:
            raise InvalidInputError("negative shift")
        if not self.nums or k == 0:
            return self
        return Polynomial._raw([0] * k + list(self.nums), self.den)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise InvalidInputError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial.zero(), self
        # Work with integer numerators: self = A/da, other = B/db.
        A = list(self.nums)
        B = other.nums
        lb = B[-1]
        db = other.degree
        quot = [Fraction(0)] * (len(A) - db)
        rem = [Fraction(a) for a in A]
        for i in range(len(A) - 1, db - 1, -1):
            c = rem[i]
            if c:
                t = c / lb
                quot[i - db] = t
                for j in range(db + 1):
                    rem[i - db + j] -= t * B[j]
        # quotient = (A/da)/(B/db) = quot * db_den / da
        qpoly = Polynomial(quot) * Fraction(other.den, self.den)
        rpoly = Polynomial(rem[:db]) * Fraction(1, self.den)
        return qpoly, rpoly

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InvalidInputError("polynomial division is not exact")
        return q

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def monic(self) -> "Polynomial":
        if not self.nums:
            return self
        return Polynomial._raw(list(self.nums), self.nums[-1])

    def scale_var(self, c) -> "Polynomial":
        """Return ``p(c*z)``."""
        c = as_rational(c)
        if c == 1 or len(self.nums) <= 1:
            return self
        n = len(self.nums) - 1
        cn, cd = c.numerator, c.denominator
        out = []
        pn = 1
        pd = cd ** n
        for a in self.nums:
            out.append(a * pn * pd)
            pn *= cn
            pd //= cd
        return Polynomial._raw(out, self.den * cd ** n)

    def reversed_poly(self, n: int | None = None) -> "Polynomial":
        """Return ``z**n * p(1/z)`` (default ``n = degree``)."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise InvalidInputError("reversal degree below polynomial degree")
        if not self.nums:
            return self
        padded = list(self.nums) + [0] * (n + 1 - len(self.nums))
        return Polynomial._raw(padded[::-1], self.den)

    def __call__(self, x):
        x = as_rational(x)
        acc = Fraction(0)
        for a in reversed(self.nums):
            acc = acc * x + a
        return acc / self.den

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return _format_terms(((i, c) for i, c in enumerate(self.coeffs)), "z")


def _int_primitive(nums: list[int]) -> list[int]:
    g = _content(nums)
    if g > 1:
        nums = [a // g for a in nums]
    if nums and nums[-1] < 0:
        nums = [-a for a in nums]
    return nums


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials, content stripped as it goes."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= lr * y
        r.pop()
        _trim(r)
        if r:
            g = _content(r)
            if g > 1:
                r = [x // g for x in r]
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero iff both inputs are zero)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return Polynomial.one()
    x = _int_primitive(list(a.nums))
    y = _int_primitive(list(b.nums))
    if len(x) < len(y):
        x, y = y, x
    while y:
        if len(y) == 1:
            return Polynomial.one()
        r = _int_prem(x, y)
        x, y = y, _int_primitive(r) if r else []
    return Polynomial._raw(x, x[-1])


def _format_terms(items, var: str) -> str:
    parts = []
    for e, c in sorted(items, key=lambda t: -t[0]):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if e == 0:
            body = rational_str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{rational_str(mag)}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials and x-polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse Laurent polynomial ``sum c_k z**k``; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[int(k)] = c
        self.terms: dict[int, Fraction] = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls({k: c})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, k: int) -> Fraction:
        return self.terms.get(k, Fraction(0))

    @property
    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    @property
    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({k: c * other for k, c in self.terms.items()})
        out: dict[int, Fraction] = {}
        for k, a in self.terms.items():
            for m, b in other.terms.items():
                out[k + m] = out.get(k + m, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def scale_var(self, c) -> "LaurentPoly":
        """Return ``f(c*z)``."""
        c = as_rational(c)
        return LaurentPoly({k: a * c**k for k, a in self.terms.items()})

    def invert_var(self) -> "LaurentPoly":
        """Return ``f(1/z)``."""
        return LaurentPoly({-k: a for k, a in self.terms.items()})

    def is_palindromic(self) -> bool:
        return all(self.terms.get(-k) == c for k, c in self.terms.items())

    def to_rational_function(self) -> "RationalFunction":
        lo = min(self.min_exp, 0)
        num = Polynomial.zero()
        if self.terms:
            width = self.max_exp - lo + 1
            coeffs = [Fraction(0)] * width
            for k, c in self.terms.items():
                coeffs[k - lo] = c
            num = Polynomial(coeffs)
        return RationalFunction._unsafe(num, Polynomial.monomial(-lo))

    def __call__(self, x):
        x = as_rational(x)
        return sum((c * x**k for k, c in self.terms.items()), Fraction(0))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return _format_terms(self.terms.items(), "z")


class XPolynomial:
    """Polynomial in ``x = z + 1/z``; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, n: int, c=1) -> "XPolynomial":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return XPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> "XPolynomial":
        return XPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "XPolynomial") -> "XPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "XPolynomial":
        if isinstance(other, (int, Fraction)):
            return XPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return XPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return XPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"XPolynomial({self})"

    def __str__(self) -> str:
        return _format_terms(enumerate(self.coeffs), "x")


def _x_power_laurent(n: int) -> dict[int, int]:
    # (z + 1/z)^n = sum_j C(n, j) z^(n - 2j)
    return {n - 2 * j: comb(n, j) for j in range(n + 1)}


def x_to_laurent(p: XPolynomial) -> LaurentPoly:
    """Substitute ``x = z + 1/z`` and expand."""
    out: dict[int, Fraction] = {}
    for n, c in enumerate(p.coeffs):
        if c:
            for k, b in _x_power_laurent(n).items():
                out[k] = out.get(k, 0) + c * b
    return LaurentPoly(out)


def laurent_to_x(f: LaurentPoly) -> XPolynomial:
    """Inverse of :func:`x_to_laurent`.

    Peels off the top symmetric pair ``c (z^n + z^-n)`` by subtracting
    ``c x^n``; raises :class:`NotInImageError` for non-palindromic input.
    """
    if not f.is_palindromic():
        raise NotInImageError(f"Laurent polynomial is not palindromic: {f}")
    rest = dict(f.terms)
    top = max(rest) if rest else -1
    coeffs = [Fraction(0)] * (top + 1)
    for n in range(top, -1, -1):
        c = rest.get(n)
        if not c:
            continue
        coeffs[n] = c
        for k, b in _x_power_laurent(n).items():
            v = rest.get(k, 0) - c * b
            if v:
                rest[k] = v
            else:
                rest.pop(k, None)
    if rest:  # pragma: no cover - palindromic input always clears
        raise NotInImageError(f"residual after x-conversion: {rest}")
    return XPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Reduced quotient ``num/den`` of polynomials in ``z``; ``den`` is monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | object = 0, den: Polynomial | object = 1):
        num = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        den = den if isinstance(den, Polynomial) else Polynomial.constant(den)
        if den.is_zero():
            raise InvalidInputError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, Polynomial.one()
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lead
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _unsafe(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        # Caller guarantees coprime and monic.
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._unsafe(Polynomial.constant(c), Polynomial.one())

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        return cls._unsafe(p, Polynomial.one())

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> "RationalFunction":
        return f.to_rational_function()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise InvalidInputError("rational function is not constant")
        return self.num.coeff(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RationalFunction.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._unsafe(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1 == d2:
            t = n1 + n2
            if t.is_zero():
                return RationalFunction._unsafe(t, Polynomial.one())
            if d1.degree == 0:
                return RationalFunction._unsafe(t, d1)
            g = poly_gcd(t, d1)
            if g.degree == 0:
                return RationalFunction._unsafe(t, d1)
            return RationalFunction._unsafe(t.exact_div(g), d1.exact_div(g))
        # Henrici addition: only the gcd of the denominators can cancel.
        g = poly_gcd(d1, d2)
        if g.degree == 0:
            t = n1 * d2 + n2 * d1
            return RationalFunction._unsafe(t, d1 * d2) if not t.is_zero() else RationalFunction()
        d1g, d2g = d1.exact_div(g), d2.exact_div(g)
        t = n1 * d2g + n2 * d1g
        if t.is_zero():
            return RationalFunction()
        g2 = poly_gcd(t, g)
        if g2.degree > 0:
            t = t.exact_div(g2)
            g = g.exact_div(g2)
        return RationalFunction._unsafe(t, d1g * d2g * g)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            if not c:
                return RationalFunction()
            return RationalFunction._unsafe(self.num * c, self.den)
        if isinstance(other, Polynomial):
            other = RationalFunction.from_poly(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction()
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d2.degree > 0 and n1.degree > 0:
            g = poly_gcd(n1, d2)
            if g.degree > 0:
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if d1.degree > 0 and n2.degree > 0:
            g = poly_gcd(n2, d1)
            if g.degree > 0:
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        return RationalFunction._unsafe(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise InvalidInputError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            if not c:
                raise InvalidInputError("division by zero")
            return self * (1 / c)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.constant(other) * self.inverse()

    def eval_shift(self, c) -> "RationalFunction":
        """Return ``f(c*z)``; ``c`` must be nonzero."""
        return rf_eval_shift(self, c)

    def invert_var(self) -> "RationalFunction":
        """Return ``f(1/z)``."""
        dn, dd = self.num.degree, self.den.degree
        n = max(dn, dd, 0)
        num = self.num.reversed_poly(n) if not self.num.is_zero() else self.num
        den = self.den.reversed_poly(n)
        return RationalFunction(num, den)

    def to_laurent(self) -> LaurentPoly:
        """Convert to a LaurentPoly when the denominator is a power of ``z``."""
        d = self.den
        if d.nums != (0,) * d.degree + (1,) or d.den != 1:
            raise NotInImageError(f"denominator {d} is not a monomial")
        k = d.degree
        return LaurentPoly({i - k: c for i, c in enumerate(self.num.coeffs) if c})

    def to_xpoly(self) -> XPolynomial:
        return laurent_to_x(self.to_laurent())

    def __call__(self, x):
        x = as_rational(x)
        d = self.den(x)
        if not d:
            raise InvalidInputError("evaluation at a pole")
        return self.num(x) / d

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


def rf_reduce(n: Polynomial, d: Polynomial) -> RationalFunction:
    """Canonical reduced form of ``n/d`` with monic denominator."""
    if d.is_zero():
        raise InvalidInputError("zero denominator")
    return RationalFunction(n, d)


def rf_eval_shift(f: RationalFunction, q2k) -> RationalFunction:
    """Return ``f(q2k * z)`` in reduced form."""
    c = as_rational(q2k)
    if not c:
        raise InvalidInputError("shift factor must be nonzero")
    if c == 1 or f.num.is_zero():
        return f
    num = f.num.scale_var(c)
    den = f.den.scale_var(c)
    # scaling the variable preserves coprimality; only renormalize
    lc = den.lead
    if lc != 1:
        num = num * (1 / lc)
        den = den * (1 / lc)
    return RationalFunction._unsafe(num, den)


Z = Polynomial.monomial(1)
