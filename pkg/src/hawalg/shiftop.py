"""q-difference operators in normal form ``sum_k c_k(z) T^k`` with ``T f(z) = f(q^2 z)``."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import LaurentPoly, RationalFunction, as_rational, rf_eval_shift
from .errors import InvalidInputError


class ShiftOperator:
    """Finite sum of rational-function multiples of integer powers of ``T``.

    Immutable; ``terms`` never holds a zero coefficient.  ``q`` travels with
    the operator and is checked on every binary operation.
    """

    __slots__ = ("q", "terms")

    def __init__(self, q, terms: Mapping[int, RationalFunction] | None = None):
        q = as_rational(q)
        if q == 0:
            raise InvalidInputError("q must be nonzero")
        self.q = q
        self.terms: dict[int, RationalFunction] = {
            int(k): c for k, c in sorted((terms or {}).items()) if not c.is_zero()
        }

    @classmethod
    def identity(cls, q) -> "ShiftOperator":
        return cls(q, {0: RationalFunction.constant(1)})

    @classmethod
    def zero(cls, q) -> "ShiftOperator":
        return cls(q, {})

    @classmethod
    def scalar(cls, q, c) -> "ShiftOperator":
        return cls(q, {0: RationalFunction.constant(c)})

    @classmethod
    def multiplication(cls, q, f: RationalFunction) -> "ShiftOperator":
        return cls(q, {0: f})

    @classmethod
    def shift(cls, q, k: int = 1) -> "ShiftOperator":
        return cls(q, {k: RationalFunction.constant(1)})

    def coeff(self, k: int) -> RationalFunction:
        return self.terms.get(k, RationalFunction())

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(self.terms)

    def _check(self, other: "ShiftOperator") -> None:
        if not isinstance(other, ShiftOperator):
            raise InvalidInputError(f"expected a ShiftOperator, got {type(other).__name__}")
        if other.q != self.q:
            raise InvalidInputError(f"mismatched q: {self.q} vs {other.q}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.q, tuple(self.terms.items())))

    def __add__(self, other: "ShiftOperator") -> "ShiftOperator":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return ShiftOperator(self.q, out)

    def __neg__(self) -> "ShiftOperator":
        return ShiftOperator(self.q, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ShiftOperator") -> "ShiftOperator":
        return self + (-other)

    def scale(self, c) -> "ShiftOperator":
        c = as_rational(c)
        if not c:
            return ShiftOperator.zero(self.q)
        return ShiftOperator(self.q, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return op_compose(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other: "ShiftOperator") -> "ShiftOperator":
        return op_compose(self, other)

    def __call__(self, f: LaurentPoly) -> RationalFunction:
        return op_apply(self, f)

    def __repr__(self) -> str:
        body = " + ".join(f"[{c}]*T^({k})" for k, c in self.terms.items()) or "0"
        return f"ShiftOperator(q={self.q}: {body})"


def op_apply(A: ShiftOperator, f: LaurentPoly) -> RationalFunction:
    """``sum_k c_k(z) f(q^(2k) z)`` as a reduced rational function."""
    q2 = A.q * A.q
    acc = RationalFunction()
    for k, c in A.terms.items():
        shifted = f.scale_var(q2**k)
        acc = acc + c * shifted.to_rational_function()
    return acc


def op_compose(A: ShiftOperator, B: ShiftOperator) -> ShiftOperator:
    """Normal form of ``A o B``: ``(a T^k)(b T^m) = a(z) b(q^(2k) z) T^(k+m)``."""
    A._check(B)
    q2 = A.q * A.q
    out: dict[int, RationalFunction] = {}
    for k, a in A.terms.items():
        factor = q2**k
        for m, b in B.terms.items():
            t = a * rf_eval_shift(b, factor)
            s = k + m
            out[s] = out[s] + t if s in out else t
    return ShiftOperator(A.q, out)


def op_word(word: Sequence[ShiftOperator], q=None) -> ShiftOperator:
    """Compose a word left to right; the empty word is the identity."""
    if not word:
        if q is None:
            raise InvalidInputError("empty word needs an explicit q")
        return ShiftOperator.identity(q)
    acc = word[0]
    for op in word[1:]:
        acc = op_compose(acc, op)
    return acc


def op_combine(terms: Iterable[tuple[object, Sequence[ShiftOperator]]], q=None) -> ShiftOperator:
    """``sum scalar * (composition of word)`` in normal form."""
    acc = None
    for scalar, word in terms:
        c = as_rational(scalar)
        op = op_word(word, q if q is not None else (acc.q if acc is not None else None))
        if q is not None and op.q != as_rational(q):
            raise InvalidInputError(f"mismatched q: {op.q} vs {q}")
        term = op.scale(c)
        acc = term if acc is None else acc + term
    if acc is None:
        if q is None:
            raise InvalidInputError("empty combination needs an explicit q")
        return ShiftOperator.zero(q)
    return acc


def commutator(A: ShiftOperator, B: ShiftOperator, qq=None) -> ShiftOperator:
    """``[A, B]`` or, with ``qq`` given, ``[A, B]_qq = qq AB - qq^-1 BA``."""
    if qq is None:
        return op_compose(A, B) - op_compose(B, A)
    qq = as_rational(qq)
    return op_compose(A, B).scale(qq) - op_compose(B, A).scale(1 / qq)


def op_is_zero(A: ShiftOperator) -> bool:
    return not A.terms


def op_is_scalar(A: ShiftOperator) -> Fraction | None:
    """Return ``c`` if ``A == c * identity`` exactly, else ``None``."""
    if not A.terms:
        return Fraction(0)
    if set(A.terms) != {0}:
        return None
    c = A.terms[0]
    return c.constant_value() if c.is_constant() else None
