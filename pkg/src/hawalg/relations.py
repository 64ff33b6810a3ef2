"""Noncommutative relation templates, exact verification and coefficient fitting.

A template is a noncommutative polynomial over a symbol alphabet whose
coefficients are linear forms in named unknowns.  Binding the symbols to
:class:`ShiftOperator` values turns "the template vanishes" into a linear
system over Q, one equation per (shift exponent, power of z) after clearing
denominators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import Polynomial, as_rational, poly_gcd
from .errors import InvalidInputError
from .linalg import solve
from .shiftop import ShiftOperator, op_compose

Word = tuple[str, ...]
_CONST = ""  # key of the known (constant) part of a linear form


# ---------------------------------------------------------------------------
# linear forms and noncommutative polynomials
# ---------------------------------------------------------------------------


def _lin_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + sign * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _lin_scale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _lin_mul(a: dict, b: dict) -> dict:
    if set(a) <= {_CONST}:
        return _lin_scale(b, a.get(_CONST, Fraction(0)))
    if set(b) <= {_CONST}:
        return _lin_scale(a, b.get(_CONST, Fraction(0)))
    raise InvalidInputError("product of two unknown coefficients is not linear")


class Expr:
    """Element of the free algebra on named symbols with linear-form coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Mapping[str, Fraction]] | None = None):
        clean = {}
        for w, lin in (terms or {}).items():
            lin = {k: as_rational(v) for k, v in lin.items() if v}
            if lin:
                clean[tuple(w)] = lin
        self.terms: dict[Word, dict[str, Fraction]] = clean

    @classmethod
    def sym(cls, name: str) -> "Expr":
        return cls({(name,): {_CONST: Fraction(1)}})

    @classmethod
    def const(cls, c) -> "Expr":
        return cls({(): {_CONST: as_rational(c)}})

    @classmethod
    def unknown(cls, name: str, scale=1) -> "Expr":
        if not name:
            raise InvalidInputError("unknown names must be nonempty")
        return cls({(): {name: as_rational(scale)}})

    @staticmethod
    def _lift(other) -> "Expr":
        if isinstance(other, Expr):
            return other
        if isinstance(other, (int, Fraction)):
            return Expr.const(other)
        if isinstance(other, str):
            return Expr.unknown(other)
        raise TypeError(f"cannot use {type(other).__name__} in an Expr")

    def unknowns(self) -> set[str]:
        return {k for lin in self.terms.values() for k in lin if k != _CONST}

    def symbols(self) -> set[str]:
        return {s for w in self.terms for s in w}

    def __add__(self, other) -> "Expr":
        other = Expr._lift(other)
        out = {w: dict(l) for w, l in self.terms.items()}
        for w, lin in other.terms.items():
            out[w] = _lin_add(out.get(w, {}), lin)
        return Expr(out)

    __radd__ = __add__

    def __neg__(self) -> "Expr":
        return Expr({w: _lin_scale(l, Fraction(-1)) for w, l in self.terms.items()})

    def __sub__(self, other) -> "Expr":
        return self + (-Expr._lift(other))

    def __rsub__(self, other) -> "Expr":
        return Expr._lift(other) + (-self)

    def __mul__(self, other) -> "Expr":
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return Expr({w: _lin_scale(l, c) for w, l in self.terms.items()})
        other = Expr._lift(other)
        out: dict[Word, dict] = {}
        for w1, l1 in self.terms.items():
            for w2, l2 in other.terms.items():
                w = w1 + w2
                out[w] = _lin_add(out.get(w, {}), _lin_mul(l1, l2))
        return Expr(out)

    def __rmul__(self, other) -> "Expr":
        return Expr._lift(other) * self

    def __pow__(self, n: int) -> "Expr":
        out = Expr.const(1)
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, values: Mapping[str, object]) -> "Expr":
        out = {}
        for w, lin in self.terms.items():
            new: dict[str, Fraction] = {}
            for k, v in lin.items():
                if k != _CONST and k in values:
                    new = _lin_add(new, {_CONST: v * as_rational(values[k])})
                else:
                    new = _lin_add(new, {k: v})
            out[w] = new
        return Expr(out)

    def __repr__(self) -> str:
        parts = []
        for w, lin in self.terms.items():
            coeff = " + ".join(
                (str(v) if k == _CONST else f"{v}*{k}") for k, v in lin.items()
            )
            parts.append(f"({coeff})*{''.join(w) or 'I'}")
        return " + ".join(parts) or "0"


def comm(a: Expr, b: Expr) -> Expr:
    return a * b - b * a


def qcomm(a: Expr, b: Expr, q) -> Expr:
    """``[a, b]_q = q a b - q^-1 b a``."""
    q = as_rational(q)
    return a * b * q - b * a * (1 / q)


def anti(a: Expr, b: Expr) -> Expr:
    return a * b + b * a


# ---------------------------------------------------------------------------
# templates, bindings, results
# ---------------------------------------------------------------------------


@dataclass
class RelationTemplate:
    """A named relation ``expr == 0`` over a declared alphabet."""

    name: str
    alphabet: tuple[str, ...]
    expr: Expr

    def __post_init__(self):
        self.alphabet = tuple(self.alphabet)
        stray = self.expr.symbols() - set(self.alphabet)
        if stray:
            raise InvalidInputError(f"template {self.name!r} uses undeclared symbols {sorted(stray)}")

    @property
    def unknowns(self) -> list[str]:
        return sorted(self.expr.unknowns())

    def substitute(self, values: Mapping[str, object]) -> "RelationTemplate":
        return RelationTemplate(self.name, self.alphabet, self.expr.substitute(values))


class Binding:
    """Symbol-to-operator assignment with a cache of composed subwords."""

    def __init__(self, ops: Mapping[str, ShiftOperator]):
        if not ops:
            raise InvalidInputError("empty binding")
        self.ops = dict(ops)
        qs = {op.q for op in self.ops.values()}
        if len(qs) != 1:
            raise InvalidInputError(f"binding mixes q values {sorted(qs)}")
        self.q = qs.pop()
        self._cache: dict[Word, ShiftOperator] = {(): ShiftOperator.identity(self.q)}

    def word(self, w: Word) -> ShiftOperator:
        w = tuple(w)
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        for s in w:
            if s not in self.ops:
                raise InvalidInputError(f"unbound symbol {s!r}")
        if len(w) == 1:
            op = self.ops[w[0]]
        else:
            op = op_compose(self.word(w[:-1]), self.ops[w[-1]])
        self._cache[w] = op
        return op


def _as_binding(binding) -> Binding:
    return binding if isinstance(binding, Binding) else Binding(binding)


@dataclass
class FitResult:
    """Exact solution space of the unknown coefficients of one or more templates.

    ``solution`` is the particular solution with free variables set to zero.
    ``nullspace`` lists a basis of the homogeneous solutions.
    """

    status: str  # "unique" | "affine-family" | "inconsistent"
    unknowns: list[str]
    solution: dict[str, Fraction] = field(default_factory=dict)
    nullspace_dim: int = 0
    nullspace: list[dict[str, Fraction]] = field(default_factory=list)
    residual_witness: dict | None = None
    equations: int = 0

    @property
    def ok(self) -> bool:
        return self.status != "inconsistent"


def eval_template(t: RelationTemplate, binding) -> ShiftOperator:
    """Normal-form operator of a template with all coefficients known."""
    if t.unknowns:
        raise InvalidInputError(f"template {t.name!r} still has unknowns {t.unknowns}")
    b = _as_binding(binding)
    acc = ShiftOperator.zero(b.q)
    for w, lin in t.expr.terms.items():
        c = lin.get(_CONST, Fraction(0))
        if c:
            acc = acc + b.word(w).scale(c)
    return acc


def shift_witness(name: str, op: ShiftOperator) -> dict | None:
    if not op.terms:
        return None
    k, c = next(iter(op.terms.items()))
    return {"template": name, "shift": k, "coefficient": str(c)}


def verify_identity(t: RelationTemplate, binding) -> FitResult:
    """Decide ``t == 0`` exactly; a failure carries a nonvanishing shift term."""
    op = eval_template(t, binding)
    if not op.terms:
        return FitResult("unique", [])
    return FitResult("inconsistent", [], residual_witness=shift_witness(t.name, op))


def _poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a == b or b.degree == 0:
        return a
    if a.degree == 0:
        return b
    g = poly_gcd(a, b)
    return (a * b.exact_div(g)) if g.degree > 0 else a * b


def linear_system(templates: Sequence[RelationTemplate], binding) -> tuple[list[str], list[list[Fraction]], list[Fraction], list[tuple]]:
    """Rows ``A`` and right side ``b`` of ``A u = b`` expressing that every template vanishes.

    Each row is tagged with ``(template, shift, z-power)`` for witnesses.
    """
    b = _as_binding(binding)
    unknowns = sorted(set().union(*(t.expr.unknowns() for t in templates)))
    col = {u: i for i, u in enumerate(unknowns)}
    A: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    tags: list[tuple] = []
    for t in templates:
        ops = [(b.word(w), lin) for w, lin in t.expr.terms.items()]
        shifts = sorted({k for op, _ in ops for k in op.terms})
        for k in shifts:
            entries = [(op.terms[k], lin) for op, lin in ops if k in op.terms]
            L = Polynomial.one()
            for rf, _ in entries:
                L = _poly_lcm(L, rf.den)
            rows: dict[int, list[Fraction]] = {}
            consts: dict[int, Fraction] = {}
            for rf, lin in entries:
                num = rf.num * L.exact_div(rf.den) if rf.den != L else rf.num
                for j, c in enumerate(num.coeffs):
                    if not c:
                        continue
                    for key, v in lin.items():
                        if key == _CONST:
                            consts[j] = consts.get(j, 0) + v * c
                        else:
                            row = rows.setdefault(j, [Fraction(0)] * len(unknowns))
                            row[col[key]] += v * c
            for j in sorted(set(rows) | set(consts)):
                row = rows.get(j, [Fraction(0)] * len(unknowns))
                const = consts.get(j, Fraction(0))
                if not any(row) and not const:
                    continue
                A.append(row)
                rhs.append(-const)
                tags.append((t.name, k, j))
    return unknowns, A, rhs, tags


def fit_coefficients(templates: RelationTemplate | Sequence[RelationTemplate], binding) -> FitResult:
    """Solve for every unknown coefficient so that all templates vanish as operators.

    Unknowns shared between templates are solved jointly.
    """
    if isinstance(templates, RelationTemplate):
        templates = [templates]
    unknowns, A, rhs, tags = linear_system(templates, binding)
    if not unknowns:
        raise InvalidInputError("fit_coefficients needs at least one unknown")
    sol = solve(A, rhs, len(unknowns))
    null = [dict(zip(unknowns, v)) for v in sol.nullspace]
    if sol.particular is None:
        name, k, j = tags[sol.inconsistent_row]
        witness = {"template": name, "shift": k, "z_power": j}
        return FitResult("inconsistent", unknowns, {}, len(null), null, witness, len(A))
    status = "unique" if not null else "affine-family"
    return FitResult(status, unknowns, dict(zip(unknowns, sol.particular)), len(null), null, None, len(A))


def substitute_all(templates: Iterable[RelationTemplate], values: Mapping[str, object]) -> list[RelationTemplate]:
    return [t.substitute(values) for t in templates]
