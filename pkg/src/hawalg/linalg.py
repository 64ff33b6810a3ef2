"""Exact solution of linear systems over Q by fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


@dataclass
class LinearSolution:
    """Outcome of solving ``A x = b``.

    ``particular`` is ``None`` when the system is inconsistent; in that case
    ``inconsistent_row`` indexes an input row that cannot be satisfied.
    """

    particular: list[Fraction] | None
    nullspace: list[list[Fraction]]
    rank: int
    pivots: list[int]
    inconsistent_row: int | None = None
    free: list[int] = field(default_factory=list)


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    d = 1
    for v in row:
        if v:
            d = lcm(d, Fraction(v).denominator)
    out = [int(Fraction(v) * d) for v in row]
    g = 0
    for v in out:
        g = gcd(g, v)
    if g > 1:
        out = [v // g for v in out]
    return out


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction] | None = None, ncols: int | None = None) -> LinearSolution:
    """Solve ``A x = b`` exactly (``b`` defaults to zero).

    Rows are scaled to integers and eliminated with integer row operations
    (``r <- p*r - a*pivot``, then divided by the row content), pivoting on the
    nonzero entry of smallest magnitude.  Back-substitution is in Fractions.
    """
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    if b is None:
        b = [Fraction(0)] * len(A)
    rows: list[tuple[list[int], int]] = []
    for idx, (row, rhs) in enumerate(zip(A, b)):
        r = _integer_row(list(row) + [rhs])
        if any(r):
            rows.append((r, idx))

    pivots: list[int] = []
    pivot_rows: list[list[int]] = []
    active = rows
    for col in range(n):
        best = None
        for i, (r, _) in enumerate(active):
            v = r[col]
            if v and (best is None or abs(v) < abs(active[best][0][col])):
                best = i
        if best is None:
            continue
        prow, _ = active[best]
        p = prow[col]
        rest = []
        for i, (r, idx) in enumerate(active):
            if i == best:
                continue
            a = r[col]
            if a:
                g = gcd(p, a)
                fp, fa = p // g, a // g
                r = [x * fp - y * fa for x, y in zip(r, prow)]
                c = 0
                for x in r:
                    c = gcd(c, x)
                    if c == 1:
                        break
                if c > 1:
                    r = [x // c for x in r]
                if not any(r):
                    continue
            rest.append((r, idx))
        pivots.append(col)
        pivot_rows.append(prow)
        active = rest

    # any surviving row has zero coefficient part and nonzero rhs
    for r, idx in active:
        if any(r[:n]):  # pragma: no cover - elimination clears all pivot columns
            continue
        if r[n]:
            return LinearSolution(None, _nullspace(pivots, pivot_rows, n), len(pivots), pivots, idx,
                                  [c for c in range(n) if c not in pivots])

    free = [c for c in range(n) if c not in pivots]
    particular = _back_substitute(pivots, pivot_rows, n, {}, with_rhs=True)
    return LinearSolution(particular, _nullspace(pivots, pivot_rows, n), len(pivots), pivots, None, free)


def _back_substitute(pivots, pivot_rows, n, free_values: dict[int, Fraction], with_rhs: bool) -> list[Fraction]:
    x = [Fraction(0)] * n
    for c, v in free_values.items():
        x[c] = v
    for col, r in reversed(list(zip(pivots, pivot_rows))):
        s = Fraction(r[n]) if with_rhs else Fraction(0)
        for j in range(col + 1, n):
            if r[j]:
                s -= r[j] * x[j]
        x[col] = s / r[col]
    return x


def _nullspace(pivots, pivot_rows, n) -> list[list[Fraction]]:
    basis = []
    pset = set(pivots)
    for f in range(n):
        if f in pset:
            continue
        basis.append(_back_substitute(pivots, pivot_rows, n, {f: Fraction(1)}, with_rhs=False))
    return basis


def rank(A: Sequence[Sequence[Fraction]]) -> int:
    if not A:
        return 0
    return solve(A, None, len(A[0])).rank
