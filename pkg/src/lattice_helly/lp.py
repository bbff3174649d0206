"""Exact two-phase simplex over the rationals.

Everything here runs on :class:`fractions.Fraction`, so feasibility and
optimality answers are exact. Bland's rule guarantees termination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None
    # For infeasible problems: y with y.A <= 0 and y.b > 0.
    farkas: Optional[tuple] = None


def _pivot(T, obj, row, col):
    prow = T[row]
    p = prow[col]
    if p != 1:
        inv = 1 / p
        prow = [v * inv for v in prow]
        T[row] = prow
    nz = [j for j, v in enumerate(prow) if v]
    for i, r in enumerate(T):
        if i != row:
            f = r[col]
            if f:
                for j in nz:
                    r[j] -= f * prow[j]
    f = obj[col]
    if f:
        for j in nz:
            obj[j] -= f * prow[j]


def _iterate(T, obj, basis, allowed):
    """Run Bland's-rule pivots until optimal. Returns False if unbounded."""
    m = len(T)
    while True:
        col = -1
        for j in allowed:
            if obj[j] < 0:
                col = j
                break
        if col < 0:
            return True
        row = -1
        best = None
        for i in range(m):
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row < 0:
            return False
        _pivot(T, obj, row, col)
        basis[row] = col


def solve(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimise ``c.x`` subject to ``A x = b`` and ``x >= 0``."""
    m = len(A)
    nvar = len(c)
    c = [Fraction(v) for v in c]
    rows = []
    signs = []
    for i in range(m):
        r = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        s = 1
        if rhs < 0:
            r = [-v for v in r]
            rhs = -rhs
            s = -1
        signs.append(s)
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(r + art + [rhs])
    if m == 0:
        if any(v < 0 for v in c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, tuple(Fraction(0) for _ in c), Fraction(0))

    width = nvar + m
    basis = [nvar + i for i in range(m)]
    # phase 1: minimise the sum of artificials
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        obj[nvar + i] = Fraction(1)
    for r in rows:
        obj = [a - b_ for a, b_ in zip(obj, r)]
    _iterate(rows, obj, basis, range(width))
    if -obj[-1] > 0:
        y = tuple(signs[i] * (1 - obj[nvar + i]) for i in range(m))
        return LPResult(INFEASIBLE, farkas=y)

    # drive zero-level artificials out of the basis
    keep = []
    for i in range(m):
        if basis[i] >= nvar:
            for j in range(nvar):
                if rows[i][j] != 0:
                    _pivot(rows, obj, i, j)
                    basis[i] = j
                    break
        if basis[i] < nvar:
            keep.append(i)
    rows = [rows[i][:nvar] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    obj = c + [Fraction(0)]
    for i, bi in enumerate(basis):
        f = obj[bi]
        if f:
            obj = [a - f * v for a, v in zip(obj, rows[i])]
    if not _iterate(rows, obj, basis, range(nvar)):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nvar
    for i, bi in enumerate(basis):
        x[bi] = rows[i][-1]
    return LPResult(OPTIMAL, tuple(x), -obj[-1])


def convex_combination(p, points) -> LPResult:
    """Decide whether ``p`` lies in the convex hull of ``points``.

    On success ``x`` holds the barycentric weights. On failure ``farkas``
    is ``(h_1, ..., h_n, c)`` with ``h.q + c <= 0`` for every input point
    ``q`` and ``h.p + c > 0``.
    """
    n = len(p)
    A = [[q[j] for q in points] for j in range(n)]
    A.append([1] * len(points))
    return solve([0] * len(points), A, list(p) + [1])


def _integral_row(a, b):
    """Scale a.x <= b by a positive factor so that a is integral."""
    den = 1
    for v in a:
        d = Fraction(v).denominator
        den = den * d // gcd(den, d)
    if den == 1:
        return a, b
    return [int(Fraction(v) * den) for v in a], Fraction(b) * den


def optimize_over(c, rows, maximize=False) -> LPResult:
    """Optimise ``c.x`` over ``{x : a.x <= b for (a, b) in rows}`` with free x.

    ``x`` in the result is given in the original (free) coordinates.
    """
    n = len(c)
    m = len(rows)
    rows = [_integral_row(a, b) for a, b in rows]
    A = []
    for i, (a, _) in enumerate(rows):
        slack = [0] * m
        slack[i] = 1
        A.append(list(a) + [-v for v in a] + slack)
    sign = -1 if maximize else 1
    cost = [sign * v for v in c] + [-sign * v for v in c] + [0] * m
    res = solve(cost, A, [b for _, b in rows])
    if res.status != OPTIMAL:
        return res
    x = tuple(res.x[j] - res.x[n + j] for j in range(n))
    return LPResult(OPTIMAL, x, sign * res.value)
