"""Midpoints, Minkowski sums and differences, parity classes.

Sets are :class:`LatticePointSet` values; results are sorted so that two
runs always produce the same order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .exactgeom import LatticePointSet, affine_rank

DEFAULT_SUMSET_GUARD = 12


class SizeGuardError(ValueError):
    """An input exceeded the configured enumeration guard."""


def _lps(V):
    return V if isinstance(V, LatticePointSet) else LatticePointSet.from_iter(V)


@dataclass(frozen=True)
class MidpointSet:
    points: frozenset  # tuples of Fractions with denominator 1 or 2
    source_size: int

    def __len__(self):
        return len(self.points)

    def integral(self) -> frozenset:
        return frozenset(p for p in self.points if all(c.denominator == 1 for c in p))


def midpoint_set(V) -> MidpointSet:
    """Midpoints of pairs of V that are not themselves in V."""
    V = _lps(V)
    pts = list(V)
    doubled = {tuple(2 * c for c in p) for p in pts}
    sums = set()
    for i in range(len(pts)):
        p = pts[i]
        for q in pts[i + 1:]:
            sums.add(tuple(a + b for a, b in zip(p, q)))
    mids = frozenset(tuple(Fraction(c, 2) for c in s) for s in sums - doubled)
    return MidpointSet(mids, len(pts))


def midpoint_count(V) -> int:
    """|M(V)| without building the rational set."""
    return kernels.midpoint_count(list(_lps(V)))


def minkowski_sum(A, B) -> LatticePointSet:
    A, B = _lps(A), _lps(B)
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    return LatticePointSet.from_iter((tuple(x + y for x, y in zip(a, b)) for a in A for b in B), A.dim)


def difference_set(A, B) -> LatticePointSet:
    A, B = _lps(A), _lps(B)
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    return LatticePointSet.from_iter((tuple(x - y for x, y in zip(a, b)) for a in A for b in B), A.dim)


def k_fold(A, k: int) -> LatticePointSet:
    """kA = A + ... + A with k summands."""
    if k < 1:
        raise ValueError("k must be at least 1")
    # binary powering: 5A = A + 4A, 4A = 2A + 2A
    acc = None
    base = _lps(A)
    while k:
        if k & 1:
            acc = base if acc is None else minkowski_sum(acc, base)
        k >>= 1
        if k:
            base = minkowski_sum(base, base)
    return acc


@dataclass(frozen=True)
class ParityPartition:
    classes: dict  # parity tuple -> LatticePointSet

    def largest(self) -> LatticePointSet:
        return max(self.classes.values(), key=lambda c: (len(c), sorted(c.points)))


def parity_partition(V) -> ParityPartition:
    V = _lps(V)
    groups = {}
    for p in V:
        groups.setdefault(tuple(c % 2 for c in p), []).append(p)
    return ParityPartition({k: LatticePointSet(sorted(v), V.dim) for k, v in sorted(groups.items())})


def triangulation_midpoint_bound(V) -> int:
    """Lower bound on |M(V)| for planar V: |V|-1 if collinear, else 2|V|-3."""
    V = _lps(V)
    if len(V) < 2:
        raise ValueError("need at least two points")
    if V.dim > 2:
        raise ValueError("planar sets only")
    if V.dim == 1 or affine_rank(V) <= 1:
        return len(V) - 1
    return 2 * len(V) - 3


def has_avg5_solution(A, return_witness=False):
    """Distinct x1..x6 in A with x1+...+x5 = 5*x6.

    The five summands are a 5-subset of A without x6. Search runs over x6
    and sorted 5-subsets with prefix pruning on attainable sums.
    """
    vals = sorted({p[0] if isinstance(p, tuple) else p for p in (A.points if isinstance(A, LatticePointSet) else A)})
    found = None
    if len(vals) >= 6:
        for x6 in vals:
            rest = [v for v in vals if v != x6]
            found = _five_sum(rest, 5 * x6)
            if found is not None:
                found = tuple(found) + (x6,)
                break
    if return_witness:
        return found is not None, found
    return found is not None


def _five_sum(vals, target):
    n = len(vals)
    chosen = []

    def rec(start, need, remaining):
        if need == 0:
            return list(chosen) if remaining == 0 else None
        if n - start < need:
            return None
        lo = sum(vals[start:start + need])
        hi = sum(vals[n - need:])
        if remaining < lo or remaining > hi:
            return None
        for i in range(start, n - need + 1):
            if vals[i] * need > remaining:
                # every later pick is at least vals[i]
                break
            chosen.append(vals[i])
            r = rec(i + 1, need - 1, remaining - vals[i])
            chosen.pop()
            if r is not None:
                return r
        return None

    return rec(0, 5, target)


@dataclass(frozen=True)
class PlunneckeCheck:
    lhs: int
    rhs: Fraction
    holds: bool


def plunnecke_check(A, guard: int = DEFAULT_SUMSET_GUARD) -> PlunneckeCheck:
    """Compare |5A-5A| with (|A+A|/|A|)^10 |A|."""
    A = _lps(A)
    if len(A) < 1:
        raise ValueError("A must be nonempty")
    if len(A) > guard:
        raise SizeGuardError(f"|A| = {len(A)} exceeds guard {guard}")
    five = k_fold(A, 5)
    lhs = len(difference_set(five, five))
    doubling = Fraction(len(minkowski_sum(A, A)), len(A))
    rhs = doubling ** 10 * len(A)
    return PlunneckeCheck(lhs, rhs, lhs <= rhs)


def freiman_check(A) -> bool:
    """|A+A| >= 2|A| - 1 for a 1-dimensional set."""
    A = _lps(A)
    if A.dim != 1:
        raise ValueError("1-dimensional sets only")
    return len(minkowski_sum(A, A)) >= 2 * len(A) - 1
