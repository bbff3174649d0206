"""Expanding a non-redundant polytope until each facet holds one lattice point.

Every step works on exact rationals. Perturbations are random rationals with
large denominators; each run is checked afterwards by exact enumeration, so
an unlucky draw costs a retry, never a wrong answer.
"""
from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import lp
from .exactgeom import (
    HRepPolyhedron,
    LatticePointSet,
    UnboundedError,
    _det,
    enumerate_lattice_points,
    in_convex_position,
    is_bounded,
    lp_box,
)

RETRY_BUDGET = 32
PERTURB_BITS = 64


class ExpansionError(RuntimeError):
    """No valid expansion was found within the retry budget."""


class RedundantSystemError(ValueError):
    """The input system has a row that can be dropped without gaining a lattice point."""


def _dot(a, x):
    return sum(ai * xi for ai, xi in zip(a, x))


@dataclass(frozen=True)
class NonRedundancyReport:
    witnesses: tuple  # per row: a lattice point, or None when redundant
    box: tuple  # (lo, hi) covering every window that was enumerated

    @property
    def redundant_rows(self) -> list:
        return [i for i, w in enumerate(self.witnesses) if w is None]

    @property
    def non_redundant(self) -> bool:
        return all(w is not None for w in self.witnesses)


def _merge_box(box, lo, hi):
    if box is None:
        return tuple(lo), tuple(hi)
    return (tuple(map(min, box[0], lo)), tuple(map(max, box[1], hi)))


def _pick_witness(pts, a, b, anchor):
    def key(p):
        viol = _dot(a, p) - b
        dist = sum((pi - ci) ** 2 for pi, ci in zip(p, anchor))
        return viol, dist, p

    return min(pts, key=key)


def non_redundant_check(P: HRepPolyhedron, box=None, max_doublings: int = 40) -> NonRedundancyReport:
    """For each row, a lattice point gained by dropping it, or None if none exists.

    The gained point reported has the least violation of the dropped row,
    then is nearest to the mean of P's lattice points, then lexicographically
    least. ``box`` optionally confines the search for gained points; rows with
    nothing gained inside it are then settled without the box.
    """
    if not is_bounded(P):
        raise UnboundedError("cannot certify a finite lattice set: P is unbounded")
    X = list(enumerate_lattice_points(P))
    if X:
        anchor = tuple(Fraction(sum(c), len(X)) for c in zip(*X))
    else:
        b0 = lp_box(P)
        anchor = (0,) * P.dim if b0 is None else tuple(Fraction(l + h, 2) for l, h in zip(*b0))
    used = None
    out = []
    for i, (a, b) in enumerate(P.rows):
        rest = P.drop(i)
        w = None
        if box is not None:
            pts = [p for p in enumerate_lattice_points(rest, box) if _dot(a, p) > b]
            used = _merge_box(used, box[0], box[1])
            if pts:
                w = _pick_witness(pts, a, b, anchor)
        if w is None:
            w, win = _gained_point(rest, a, b, anchor, max_doublings)
            if win is not None:
                used = _merge_box(used, *win)
        out.append(w)
    return NonRedundancyReport(tuple(out), used)


def _gained_point(rest, a, b, anchor, max_doublings):
    if not rest.rows or not is_bounded(rest):
        # grow the window a.x <= T until a gained point shows up
        step = max(abs(c) for c in a)
        for j in range(max_doublings):
            win = rest.add(a, b + step * 2 ** j)
            bx = lp_box(win)
            if bx is None:
                continue
            pts = [p for p in enumerate_lattice_points(win, bx) if _dot(a, p) > b]
            if pts:
                return _pick_witness(pts, a, b, anchor), bx
        raise UnboundedError("cannot certify finiteness: no gained point within the search window")
    top = lp.optimize_over(a, list(rest.rows), maximize=True)
    if top.status != lp.OPTIMAL or top.value <= b:
        return None, None
    bx = lp_box(rest)
    pts = [p for p in enumerate_lattice_points(rest, bx) if _dot(a, p) > b]
    if not pts:
        return None, bx
    return _pick_witness(pts, a, b, anchor), bx


@dataclass(frozen=True)
class ExpansionResult:
    expanded: HRepPolyhedron
    facet_points: tuple  # (row index, lattice point), one per row
    original_interior: LatticePointSet
    epsilon: Fraction
    seed: int
    attempts: int
    region: tuple  # integer box standing in for the working polytope Q
    inflation: int
    checks: dict = field(default_factory=dict)

    @property
    def V(self) -> LatticePointSet:
        return LatticePointSet([p for _, p in self.facet_points], self.expanded.dim)


def _box_points(lo, hi):
    return itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi)))


def _generic(rows, n):
    for sub in itertools.combinations(range(len(rows)), n):
        if _det([list(rows[i]) for i in sub]) == 0:
            return False
    return True


def _argmin_unique(c, rows, bound_pt):
    """Lattice minimisers of c.x over rows, within c.x <= c.bound_pt."""
    P = HRepPolyhedron(list(rows) + [(c, _dot(c, bound_pt))])
    pts = list(enumerate_lattice_points(P))
    if not pts:
        return None
    best = min(_dot(c, p) for p in pts)
    return [p for p in pts if _dot(c, p) == best]


def verify_expansion(res: ExpansionResult) -> dict:
    """Recheck every structural claim about an expansion by enumeration."""
    P = res.expanded
    X = res.original_interior
    V = [p for _, p in res.facet_points]
    checks = {}
    checks["bounded"] = is_bounded(P)
    lat = enumerate_lattice_points(P) if checks["bounded"] else LatticePointSet([], P.dim)
    checks["lattice_set"] = lat.as_set() == X.as_set() | frozenset(V)
    checks["interior_preserved"] = all(P.interior_contains(x) for x in X)
    rel = True
    for i, v in res.facet_points:
        tight = [j for j in range(len(P)) if P.slack(j, v) == 0]
        rel = rel and tight == [i]
    checks["one_point_per_facet"] = rel and len(res.facet_points) == len(P)
    checks["distinct"] = len(set(V)) == len(V)
    checks["convex_position"] = checks["distinct"] and in_convex_position(LatticePointSet(V, P.dim))
    checks["disjoint"] = not (set(V) & X.as_set())
    return checks


def bell_expand(P: HRepPolyhedron, seed: int = 0, budget: int = RETRY_BUDGET) -> ExpansionResult:
    """Enlarge P to P' whose lattice points are P's (all interior) plus exactly
    one point in the relative interior of each facet."""
    n, m = P.dim, len(P)
    if not is_bounded(P):
        raise UnboundedError("input with infinite lattice set: P is unbounded")
    X = enumerate_lattice_points(P)
    if not len(X):
        raise ValueError("P has no lattice points")
    rep = non_redundant_check(P)
    if not rep.non_redundant:
        raise RedundantSystemError(f"redundant rows {rep.redundant_rows}")
    # working box: P, the gained points, and a margin
    lo, hi = lp_box(P)
    for w in rep.witnesses:
        lo, hi = tuple(map(min, lo, w)), tuple(map(max, hi, w))
    inflation = n + 1
    lo = tuple(c - inflation for c in lo)
    hi = tuple(c + inflation for c in hi)
    Qpts = list(_box_points(lo, hi))
    gaps = []
    for a, b in P.rows:
        gaps.extend(d for d in (_dot(a, y) - b for y in Qpts) if d > 0)
    eps = min(gaps) / 4
    M = max(max(abs(c) for c in lo), max(abs(c) for c in hi), 1)
    rng = random.Random(seed)
    attempts = 0
    while attempts < budget:
        attempts += 1
        # |abar . x| <= n 2^64 M / D < eps on the box
        D = 1 << PERTURB_BITS
        while D * eps <= n * (1 << PERTURB_BITS) * M:
            D <<= 1
        half = 1 << PERTURB_BITS
        A2 = [tuple(ai + Fraction(rng.randint(-half, half), D) for ai in a) for a, _ in P.rows]
        if not _generic(A2, n):
            continue
        res = _relax(P, A2, eps, X, rep, lo, hi, seed, attempts, inflation)
        if res is not None:
            return res
    raise ExpansionError("perturbation retry budget exhausted")


def _relax(P, A2, eps, X, rep, lo, hi, seed, attempts, inflation):
    n, m = P.dim, len(P)
    bs = [b for _, b in P.rows]
    P0 = HRepPolyhedron([(A2[i], bs[i] + 2 * eps) for i in range(m)], n)
    if not is_bounded(P0) or enumerate_lattice_points(P0).as_set() != X.as_set():
        return None
    b2 = [None] * m
    V = []
    for i in range(m):
        rows = []
        for j in range(m):
            if j < i:
                rows.append((A2[j], b2[j]))
            elif j == i:
                rows.append((tuple(-c for c in A2[i]), -(bs[i] + 2 * eps)))
            else:
                rows.append((A2[j], bs[j] + eps))
        w = rep.witnesses[i]
        if not all(_dot(a, w) <= b for a, b in rows):
            return None
        mins = _argmin_unique(A2[i], rows, w)
        if not mins or len(mins) > 1:
            return None
        v = mins[0]
        b2[i] = _dot(A2[i], v)
        V.append(v)
    Pp = HRepPolyhedron([(A2[i], b2[i]) for i in range(m)], n)
    res = ExpansionResult(Pp, tuple(enumerate(V)), X, eps, seed, attempts, (lo, hi), inflation)
    checks = verify_expansion(res)
    if not all(checks.values()):
        return None
    return ExpansionResult(Pp, res.facet_points, X, eps, seed, attempts, (lo, hi), inflation, checks)


def shrink_one_facet(res: ExpansionResult, keep: int) -> HRepPolyhedron:
    """Pull every row but ``keep`` inward so exactly one facet point survives."""
    P = res.expanded
    m = len(P)
    if not 0 <= keep < m:
        raise IndexError(f"keep index {keep} out of range for {m} rows")
    V = dict(res.facet_points)
    keepers = list(res.original_interior) + [V[keep]]
    slacks = []
    for i in range(m):
        if i == keep:
            continue
        pts = keepers + [V[j] for j in range(m) if j not in (i, keep)]
        slacks.extend(P.slack(i, x) for x in pts)
    if not slacks or min(slacks) <= 0:
        raise ValueError("no valid shrink: facet points are not separated")
    delta = min(slacks) / 2
    rows = [(a, b if i == keep else b - delta) for i, (a, b) in enumerate(P.rows)]
    out = HRepPolyhedron(rows, P.dim)
    got = enumerate_lattice_points(out).as_set()
    if got != frozenset(keepers):
        raise ValueError("shrink check failed")
    return out


# ---------------------------------------------------------------------------
# random test systems


def _drop_redundant(P):
    while len(P.rows):
        rep = non_redundant_check(P)
        bad = rep.redundant_rows
        if not bad:
            return P
        P = P.drop(bad[0])
    return P


def _direction(rng, n, j, m):
    if n == 2:
        t = 2 * math.pi * (j + rng.uniform(-0.35, 0.35)) / m
        return (math.cos(t), math.sin(t))
    v = [rng.gauss(0, 1) for _ in range(n)]
    norm = math.sqrt(sum(c * c for c in v)) or 1.0
    return tuple(c / norm for c in v)


def _primitive(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return tuple(c // g for c in a)


def random_system(rng: random.Random, n: int = 2, rows: int = 5, coef: int = 6, tries: int = 500) -> HRepPolyhedron:
    """A bounded non-redundant integer system with exactly ``rows`` rows.

    Normals are integer roundings of directions spread around the circle
    (random on the sphere for n > 2). Each row sits near a common distance
    from the origin, drawn per system and growing with ``rows`` so that
    larger systems have room for every row to cut off a lattice point. The
    origin always stays feasible. Redundant rows are dropped and the draw is
    kept only at the target size.
    """
    for _ in range(tries):
        raw = {}
        R = rng.uniform(1, max(1.5, 0.6 * rows))
        for j in range(rows):
            a = _primitive(tuple(round(coef * c) for c in _direction(rng, n, j, rows)))
            if any(a) and a not in raw:
                norm = math.sqrt(sum(c * c for c in a))
                raw[a] = max(0, math.floor(norm * (R + rng.uniform(-0.3, 0.3))))
        if len(raw) < rows:
            continue
        P = HRepPolyhedron(list(raw.items()), n)
        if not is_bounded(P):
            continue
        P = _drop_redundant(P)
        if len(P) == rows and is_bounded(P):
            return P
    raise RuntimeError("no suitable random system found")


def random_systems(count: int, n: int = 2, seed: int = 0, min_rows: int = 3, max_rows: int = 8, **kw) -> list:
    """``count`` seeded systems whose row counts cycle through min_rows..max_rows."""
    span = max_rows - min_rows + 1
    return [random_system(random.Random(f"sys:{seed}:{n}:{idx}"), n, min_rows + idx % span, **kw)
            for idx in range(count)]


def expand_batch(systems: Sequence[HRepPolyhedron], seed: int = 0, threads: int = 1) -> list:
    """Expand each system with its own derived seed; output order follows input."""
    seeds = [random.Random(f"expand:{seed}:{i}").getrandbits(32) for i in range(len(systems))]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(bell_expand, systems, seeds))
    return [bell_expand(P, s) for P, s in zip(systems, seeds)]
