"""Integer hulls of Euclidean balls B(r*u, r).

Lattice membership, hull vertices, and the structural checks are exact.
Square roots appear only inside comparisons, which are settled by squaring
or by integer square roots with directed rounding.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, isqrt
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .exactgeom import LatticePointSet, convex_hull, hull_edges, hull_facets
from .sumsets import midpoint_count, parity_partition


class GenericityError(RuntimeError):
    """Two lattice points enter the growing ball at the same radius."""


@dataclass(frozen=True)
class BallSpec:
    """The ball B(r*u, r), i.e. r times the unit ball around u."""

    n: int
    u: tuple
    r: Fraction

    @property
    def center(self) -> tuple:
        return tuple(self.r * c for c in self.u)


def ball_spec(n: int, r, u: Optional[Sequence] = None) -> BallSpec:
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    u = tuple(Fraction(c) for c in (u if u is not None else (0,) * n))
    if len(u) != n:
        raise ValueError("center dimension mismatch")
    if sum(c * c for c in u) >= 1:
        raise ValueError("need |u| < 1")
    return BallSpec(n, u, r)


@dataclass(frozen=True)
class BallHullStats:
    r: Fraction
    N_r: int
    v_r: int
    k_r: int
    max_edge_sq: int
    inner_margin: float  # min facet distance minus (r - sqrt(n)); float for display
    min_delta: float  # r minus min facet distance


@dataclass(frozen=True)
class ExponentFit:
    n: int
    slope: float
    intercept: float
    radii: tuple
    counts: tuple
    residual: float
    target: Fraction

    @property
    def distance(self) -> float:
        return abs(self.slope - float(self.target))


# ---------------------------------------------------------------------------
# lattice points


def _int_range(c: Fraction, rho2: Fraction):
    """Integers x with (x - c)^2 <= rho2, as (lo, hi); lo > hi when empty."""
    if rho2 < 0:
        return 1, 0
    D = c.denominator * rho2.denominator // gcd(c.denominator, rho2.denominator)
    C = c.numerator * (D // c.denominator)
    E = rho2.numerator * D * D // rho2.denominator
    s = isqrt(E)
    return -((s - C) // D), (C + s) // D


def _rows(spec: BallSpec):
    """(prefix, lo, hi): lattice points are prefix + (z,) for lo <= z <= hi."""
    c = spec.center
    n = spec.n
    R2 = spec.r * spec.r

    def rec(j, prefix, rem):
        lo, hi = _int_range(c[j], rem)
        if j == n - 1:
            if lo <= hi:
                yield prefix, lo, hi
            return
        for x in range(lo, hi + 1):
            d = x - c[j]
            yield from rec(j + 1, prefix + (x,), rem - d * d)

    yield from rec(0, (), R2)


def ball_count(spec: BallSpec) -> int:
    return sum(hi - lo + 1 for _, lo, hi in _rows(spec))


def ball_lattice_points(spec: BallSpec) -> LatticePointSet:
    pts = [p + (z,) for p, lo, hi in _rows(spec) for z in range(lo, hi + 1)]
    return LatticePointSet(pts, spec.n)


def ball_hull_vertices(spec: BallSpec) -> tuple:
    """Vertices of the integer hull (each row contributes only its ends)."""
    ends = []
    for p, lo, hi in _rows(spec):
        ends.append(p + (lo,))
        if hi != lo:
            ends.append(p + (hi,))
    if not ends:
        raise ValueError("ball contains no lattice point")
    if spec.n == 2:
        return tuple(kernels.hull2d(ends))
    return convex_hull(LatticePointSet(ends, spec.n))


def _facets(spec, verts):
    if spec.n == 1:
        lo, hi = min(verts), max(verts)
        return [((-1,), -lo[0]), ((1,), hi[0])]
    return hull_facets(verts)


def _edges(spec, verts):
    if spec.n == 1 or len(verts) < 2:
        return [(min(verts), max(verts))] if len(verts) == 2 else []
    if spec.n == 2:
        v = len(verts)
        return [(verts[i], verts[(i + 1) % v]) for i in range(v)] if v > 2 else [tuple(verts)]
    return hull_edges(verts)


def _max_edge_sq(spec, verts):
    best = 0
    for p, q in _edges(spec, verts):
        best = max(best, sum((a - b) ** 2 for a, b in zip(p, q)))
    return best


def _facet_distances(spec, verts):
    c = spec.center
    out = []
    for a, b in _facets(spec, verts):
        d = Fraction(b) - sum(ai * ci for ai, ci in zip(a, c))
        out.append((d, sum(ai * ai for ai in a)))
    return out


def ball_hull_stats(spec: BallSpec) -> BallHullStats:
    N = ball_count(spec)
    if N == 0:
        raise ValueError("ball contains no lattice point")
    verts = ball_hull_vertices(spec)
    v = len(verts)
    max_edge = _max_edge_sq(spec, verts)
    full = v > spec.n
    if full:
        dmin = min(float(d) / math.sqrt(a2) for d, a2 in _facet_distances(spec, verts))
    else:
        dmin = 0.0
    r = float(spec.r)
    margin = dmin - (r - math.sqrt(spec.n))
    return BallHullStats(spec.r, N, v, N - v, max_edge, margin, r - dmin)


def inner_ball_check(spec: BallSpec) -> bool:
    """Every hull facet lies at distance >= r - sqrt(n) from the center."""
    n, r = spec.n, spec.r
    if r * r <= n:
        raise ValueError("inner_ball_check needs r > sqrt(n)")
    verts = ball_hull_vertices(spec)
    for d, a2 in _facet_distances(spec, verts):
        if d < 0:
            return False
        # d >= (r - sqrt n) |a|, squared: L >= -2 r sqrt(n) |a|^2
        L = d * d - (r * r + n) * a2
        if L < 0 and L * L > 4 * r * r * n * a2 * a2:
            return False
    return True


def max_edge_check(spec: BallSpec) -> bool:
    """Every hull edge has length^2 <= 16 sqrt(n) r."""
    n, r = spec.n, spec.r
    if r * r <= n:
        raise ValueError("max_edge_check needs r > sqrt(n)")
    e2 = _max_edge_sq(spec, ball_hull_vertices(spec))
    return e2 * e2 <= 256 * n * r * r


# ---------------------------------------------------------------------------
# generic centers and the radius sequence


def _sign(x):
    return (x > 0) - (x < 0)


def _sign_sqrt_diff(t1, t2, d):
    """Sign of sqrt(t1) - sqrt(t2) - d, exactly."""
    if d == 0:
        return _sign(t1 - t2)
    if d < 0:
        return -_sign_sqrt_diff(t2, t1, -d)
    # sqrt(t1) vs sqrt(t2) + d  <=>  t1 - t2 - d^2 vs 2 d sqrt(t2)
    L = t1 - t2 - d * d
    if L < 0:
        return -1
    if L == 0:
        return -1 if t2 > 0 else 0
    return _sign(L * L - 4 * d * d * t2)


class _Entry:
    """Entry radius (-s + sqrt(t)) / q of one lattice point."""

    __slots__ = ("x", "s", "t", "approx")

    def __init__(self, x, u, q):
        self.x = x
        s = sum(a * b for a, b in zip(x, u))
        self.s = s
        self.t = s * s + q * sum(a * a for a in x)
        self.approx = (-float(s) + math.sqrt(float(self.t))) / float(q)


def _entry_cmp(a: _Entry, b: _Entry):
    return _sign_sqrt_diff(a.t, b.t, a.s - b.s)


def _entry_bounds(e: _Entry, q, bits):
    """Rationals lo <= r_x <= hi with hi - lo about 2^-bits / q."""
    scale = 1 << bits
    T = e.t * scale * scale
    Tf = T.numerator // T.denominator
    lo = Fraction(isqrt(Tf), scale)
    hi = Fraction(isqrt(Tf + 1) + 1, scale)
    return (-e.s + lo) / q, (-e.s + hi) / q


def _inside(x, u, rho):
    return sum((a - rho * b) ** 2 for a, b in zip(x, u)) <= rho * rho


def _ordered_entries(u, need):
    """The first ``need`` lattice points in order of entry radius, exactly sorted."""
    n = len(u)
    q = 1 - sum(c * c for c in u)
    R = max(2, isqrt(need) + 2)
    while True:
        zero = ball_spec(n, R)
        cands = [_Entry(p + (z,), u, q) for p, lo, hi in _rows(zero) for z in range(lo, hi + 1)]
        cands.sort(key=lambda e: (e.approx, e.x))
        ok = all(_entry_cmp(a, b) < 0 for a, b in zip(cands, cands[1:]))
        if not ok:
            cands.sort(key=cmp_to_key(_entry_cmp))
            for a, b in zip(cands, cands[1:]):
                if _entry_cmp(a, b) == 0:
                    # only a genuine tie matters, and only if it lies in range
                    if _inside(b.x, u, Fraction(R, 2)):
                        raise GenericityError(f"points {a.x} and {b.x} enter together")
        # points with |x| > R enter at radius > R/2, so those inside B(R/2) are final
        half = Fraction(R, 2)
        complete = [e for e in cands if _inside(e.x, u, half)]
        if len(complete) >= need:
            return complete[:need], q
        R *= 2


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with least denominator strictly inside (lo, hi), lo < hi."""
    fl = lo.numerator // lo.denominator
    if fl + 1 < hi:
        return Fraction(fl + 1)
    # fl < lo < hi <= fl + 1 (or lo integral): recurse on reciprocals
    if lo == fl:
        # any 1/m in (0, hi - fl) works for large m
        m = int(1 / (hi - fl)) + 1
        return fl + Fraction(1, m)
    return fl + 1 / _simplest_between(1 / (hi - fl), 1 / (lo - fl))


@dataclass(frozen=True)
class RadiusSequence:
    u: tuple
    radii: tuple  # r_i with N(r_i) = i, i = 1..len
    points: tuple  # lattice points in order of entry


def radius_sequence(u, N_target: int, verify: bool = True) -> RadiusSequence:
    """Rational radii r_1 < ... < r_N with exactly i lattice points in B(r_i u, r_i)."""
    u = tuple(Fraction(c) for c in u)
    if N_target < 1:
        raise ValueError("N_target must be positive")
    entries, q = _ordered_entries(u, N_target + 1)
    radii = []
    for a, b in zip(entries, entries[1:]):
        bits = 64
        while True:
            _, ahi = _entry_bounds(a, q, bits)
            blo, _ = _entry_bounds(b, q, bits)
            if ahi < blo:
                break
            bits *= 2
            if bits > 1 << 14:
                raise GenericityError(f"cannot separate {a.x} and {b.x}")
        radii.append(_simplest_between(ahi, blo))
    if verify:
        n = len(u)
        for i, r in enumerate(radii, 1):
            if ball_count(BallSpec(n, u, r)) != i:
                raise GenericityError(f"N(r_{i}) != {i}")
    return RadiusSequence(u, tuple(radii), tuple(e.x for e in entries[:-1]))


def is_generic(u, scan: int = 64) -> bool:
    try:
        radius_sequence(u, scan)
    except GenericityError:
        return False
    return True


def generic_center(n: int, seed: int = 0, precision: int = 64, scan: int = 64, budget: int = 32) -> tuple:
    """A random rational u (denominator 2^precision, |u_j| <= 1/4) whose
    lattice points enter B(ru, r) one at a time over the first ``scan`` entries."""
    if precision < 64:
        raise ValueError("precision must be at least 64 bits")
    rng = random.Random(seed)
    half = 1 << (precision - 2)
    for _ in range(budget):
        u = tuple(Fraction(rng.randint(-half, half), 1 << precision) for _ in range(n))
        if sum(c * c for c in u) < 1 and is_generic(u, scan):
            return u
    raise GenericityError("retry budget exhausted")


# ---------------------------------------------------------------------------
# fits and midpoint bounds


def exponent_fit(n: int, radii: Sequence, center=None, threads: int = 1) -> ExponentFit:
    """Least-squares slope of log v_r against log r."""
    rs = sorted({Fraction(r) for r in radii})
    if len(rs) < 5:
        raise ValueError("need at least 5 distinct radii")
    if rs[-1] < 10 * rs[0]:
        raise ValueError("radii must span at least one decade")
    u = tuple(center) if center is not None else (0,) * n

    def verts(r):
        return len(ball_hull_vertices(ball_spec(n, r, u)))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            counts = list(ex.map(verts, rs))
    else:
        counts = [verts(r) for r in rs]
    x = np.log(np.array([float(r) for r in rs]))
    y = np.log(np.array(counts, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    rms = float(np.sqrt(np.mean(resid ** 2)))
    return ExponentFit(n, float(slope), float(intercept), tuple(rs), tuple(counts), rms, Fraction(n * (n - 1), n + 1))


def geometric_radii(rmin, rmax, count: int) -> list:
    """``count`` integer radii spaced roughly geometrically in [rmin, rmax]."""
    out = []
    for i in range(count):
        r = round(rmin * (rmax / rmin) ** (i / (count - 1)))
        if not out or r > out[-1]:
            out.append(r)
    return out


@dataclass(frozen=True)
class MuBallResult:
    s: int
    midpoints: int
    N_R: int
    radius: Fraction
    S: LatticePointSet

    @property
    def bound(self) -> int:
        return self.midpoints


def mu_upper_from_ball(n: int, s: int, seed: int = 0, cap: int = 20000) -> MuBallResult:
    """Grow B(ru, r) point by point until some parity class of hull vertices
    has s members; that class is in convex position and its midpoints are
    lattice points of the ball, so |M(S_R)| bounds mu_c(n,s) from above."""
    u = generic_center(n, seed)
    need = 64
    while True:
        seq = radius_sequence(u, min(need, cap), verify=False)
        verts = []
        for i, x in enumerate(seq.points, 1):
            pts = verts + [x]
            verts = list(kernels.hull2d(pts)) if n == 2 else list(convex_hull(LatticePointSet(pts, n)))
            part = parity_partition(LatticePointSet(verts, n))
            cls = part.largest()
            if len(cls) == s:
                return MuBallResult(s, midpoint_count(cls), i, seq.radii[i - 1], cls)
        if need >= cap:
            raise RuntimeError("scan cap reached before a parity class of size s appeared")
        need *= 4


def gauss_deviation(n: int, r) -> tuple:
    """(N_r, vol(B_n) r^n, |N_r - vol r^n| / r^(n(n-1)/(n+1))) for the centered ball."""
    N = ball_count(ball_spec(n, r))
    vol = math.pi ** (n / 2) / math.gamma(n / 2 + 1) * float(r) ** n
    return N, vol, abs(N - vol) / float(r) ** (n * (n - 1) / (n + 1))
