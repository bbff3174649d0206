"""Certified searches over planar lattice polygons.

The engine grows lattice-convex sets S (those with conv(S) cap Z^2 = S) one
point at a time, level by level in |S|, keeping one representative per
unimodular class. Every such set of size N+1 arises from one of size N by
adding a point: drop any vertex. Dropping a vertex shrinks the hull, so the
area, the interior count and the number of non-vertex points can only go
down. Those quantities are therefore safe pruning caps, and a search under
such a cap is exhaustive once a level comes back empty.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator, Optional

from . import kernels
from .bounds import aliev_linear, averkov_linear, bell_bound, c2_upper, ell_pigeonhole
from .exactgeom import LatticePointSet, in_convex_position
from .sumsets import midpoint_count

SCHEME = "unimodular-affine cycle normal form"


# ---------------------------------------------------------------------------
# canonical forms


def _egcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _frame(cur, nxt, prv):
    """The unique unimodular matrix sending nxt-cur to a positive x-multiple
    and prv-cur to (p, q) with q > 0 and 0 <= p < q."""
    dx, dy = nxt[0] - cur[0], nxt[1] - cur[1]
    g = gcd(dx, dy)
    a, b = dx // g, dy // g
    _, s, t = _egcd(a, b)
    m = [[s, t], [-b, a]]
    ex, ey = prv[0] - cur[0], prv[1] - cur[1]
    p = m[0][0] * ex + m[0][1] * ey
    q = m[1][0] * ex + m[1][1] * ey
    if q < 0:
        m[1] = [-m[1][0], -m[1][1]]
        q = -q
    sh = p // q
    m[0] = [m[0][0] - sh * m[1][0], m[0][1] - sh * m[1][1]]
    return m


def normal_form(verts) -> tuple:
    """Least image of the vertex cycle over all anchorings and orientations.

    ``verts`` is the strict vertex cycle (either orientation) of a convex
    lattice polygon, or one point, or the two ends of a segment.
    """
    v = len(verts)
    if v == 1:
        return ((0, 0),)
    if v == 2:
        (x0, y0), (x1, y1) = verts
        return ((0, 0), (gcd(x1 - x0, y1 - y0), 0))
    best = None
    for cyc in (list(verts), list(reversed(verts))):
        for i in range(v):
            cur, nxt, prv = cyc[i], cyc[(i + 1) % v], cyc[i - 1]
            m = _frame(cur, nxt, prv)
            cand = []
            for j in range(v):
                px, py = cyc[(i + j) % v]
                px -= cur[0]
                py -= cur[1]
                cand.append((m[0][0] * px + m[0][1] * py, m[1][0] * px + m[1][1] * py))
            cand = tuple(cand)
            if best is None or cand < best:
                best = cand
    return best


def form_id(form) -> bytes:
    return ";".join(f"{x},{y}" for x, y in form).encode("ascii")


@dataclass(frozen=True)
class CanonicalPolygon:
    vertices: LatticePointSet  # the normal form, in cycle order
    id: bytes
    n_points: int
    nonvertex: int

    @property
    def v(self):
        return len(self.vertices)


def canonicalize(polygon) -> CanonicalPolygon:
    """Normal form of a convex lattice polygon, invariant under GL2(Z) and translation."""
    pts = sorted({(int(x), int(y)) for x, y in polygon})
    if not pts:
        raise ValueError("empty polygon")
    hull = kernels.hull2d(pts)
    if len(hull) != len(pts):
        raise ValueError("input is not in convex position")
    form = normal_form(hull)
    total = kernels.polygon_counts(list(form))[2]
    return CanonicalPolygon(LatticePointSet(form), form_id(form), total, total - len(form))


# ---------------------------------------------------------------------------
# the growth engine


@dataclass(frozen=True)
class _State:
    form: tuple
    npts: int

    @property
    def v(self):
        return len(self.form)

    @property
    def k(self):
        return self.npts - len(self.form)

    def area2(self):
        return kernels.polygon_counts(list(self.form))[0] if len(self.form) >= 3 else 0

    def interior(self):
        if len(self.form) < 3:
            return 0
        area2, boundary, total = kernels.polygon_counts(list(self.form))
        return total - boundary


def _children(st: _State):
    v = st.v
    if v == 1:
        return [_State(((0, 0), (1, 0)), 2)]
    if v == 2:
        L = st.form[1][0]
        return [
            _State(((0, 0), (L + 1, 0)), st.npts + 1),
            _State(normal_form([(0, 0), (L, 0), (0, 1)]), st.npts + 1),
        ]
    out = []
    for hull, npts in kernels.extend_polygon(list(st.form), st.npts):
        out.append(_State(normal_form(hull), npts))
    return out


def _expand_chunk(chunk, prune):
    found = {}
    for st in chunk:
        for ch in _children(st):
            if prune(ch):
                continue
            key = form_id(ch.form)
            if key not in found:
                found[key] = ch
    return found


def grow(prune: Callable[[_State], bool], threads: int = 1, max_points: Optional[int] = None) -> Iterator:
    """Yield ``(N, [states])`` level by level, states sorted by id.

    ``prune`` must be hereditary: if it rejects a set it must reject every
    larger set reachable from it. Stops at the first empty level, or after
    level ``max_points``.
    """
    level = {form_id(((0, 0),)): _State(((0, 0),), 1)}
    n = 1
    threads = max(1, int(threads))
    while level:
        states = [level[k] for k in sorted(level)]
        yield n, states
        if max_points is not None and n >= max_points:
            return
        if threads == 1 or len(states) < 2 * threads:
            nxt = _expand_chunk(states, prune)
        else:
            size = -(-len(states) // threads)
            chunks = [states[i:i + size] for i in range(0, len(states), size)]
            nxt = {}
            with ThreadPoolExecutor(max_workers=threads) as ex:
                for part in ex.map(lambda c: _expand_chunk(c, prune), chunks):
                    for key, st in part.items():
                        nxt.setdefault(key, st)
        level = nxt
        n += 1


def _to_canonical(st: _State) -> CanonicalPolygon:
    return CanonicalPolygon(LatticePointSet(st.form), form_id(st.form), st.npts, st.k)


def enumerate_convex_configs(
    vertex_budget: Optional[int] = None,
    area_cap=None,
    max_nonvertex: Optional[int] = None,
    max_interior: Optional[int] = None,
    threads: int = 1,
) -> Iterator[CanonicalPolygon]:
    """One representative per class of full-dimensional convex lattice polygons.

    ``area_cap`` or ``max_nonvertex`` must be given; either one bounds the
    number of lattice points, so the enumeration is finite and exhaustive.
    ``vertex_budget`` filters the output only (vertex counts are not
    monotone). Output order is (number of lattice points, id).
    """
    if area_cap is None and max_nonvertex is None:
        raise ValueError("give area_cap or max_nonvertex")
    area2_cap = None if area_cap is None else 2 * area_cap

    def prune(st):
        if max_nonvertex is not None and st.k > max_nonvertex:
            return True
        if area2_cap is not None:
            if st.v < 3:
                # a segment with L+1 points sits in polygons of area >= L/2
                if st.v == 2 and st.form[1][0] > area2_cap:
                    return True
            elif st.area2() > area2_cap:
                return True
        if max_interior is not None and st.interior() > max_interior:
            return True
        return False

    for _, states in grow(prune, threads):
        for st in states:
            if st.v >= 3 and (vertex_budget is None or st.v <= vertex_budget):
                yield _to_canonical(st)


# ---------------------------------------------------------------------------
# alpha, ell, brackets


@dataclass(frozen=True)
class SearchCertificate:
    region: dict
    canonicalization: str
    exhaustive: bool
    nodes_visited: int


@dataclass(frozen=True)
class AlphaResult:
    k: int
    value: int
    witness: LatticePointSet
    certificate: SearchCertificate


@dataclass(frozen=True)
class EllResult:
    k: int
    value: int
    witness: LatticePointSet
    certificate: SearchCertificate


@dataclass(frozen=True)
class MuResult:
    n: int
    s: int
    value: int
    witness: LatticePointSet
    lower_bound: int
    certificate: SearchCertificate


_ALPHA_CACHE = {}


def alpha_table(kmax: int, threads: int = 1, max_points: Optional[int] = None) -> dict:
    """AlphaResult for every k <= kmax from a single exhaustive growth."""
    if kmax < 0:
        raise ValueError("k must be nonnegative")
    key = (kmax, threads, max_points)
    if key in _ALPHA_CACHE:
        return _ALPHA_CACHE[key]
    best = {}
    nodes = 0
    last = 0
    levels = []
    for n, states in grow(lambda st: st.k > kmax, threads, max_points):
        nodes += len(states)
        last = n
        levels.append(len(states))
        for st in states:
            k = st.k
            cand = (st.v, form_id(st.form))
            cur = best.get(k)
            # larger vertex count wins; among equals the least id
            if cur is None or cand[0] > cur[0] or (cand[0] == cur[0] and cand[1] < cur[1]):
                best[k] = (st.v, cand[1], st)
    exhaustive = max_points is None or last < max_points
    out = {}
    for k in range(kmax + 1):
        cap = averkov_linear(2, k)
        region = {
            "max_nonvertex": kmax,
            "vertex_cap": cap,
            "levels": last,
            "max_points": max_points,
            "level_sizes": tuple(levels),
        }
        cert = SearchCertificate(region, SCHEME, exhaustive, nodes)
        if k not in best:
            raise RuntimeError(f"no polygon with {k} non-vertex points found")
        v, _, st = best[k]
        if v > cap:
            raise AssertionError(f"alpha(2,{k}) = {v} exceeds the vertex cap {cap}")
        out[k] = AlphaResult(k, v, LatticePointSet(st.form), cert)
    _ALPHA_CACHE[key] = out
    return out


def alpha_search(k: int, threads: int = 1, max_points: Optional[int] = None) -> AlphaResult:
    """alpha(2,k): most vertices of a lattice polygon with exactly k non-vertex points."""
    return alpha_table(k, threads, max_points)[k]


def ell_search(k: int, threads: int = 1) -> EllResult:
    """ell(2,k) = 1 + max over i < k of alpha(2,i)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    table = alpha_table(k - 1, threads)
    best = max(table.values(), key=lambda r: (r.value, -r.k))
    cert = best.certificate
    exhaustive = all(r.certificate.exhaustive for r in table.values())
    cert = SearchCertificate(dict(cert.region), cert.canonicalization, exhaustive, cert.nodes_visited)
    return EllResult(k, 1 + best.value, best.witness, cert)


def brute_force_alpha(k: int, size: int = 5) -> tuple:
    """Max |V| over V in convex position inside [0,size)^2 with |iconv(V) - V| = k.

    No canonicalization and no symmetry reduction: a depth-first search over
    subsets in index order, pruned because adding a point in convex position
    never removes a non-vertex lattice point. Returns (value, witness).
    """
    grid = [(x, y) for x in range(size) for y in range(size)]
    best = [0, None]

    def nonvertex(hull):
        if len(hull) == 1:
            return 0
        if len(hull) == 2:
            (x0, y0), (x1, y1) = hull
            return gcd(x1 - x0, y1 - y0) - 1
        return kernels.polygon_counts(hull)[2] - len(hull)

    def rec(start, chosen):
        for i in range(start, len(grid)):
            pts = chosen + [grid[i]]
            hull = kernels.hull2d(pts)
            if len(hull) != len(pts):
                continue
            kk = nonvertex(hull)
            if kk > k:
                continue
            if kk == k and len(pts) > best[0]:
                best[0], best[1] = len(pts), sorted(pts)
            rec(i + 1, pts)

    rec(0, [])
    return best[0], best[1]


def s_nk(n: int, k: int) -> int:
    """Least s whose certified lower bound on mu_c(n,s) reaches k."""
    s = 1
    while mu_lower_bound(n, s) < k:
        s += 1
    return s


def mu_lower_bound(n: int, s: int) -> int:
    """2s-3 in the plane (s >= 3), s-1 in general."""
    if s <= 1:
        return 0
    if n == 2 and s >= 3:
        return 2 * s - 3
    return s - 1


@dataclass(frozen=True)
class C2Bracket:
    k: int
    lower: int
    upper: int
    cited_upper: Optional[int]
    provenance: dict = field(default_factory=dict)


# Upper bounds proved in the literature by case analysis we do not mechanize.
CITED_UPPER = {5: 7}


def c2_bracket(k: int, threads: int = 1) -> C2Bracket:
    """Bracket on c(2,k) from alpha values and the closed-form bounds."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    table = alpha_table(k, threads)
    lows = {"alpha(2,k)": table[k].value}
    for j in range(k):
        lows[f"alpha(2,{j})-{k - j}"] = table[j].value - (k - j)
    if k == 0:
        lows["2^n"] = 4
    ell = ell_search(k + 1, threads).value
    ups = {
        "ell(2,k+1)-1": ell - 1,
        "ell_pigeonhole(2,s_{2,k+1})-1": ell_pigeonhole(2, s_nk(2, k + 1)) - 1,
        "averkov_linear": averkov_linear(2, k),
        "aliev_linear": aliev_linear(2, k),
        "c2_upper": c2_upper(k),
        "bell_bound": bell_bound(2, k),
    }
    lower = max(lows.values())
    upper = min(ups.values())
    if lower > upper:
        raise AssertionError(f"empty bracket for c(2,{k}): {lower} > {upper}")
    prov = {
        "lower": sorted(name for name, v in lows.items() if v == lower),
        "upper": sorted(name for name, v in ups.items() if v == upper),
        "exhaustive": all(r.certificate.exhaustive for r in table.values()),
    }
    cited = CITED_UPPER.get(k)
    if cited is not None:
        prov["cited_upper"] = "published case analysis, not mechanized"
    return C2Bracket(k, lower, upper, cited, prov)


# ---------------------------------------------------------------------------
# mu_c over lattice grids


def mu_c_search(n: int, s: int, grid: int, threads: int = 1) -> MuResult:
    """min |M(V)| over V in convex position, |V| = s, V inside [0,grid)^n.

    This is an upper bound on mu_c(n,s), which ranges over real sets. The
    search stops early once the certified lower bound is met.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    pts = sorted(itertools.product(range(grid), repeat=n))
    lower = mu_lower_bound(n, s)
    # the lexicographically first point can be translated to x_1 = 0
    starts = [i for i, p in enumerate(pts) if p[0] == 0]

    def branch(i0):
        best = [None, None]
        nodes = [0]

        def rec(start, chosen, mids):
            nodes[0] += 1
            if best[0] is not None and (mids >= best[0] or best[0] <= lower):
                return
            if len(chosen) == s:
                best[0], best[1] = mids, list(chosen)
                return
            for i in range(start, len(pts)):
                cand = chosen + [pts[i]]
                if not _convex(cand, n):
                    continue
                rec(i + 1, cand, midpoint_count(cand))

        rec(i0 + 1, [pts[i0]], 0)
        return best[0], best[1], nodes[0]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(branch, starts))
    else:
        results = [branch(i0) for i0 in starts]
    found = [(v, w) for v, w, _ in results if v is not None]
    if not found:
        raise ValueError(f"no {s} points in convex position fit in a grid of side {grid}")
    value, wit = min(found)
    nodes = sum(r[2] for r in results)
    region = {"grid": grid, "dim": n}
    cert = SearchCertificate(region, "translation (first coordinate of the least point is 0)", True, nodes)
    return MuResult(n, s, value, LatticePointSet(wit), lower, cert)


def _convex(pts, n):
    if len(pts) <= 2:
        return True
    if n == 2:
        return len(kernels.hull2d(pts)) == len(pts)
    return in_convex_position(pts)
