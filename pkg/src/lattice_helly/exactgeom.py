"""Exact lattice geometry: point sets, H-representations, hulls, Pick counts.

No floating point is used in any decision. Planar hulls go through the
kernel dispatch in :mod:`lattice_helly.kernels`; higher-dimensional hulls use
extreme-point tests solved by the exact simplex in :mod:`lattice_helly.lp`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from operator import index
from typing import Iterable, Optional, Sequence

from . import _pykernels, kernels, lp


class DimensionError(ValueError):
    """Points of different dimensions were mixed."""


class UnboundedError(ValueError):
    """Lattice points of an unbounded region were requested without a box."""


def _as_int(c):
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError(f"non-integral coordinate {c}")
        return c.numerator
    try:
        return index(c)
    except TypeError:
        raise ValueError(f"non-integral coordinate {c!r}") from None


def _as_point(p):
    if isinstance(p, (int, Fraction)) and not isinstance(p, bool):
        return (_as_int(p),)
    return tuple(_as_int(c) for c in p)


class LatticePointSet:
    """Ordered set of distinct integer points of a common dimension.

    Order is kept as given (file round trips depend on it); equality and
    hashing ignore order. Plain ints are read as 1-dimensional points.
    """

    __slots__ = ("points", "dim", "_set")

    def __init__(self, points: Iterable = (), dim: Optional[int] = None):
        pts = tuple(_as_point(p) for p in points)
        if dim is None:
            if not pts:
                raise DimensionError("dimension of an empty set must be given")
            dim = len(pts[0])
        for p in pts:
            if len(p) != dim:
                raise DimensionError(f"point {p} is not {dim}-dimensional")
        s = frozenset(pts)
        if len(s) != len(pts):
            raise ValueError("duplicate point in LatticePointSet")
        self.points = pts
        self.dim = dim
        self._set = s

    @classmethod
    def from_iter(cls, points: Iterable, dim: Optional[int] = None) -> "LatticePointSet":
        """Deduplicate and sort lexicographically."""
        pts = sorted({_as_point(p) for p in points})
        return cls(pts, dim)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return _as_point(p) in self._set

    def __eq__(self, other):
        if isinstance(other, LatticePointSet):
            return self.dim == other.dim and self._set == other._set
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, self._set))

    def __repr__(self):
        return f"LatticePointSet({list(self.points)!r}, dim={self.dim})"

    def as_set(self) -> frozenset:
        return self._set

    def sorted(self) -> "LatticePointSet":
        return LatticePointSet(sorted(self.points), self.dim)


def _frac_vec(v):
    return tuple(Fraction(c) for c in v)


@dataclass(frozen=True)
class HRepPolyhedron:
    """The rational system ``a_i . x <= b_i``. Normals must be nonzero."""

    rows: tuple
    dim: int

    def __init__(self, rows: Iterable, dim: Optional[int] = None):
        clean = []
        for a, b in rows:
            a = _frac_vec(a)
            if not any(a):
                raise ValueError("zero normal in H-representation")
            clean.append((a, Fraction(b)))
        if dim is None:
            if not clean:
                raise DimensionError("dimension of an empty system must be given")
            dim = len(clean[0][0])
        for a, _ in clean:
            if len(a) != dim:
                raise DimensionError(f"row of length {len(a)} in a {dim}-dimensional system")
        object.__setattr__(self, "rows", tuple(clean))
        object.__setattr__(self, "dim", dim)

    def __len__(self):
        return len(self.rows)

    def slack(self, i, x) -> Fraction:
        a, b = self.rows[i]
        return b - sum(ai * xi for ai, xi in zip(a, x))

    def contains(self, x) -> bool:
        return all(self.slack(i, x) >= 0 for i in range(len(self.rows)))

    def interior_contains(self, x) -> bool:
        return all(self.slack(i, x) > 0 for i in range(len(self.rows)))

    def drop(self, i) -> "HRepPolyhedron":
        return HRepPolyhedron(self.rows[:i] + self.rows[i + 1:], self.dim)

    def add(self, a, b) -> "HRepPolyhedron":
        return HRepPolyhedron(self.rows + ((_frac_vec(a), Fraction(b)),), self.dim)


@dataclass(frozen=True)
class LatticePolygonStats:
    """Vertex, non-vertex boundary and interior lattice counts plus area."""

    v: int
    b: int
    i: int
    area: Fraction
    degenerate: bool = field(default=False)

    @property
    def pick_holds(self) -> Optional[bool]:
        if self.degenerate:
            return None
        return self.area == self.i + Fraction(self.v + self.b, 2) - 1


def _points_of(S):
    if isinstance(S, LatticePointSet):
        return list(S.points), S.dim
    pts = [tuple(p) if not isinstance(p, (int, Fraction)) else (p,) for p in S]
    if not pts:
        raise ValueError("empty point set")
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise DimensionError(f"point {p} is not {dim}-dimensional")
    return pts, dim


def _all_int(pts):
    return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1) for p in pts for c in p)


# ---------------------------------------------------------------------------
# extreme points in any dimension


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _dot(p, q):
    return sum(a * b for a, b in zip(p, q))


class _HullOracle:
    """Exact membership in conv(points), with cached certificates.

    Separating hyperplanes found by the simplex are reused for later
    queries, and members found so far serve as midpoint certificates.
    """

    def __init__(self, points):
        self.points = [tuple(p) for p in points]
        self.set = set(self.points)
        self.members = set(self.set)
        self.cuts = []

    def _cut_rejects(self, p):
        for h, c in self.cuts:
            if _dot(h, p) + c > 0:
                return True
        return False

    def contains(self, p) -> bool:
        p = tuple(p)
        if p in self.members:
            return True
        if self._cut_rejects(p):
            return False
        # midpoint of two known members
        for q in self.members:
            r = tuple(2 * a - b for a, b in zip(p, q))
            if r in self.members and r != q:
                self.members.add(p)
                return True
        # cheap separator first: the direction away from the centroid
        k = len(self.points)
        h = tuple(k * a - sum(q[j] for q in self.points) for j, a in enumerate(p))
        if self._try_cut(h, p):
            return False
        res = lp.convex_combination(p, self.points)
        if res.status == lp.OPTIMAL:
            self.members.add(p)
            return True
        if not self._try_cut(res.farkas[:-1], p):
            raise AssertionError("Farkas certificate failed to separate")
        return False

    def _try_cut(self, h, p):
        top = max(_dot(h, q) for q in self.points)
        if _dot(h, p) > top:
            self.cuts.append((h, -top))
            return True
        return False


def _symmetric_probe_dirs(dim):
    dirs = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        dirs.append(tuple(e))
    for i, j in itertools.combinations(range(dim), 2):
        for s in (1, -1):
            e = [0] * dim
            e[i] = 1
            e[j] = s
            dirs.append(tuple(e))
    return dirs


def _extreme_points(pts, dim):
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    pset = set(pts)
    known_inner = set()
    # a point halfway between two others is never extreme
    for p in pts:
        for d in _symmetric_probe_dirs(dim):
            a = tuple(x + y for x, y in zip(p, d))
            b = tuple(x - y for x, y in zip(p, d))
            if a in pset and b in pset:
                known_inner.add(p)
                break
    cand = [p for p in pts if p not in known_inner]
    # unique maximisers of a few functionals are extreme
    known_outer = set()
    funcs = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        funcs.append(tuple(e))
        funcs.append(tuple(-x for x in e))
    funcs.append(tuple([1] * dim))
    funcs.append(tuple([-1] * dim))
    for f in funcs:
        vals = [(_dot(f, p), p) for p in cand]
        best = max(v for v, _ in vals)
        tops = [p for v, p in vals if v == best]
        if len(tops) == 1:
            known_outer.add(tops[0])
        else:
            # lexicographic extreme among the ties is still a vertex
            known_outer.add(min(tops))
            known_outer.add(max(tops))
    live = list(cand)
    out = []
    for p in cand:
        if p in known_outer:
            out.append(p)
            continue
        face = _support_face(p, live)
        if face is None:
            out.append(p)
            continue
        res = lp.convex_combination(p, [q for q in face if q != p])
        if res.status == lp.OPTIMAL:
            live.remove(p)
        else:
            out.append(p)
    return sorted(out)


def _support_face(p, pts):
    """Shrink ``pts`` to a face of its hull that contains ``p``.

    Uses ``p - mean`` as the functional, repeatedly. Returns None when ``p``
    is certified extreme (unique maximiser), otherwise the smallest face
    reached, against which the exact LP is then run.
    """
    face = list(pts)
    while True:
        k = len(face)
        mean = [sum(q[j] for q in face) for j in range(len(p))]
        h = tuple(k * a - m for a, m in zip(p, mean))
        if not any(h):
            return face
        hp = _dot(h, p)
        best = max(_dot(h, q) for q in face)
        if best > hp:
            return face
        face = [q for q in face if _dot(h, q) == hp]
        if len(face) == 1:
            return None


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _hull3d(pts):
    """Exact incremental hull of full-dimensional integer points in R^3.

    Returns ``(vertices, facets)`` with vertices sorted and facets as sorted
    ``(primitive normal, offset)`` pairs. Faces are kept triangulated; a
    point coplanar with a face counts as not seeing it, so coplanar or
    collinear points may survive as triangle corners and are filtered at the
    end by the rank of the normals around them. Returns None for flat input.
    """
    pts = sorted(set(pts))
    a = pts[0]
    b = next((p for p in pts if p != a), None)
    if b is None:
        return None
    ab = _sub(b, a)
    c = next((p for p in pts if any(_cross(ab, _sub(p, a)))), None)
    if c is None:
        return None
    nrm = _cross(ab, _sub(c, a))
    d = next((p for p in pts if _dot(nrm, _sub(p, a))), None)
    if d is None:
        return None
    # 4x the centroid of the start simplex stays strictly inside throughout
    inner = tuple(a[j] + b[j] + c[j] + d[j] for j in range(3))

    faces = {}
    edge_face = {}
    counter = itertools.count()

    def add(i, j, k):
        n = _cross(_sub(j, i), _sub(k, i))
        off = _dot(n, i)
        if _dot(n, inner) > 4 * off:
            i, j = j, i
            n = tuple(-x for x in n)
            off = -off
        f = next(counter)
        faces[f] = (i, j, k, n, off)
        for e in ((i, j), (j, k), (k, i)):
            edge_face[e] = f

    for tri in ((a, b, c), (a, b, d), (a, c, d), (b, c, d)):
        add(*tri)
    start = {a, b, c, d}
    # far points first so most later points fall inside early
    rest = sorted((p for p in pts if p not in start), key=lambda p: -sum((4 * x - y) ** 2 for x, y in zip(p, inner)))
    for p in rest:
        seen = [f for f, (_, _, _, n, off) in faces.items() if _dot(n, p) > off]
        if not seen:
            continue
        seen_set = set(seen)
        horizon = []
        for f in seen:
            i, j, k, _, _ = faces[f]
            for u, v in ((i, j), (j, k), (k, i)):
                if edge_face.get((v, u)) not in seen_set:
                    horizon.append((u, v))
        for f in seen:
            i, j, k, _, _ = faces.pop(f)
            for e in ((i, j), (j, k), (k, i)):
                if edge_face.get(e) == f:
                    del edge_face[e]
        for u, v in horizon:
            add(u, v, p)

    planes = {}
    around = {}
    for i, j, k, n, off in faces.values():
        g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]))
        key = (tuple(x // g for x in n), off // g)
        planes[key[0]] = key[1]
        for v in (i, j, k):
            around.setdefault(v, set()).add(key[0])
    verts = sorted(v for v, ns in around.items() if _rank(ns, 3) == 3)
    return verts, sorted(planes.items())


def convex_hull(S) -> tuple:
    """Vertices of conv(S).

    Planar input gives the counterclockwise cycle from the lexicographic
    minimum; other dimensions give the extreme points in lexicographic order.
    Lower-dimensional input is fine: collinear points give their two ends.
    """
    pts, dim = _points_of(S)
    if dim == 1:
        lo, hi = min(pts), max(pts)
        return (lo,) if lo == hi else (lo, hi)
    if dim == 2:
        if _all_int(pts):
            return tuple(kernels.hull2d([(_as_int(x), _as_int(y)) for x, y in pts]))
        return tuple(_pykernels.hull2d([(Fraction(x), Fraction(y)) for x, y in pts]))
    if dim == 3 and _all_int(pts):
        h = _hull3d([tuple(_as_int(c) for c in p) for p in pts])
        if h is not None:
            return tuple(h[0])
    return tuple(_extreme_points(pts, dim))


def _normal_from(pts):
    """Integer normal of the hyperplane through ``dim`` points, or None."""
    dim = len(pts[0])
    base = pts[0]
    M = [_sub(p, base) for p in pts[1:]]
    normal = []
    for j in range(dim):
        minor = [row[:j] + row[j + 1:] for row in M]
        normal.append((-1) ** j * _det(minor))
    if not any(normal):
        return None
    den = 1
    for c in normal:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    normal = [int(c * den) for c in normal]
    g = 0
    for c in normal:
        g = gcd(g, c)
    return tuple(c // g for c in normal)


def _det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return det


def affine_rank(S) -> int:
    """Dimension of the affine hull of S."""
    pts, dim = _points_of(S)
    base = pts[0]
    rows = [[Fraction(x) for x in _sub(p, base)] for p in pts[1:]]
    rank = 0
    col = 0
    while rows and col < dim:
        piv = next((r for r in rows if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        rows = [[x - r[col] / piv[col] * y for x, y in zip(r, piv)] for r in rows]
        rows = [r for r in rows if any(r)]
        rank += 1
        col += 1
    return rank


def hull_facets(S) -> list:
    """Facets of a full-dimensional conv(S) as ``(normal, offset)`` pairs.

    Normals are primitive integer vectors (for integer input) and every
    point satisfies ``normal . x <= offset``. Sorted for determinism.
    """
    pts, dim = _points_of(S)
    verts = list(convex_hull(pts))
    if dim == 2:
        if len(verts) < 3:
            raise ValueError("hull_facets needs a full-dimensional set")
        out = []
        for i in range(len(verts)):
            (x0, y0), (x1, y1) = verts[i], verts[(i + 1) % len(verts)]
            a = _normal_from([(x0, y0), (x1, y1)])
            # outward for a counterclockwise cycle is (dy, -dx)
            if a[0] * (y1 - y0) < 0 or a[1] * (x0 - x1) < 0:
                a = (-a[0], -a[1])
            out.append((a, _dot(a, verts[i])))
        return sorted(out)
    if affine_rank(verts) < dim:
        raise ValueError("hull_facets needs a full-dimensional set")
    if dim == 3 and _all_int(verts):
        return _hull3d([tuple(_as_int(c) for c in p) for p in verts])[1]
    found = {}
    for combo in itertools.combinations(range(len(verts)), dim):
        sub = [verts[i] for i in combo]
        a = _normal_from(sub)
        if a is None:
            continue
        off = _dot(a, sub[0])
        above = below = False
        for q in verts:
            s = _dot(a, q) - off
            if s > 0:
                above = True
            elif s < 0:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            a = tuple(-c for c in a)
            off = -off
        found[a] = off
    return sorted(found.items())


def hull_edges(S) -> list:
    """Edges of conv(S) as sorted vertex pairs."""
    pts, dim = _points_of(S)
    verts = list(convex_hull(pts))
    if dim == 1 or len(verts) <= 2:
        return [tuple(verts)] if len(verts) == 2 else []
    if dim == 2:
        return sorted(tuple(sorted((verts[i], verts[(i + 1) % len(verts)]))) for i in range(len(verts)))
    facets = hull_facets(verts)
    on = {v: [a for a, off in facets if _dot(a, v) == off] for v in verts}
    edges = []
    for p, q in itertools.combinations(verts, 2):
        common = [a for a in on[p] if a in set(on[q])]
        if len(common) >= dim - 1 and affine_rank([tuple(Fraction(c) for c in a) for a in common] + [(0,) * dim]) >= dim - 1:
            edges.append(tuple(sorted((p, q))))
    return sorted(edges)


# ---------------------------------------------------------------------------
# lattice points of H-representations


def _rank(vectors, dim):
    rows = [list(map(Fraction, v)) for v in vectors]
    r = 0
    for col in range(dim):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col] / rows[r][col]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def _primitive(a):
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def _recession_nonzero(rows, dim):
    """True if some nonzero d has a.d <= 0 for every row.

    The cone is trivial iff the normals have rank dim and some strictly
    positive combination of them vanishes (Stiemke), which is one LP.
    """
    normals = [_primitive(_frac_vec(a)) for a, _ in rows]
    if _rank(normals, dim) < dim:
        return True
    # lambda = 1 + mu with mu >= 0 and sum lambda_i a_i = 0
    A = [[a[j] for a in normals] for j in range(dim)]
    rhs = [-sum(a[j] for a in normals) for j in range(dim)]
    res = lp.solve([0] * len(normals), A, rhs)
    return res.status != lp.OPTIMAL


def is_bounded(P: HRepPolyhedron) -> bool:
    """Exact boundedness: empty or trivial recession cone."""
    if not is_feasible(P):
        return True
    return not _recession_nonzero(P.rows, P.dim)


def is_feasible(P: HRepPolyhedron) -> bool:
    res = lp.optimize_over([0] * P.dim, list(P.rows))
    return res.status == lp.OPTIMAL


def _floor(q):
    return q.numerator // q.denominator


def _ceil(q):
    return -((-q.numerator) // q.denominator)


def lp_box(P: HRepPolyhedron):
    """Integer box containing P, or None when P is empty. P must be bounded."""
    lo, hi = [], []
    for j in range(P.dim):
        c = [0] * P.dim
        c[j] = 1
        r1 = lp.optimize_over(c, list(P.rows))
        if r1.status == lp.INFEASIBLE:
            return None
        r2 = lp.optimize_over(c, list(P.rows), maximize=True)
        if r1.status != lp.OPTIMAL or r2.status != lp.OPTIMAL:
            raise UnboundedError("unbounded enumeration")
        lo.append(_ceil(r1.value))
        hi.append(_floor(r2.value))
    return tuple(lo), tuple(hi)


def _scan(rows, lo, hi, dim):
    """Lattice points of the system inside the box, last coordinate solved exactly."""
    out = []
    ranges = [range(lo[j], hi[j] + 1) for j in range(dim - 1)]
    for head in itertools.product(*ranges):
        zlo, zhi = lo[-1], hi[-1]
        ok = True
        for a, b in rows:
            rhs = b - sum(ai * xi for ai, xi in zip(a, head))
            an = a[-1]
            if an > 0:
                t = _floor(rhs / an)
                if t < zhi:
                    zhi = t
            elif an < 0:
                t = _ceil(rhs / an)
                if t > zlo:
                    zlo = t
            elif rhs < 0:
                ok = False
                break
            if zlo > zhi:
                ok = False
                break
        if ok:
            for z in range(zlo, zhi + 1):
                out.append(head + (z,))
    return out


def enumerate_lattice_points(P: HRepPolyhedron, box=None) -> LatticePointSet:
    """All integer points of P (inside ``box = (lo, hi)`` when given)."""
    dim = P.dim
    if box is None:
        if _recession_nonzero(P.rows, dim) and is_feasible(P):
            raise UnboundedError("unbounded enumeration")
        b = lp_box(P)
        if b is None:
            return LatticePointSet([], dim)
        lo, hi = b
    else:
        lo, hi = tuple(box[0]), tuple(box[1])
        if len(lo) != dim or len(hi) != dim:
            raise DimensionError("box dimension mismatch")
    if any(l > h for l, h in zip(lo, hi)):
        return LatticePointSet([], dim)
    return LatticePointSet(_scan(P.rows, lo, hi, dim), dim)


def polygon_rows(verts):
    """Integer inequalities ``a.x <= b`` of a counterclockwise lattice polygon."""
    rows = []
    v = len(verts)
    for i in range(v):
        (x0, y0), (x1, y1) = verts[i], verts[(i + 1) % v]
        dx, dy = x1 - x0, y1 - y0
        g = gcd(dx, dy)
        a, b = dy // g, -dx // g
        rows.append(((a, b), a * x0 + b * y0))
    return rows


# ---------------------------------------------------------------------------
# integer hulls, convex position, Pick


def _segment_points(p, q):
    d = _sub(q, p)
    g = 0
    for c in d:
        g = gcd(g, c)
    if g == 0:
        return [p]
    step = tuple(c // g for c in d)
    return [tuple(a + t * s for a, s in zip(p, step)) for t in range(g + 1)]


def _polygon_points(verts):
    rows = polygon_rows(verts)
    xs = [x for x, _ in verts]
    ys = [y for _, y in verts]
    rows = [((Fraction(a), Fraction(b)), Fraction(c)) for (a, b), c in rows]
    return _scan(rows, (min(xs), min(ys)), (max(xs), max(ys)), 2)


def integer_hull(S):
    """(vertices, all lattice points) of conv(S), both as LatticePointSet."""
    pts, dim = _points_of(S)
    pts = [_as_point(p) for p in pts]
    verts = list(convex_hull(pts))
    if len(verts) == 1:
        allp = verts
    elif len(verts) == 2 and (dim <= 2 or affine_rank(pts) == 1):
        allp = _segment_points(verts[0], verts[1])
    elif dim == 2:
        allp = _polygon_points(verts)
    else:
        oracle = _HullOracle(verts)
        lo = [min(v[j] for v in verts) for j in range(dim)]
        hi = [max(v[j] for v in verts) for j in range(dim)]
        allp = [p for p in itertools.product(*[range(l, h + 1) for l, h in zip(lo, hi)]) if oracle.contains(p)]
    return LatticePointSet(sorted(verts), dim), LatticePointSet(sorted(allp), dim)


def in_convex_position(S) -> bool:
    """True iff every point of S is a vertex of conv(S)."""
    pts, _ = _points_of(S)
    if len(set(map(tuple, pts))) != len(pts):
        return False
    return len(convex_hull(pts)) == len(pts)


def nonvertex_points(S) -> LatticePointSet:
    """iconv(S) minus the vertices of conv(S)."""
    verts, allp = integer_hull(S)
    return LatticePointSet([p for p in allp if p not in verts], allp.dim)


def pick_stats(polygon: Sequence) -> LatticePolygonStats:
    """Exact lattice statistics of a convex polygon given by its vertex cycle."""
    verts = [(_as_int(x), _as_int(y)) for x, y in polygon]
    v = len(verts)
    if v == 0:
        raise ValueError("empty polygon")
    area2, boundary, total = kernels.polygon_counts(verts)
    if v <= 2 or area2 == 0:
        if v == 1:
            return LatticePolygonStats(1, 0, 0, Fraction(0), True)
        ends = _pykernels.hull2d(verts)
        seg = len(_segment_points(ends[0], ends[-1]))
        nv = len(ends)
        return LatticePolygonStats(nv, seg - nv, 0, Fraction(0), True)
    if area2 < 0:
        raise ValueError("polygon must be positively oriented")
    interior = total - boundary
    return LatticePolygonStats(v, boundary - v, interior, Fraction(area2, 2))
