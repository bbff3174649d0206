"""Pure-Python 2D integer kernels.

Reference implementation for ``_ckernels.pyx``; both expose the same
functions and must agree bit for bit. Points are tuples of Python ints.
"""
from math import gcd


def hull2d(points):
    """Strict convex hull vertices, counterclockwise from the lexicographic minimum.

    Collinear input gives its two endpoints, a single point gives itself.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2:
            o, a = lower[-2], lower[-1]
            if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) <= 0:
                lower.pop()
            else:
                break
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2:
            o, a = upper[-2], upper[-1]
            if (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]) <= 0:
                upper.pop()
            else:
                break
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def polygon_counts(verts):
    """(twice the area, boundary lattice points, total lattice points) of a hull."""
    v = len(verts)
    if v == 1:
        return 0, 1, 1
    if v == 2:
        g = gcd(verts[1][0] - verts[0][0], verts[1][1] - verts[0][1])
        return 0, g + 1, g + 1
    area2 = 0
    boundary = 0
    for i in range(v):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % v]
        area2 += x0 * y1 - x1 * y0
        boundary += gcd(x1 - x0, y1 - y0)
    return area2, boundary, (area2 + boundary) // 2 + 1


def _floor_div(a, b):
    return a // b if b > 0 else (-a) // (-b)


def _ceil_div(a, b):
    return -_floor_div(-a, b)


def extend_polygon(verts, npts):
    """All one-point lattice extensions of a full-dimensional lattice polygon.

    ``verts`` is the counterclockwise vertex cycle of a polygon containing
    exactly ``npts`` lattice points. Returns ``(new_verts, new_npts)`` for
    every lattice point ``x`` outside the polygon such that conv(P + x)
    contains exactly ``npts + 1`` lattice points. Candidates are confined to
    the polygon relaxed by lattice distance one on every edge, which is a
    necessary condition.
    """
    v = len(verts)
    normals = []
    for i in range(v):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % v]
        dx, dy = x1 - x0, y1 - y0
        g = gcd(dx, dy)
        a, b = dy // g, -dx // g
        normals.append((a, b, a * x0 + b * y0 + 1))
    # vertices of the relaxed polygon bound the candidate box
    xs = []
    for i in range(v):
        a1, b1, c1 = normals[i]
        for j in range(i + 1, v):
            a2, b2, c2 = normals[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            X = c1 * b2 - c2 * b1
            Y = a1 * c2 - a2 * c1
            if det < 0:
                det, X, Y = -det, -X, -Y
            if all(a * X + b * Y <= c * det for a, b, c in normals):
                xs.append((X, det))
    xmin = min(_ceil_div(X, d) for X, d in xs)
    xmax = max(_floor_div(X, d) for X, d in xs)
    out = []
    for x in range(xmin, xmax + 1):
        lo, hi = None, None
        ok = True
        for a, b, c in normals:
            rhs = c - a * x
            if b > 0:
                t = _floor_div(rhs, b)
                hi = t if hi is None or t < hi else hi
            elif b < 0:
                t = _ceil_div(rhs, b)
                lo = t if lo is None or t > lo else lo
            elif rhs < 0:
                ok = False
                break
        if not ok or lo is None or hi is None:
            continue
        for y in range(lo, hi + 1):
            on_rim = False
            for a, b, c in normals:
                if a * x + b * y == c:
                    on_rim = True
                    break
            if not on_rim:
                continue
            new = hull2d(list(verts) + [(x, y)])
            if polygon_counts(new)[2] == npts + 1:
                out.append((tuple(new), npts + 1))
    return out


def midpoint_count(points):
    """Number of distinct pairwise midpoints that are not themselves input points."""
    pts = list(points)
    doubled = {tuple(2 * c for c in p) for p in pts}
    sums = set()
    for i in range(len(pts)):
        p = pts[i]
        for j in range(i + 1, len(pts)):
            q = pts[j]
            sums.add(tuple(a + b for a, b in zip(p, q)))
    return len(sums - doubled)
