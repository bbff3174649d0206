# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled 2D integer kernels; same API as ``_pykernels``.

All arithmetic is on C ``long long``. Callers (``kernels.py``) only route
inputs here whose coordinates are small enough that every intermediate
product fits in 63 bits.
"""
from libc.stdlib cimport malloc, free, qsort


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline long long _floor_div(long long a, long long b) nogil:
    cdef long long q
    if b < 0:
        a = -a
        b = -b
    q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef inline long long _ceil_div(long long a, long long b) nogil:
    return -_floor_div(-a, b)


cdef int _cmp_pt(const void* pa, const void* pb) noexcept nogil:
    cdef const long long* a = <const long long*> pa
    cdef const long long* b = <const long long*> pb
    if a[0] < b[0]:
        return -1
    if a[0] > b[0]:
        return 1
    if a[1] < b[1]:
        return -1
    if a[1] > b[1]:
        return 1
    return 0


cdef int _cmp_ll(const void* pa, const void* pb) noexcept nogil:
    cdef long long a = (<const long long*> pa)[0]
    cdef long long b = (<const long long*> pb)[0]
    return (a > b) - (a < b)


cdef int _hull(long long* pts, int n, long long* out) noexcept nogil:
    """Monotone chain on ``n`` points (x, y interleaved). Writes the strict
    hull to ``out`` and returns its size. Sorts and dedups ``pts`` in place."""
    cdef int i, k, m, t
    cdef long long ox, oy, ax, ay
    qsort(pts, n, 2 * sizeof(long long), _cmp_pt)
    m = 0
    for i in range(n):
        if m == 0 or pts[2 * i] != pts[2 * (m - 1)] or pts[2 * i + 1] != pts[2 * (m - 1) + 1]:
            pts[2 * m] = pts[2 * i]
            pts[2 * m + 1] = pts[2 * i + 1]
            m += 1
    if m <= 2:
        for i in range(2 * m):
            out[i] = pts[i]
        return m
    k = 0
    for i in range(m):
        while k >= 2:
            ox = out[2 * (k - 2)]
            oy = out[2 * (k - 2) + 1]
            ax = out[2 * (k - 1)]
            ay = out[2 * (k - 1) + 1]
            if (ax - ox) * (pts[2 * i + 1] - oy) - (ay - oy) * (pts[2 * i] - ox) <= 0:
                k -= 1
            else:
                break
        out[2 * k] = pts[2 * i]
        out[2 * k + 1] = pts[2 * i + 1]
        k += 1
    t = k + 1
    i = m - 2
    while i >= 0:
        while k >= t:
            ox = out[2 * (k - 2)]
            oy = out[2 * (k - 2) + 1]
            ax = out[2 * (k - 1)]
            ay = out[2 * (k - 1) + 1]
            if (ax - ox) * (pts[2 * i + 1] - oy) - (ay - oy) * (pts[2 * i] - ox) <= 0:
                k -= 1
            else:
                break
        out[2 * k] = pts[2 * i]
        out[2 * k + 1] = pts[2 * i + 1]
        k += 1
        i -= 1
    return k - 1


cdef long long _total_points(long long* v, int n) noexcept nogil:
    cdef int i, j
    cdef long long area2 = 0, boundary = 0
    if n == 1:
        return 1
    if n == 2:
        return _gcd(v[2] - v[0], v[3] - v[1]) + 1
    for i in range(n):
        j = (i + 1) % n
        area2 += v[2 * i] * v[2 * j + 1] - v[2 * j] * v[2 * i + 1]
        boundary += _gcd(v[2 * j] - v[2 * i], v[2 * j + 1] - v[2 * i + 1])
    return (area2 + boundary) / 2 + 1


def hull2d(points):
    cdef int n = len(points)
    cdef int i, h
    if n == 0:
        return []
    # the monotone chain may transiently hold 2n points
    cdef long long* buf = <long long*> malloc(6 * n * sizeof(long long))
    cdef long long* out = buf + 2 * n
    try:
        for i, p in enumerate(points):
            buf[2 * i] = p[0]
            buf[2 * i + 1] = p[1]
        h = _hull(buf, n, out)
        return [(out[2 * i], out[2 * i + 1]) for i in range(h)]
    finally:
        free(buf)


def polygon_counts(verts):
    cdef int v = len(verts)
    cdef long long area2 = 0, boundary = 0
    cdef long long x0, y0, x1, y1
    cdef int i
    if v == 1:
        return 0, 1, 1
    if v == 2:
        boundary = _gcd(verts[1][0] - verts[0][0], verts[1][1] - verts[0][1])
        return 0, boundary + 1, boundary + 1
    for i in range(v):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % v]
        area2 += x0 * y1 - x1 * y0
        boundary += _gcd(x1 - x0, y1 - y0)
    return area2, boundary, (area2 + boundary) // 2 + 1


def extend_polygon(verts, long long npts):
    cdef int v = len(verts)
    cdef int i, j, h, nrm
    cdef long long x, y, a, b, c, rhs, t, lo, hi, det, X, Y
    cdef long long xmin = 0, xmax = 0
    cdef bint have_box = False, ok, rim, lo_set, hi_set, feasible
    cdef long long* nv = <long long*> malloc(3 * v * sizeof(long long))
    cdef long long* work = <long long*> malloc(6 * (v + 1) * sizeof(long long))
    cdef long long* out = work + 2 * (v + 1)
    cdef long long dx, dy, g
    result = []
    try:
        for i in range(v):
            x0, y0 = verts[i]
            x1, y1 = verts[(i + 1) % v]
            dx = x1 - x0
            dy = y1 - y0
            g = _gcd(dx, dy)
            nv[3 * i] = dy / g
            nv[3 * i + 1] = -dx / g
            nv[3 * i + 2] = nv[3 * i] * <long long> x0 + nv[3 * i + 1] * <long long> y0 + 1
        with nogil:
            for i in range(v):
                for j in range(i + 1, v):
                    det = nv[3 * i] * nv[3 * j + 1] - nv[3 * j] * nv[3 * i + 1]
                    if det == 0:
                        continue
                    X = nv[3 * i + 2] * nv[3 * j + 1] - nv[3 * j + 2] * nv[3 * i + 1]
                    Y = nv[3 * i] * nv[3 * j + 2] - nv[3 * j] * nv[3 * i + 2]
                    if det < 0:
                        det = -det
                        X = -X
                        Y = -Y
                    feasible = True
                    for nrm in range(v):
                        if nv[3 * nrm] * X + nv[3 * nrm + 1] * Y > nv[3 * nrm + 2] * det:
                            feasible = False
                            break
                    if not feasible:
                        continue
                    t = _ceil_div(X, det)
                    if not have_box or t < xmin:
                        xmin = t
                    t = _floor_div(X, det)
                    if not have_box or t > xmax:
                        xmax = t
                    have_box = True
        if not have_box:
            return result
        for i in range(v):
            work[2 * i] = verts[i][0]
            work[2 * i + 1] = verts[i][1]
        x = xmin
        while x <= xmax:
            lo_set = False
            hi_set = False
            ok = True
            lo = 0
            hi = 0
            for nrm in range(v):
                a = nv[3 * nrm]
                b = nv[3 * nrm + 1]
                c = nv[3 * nrm + 2]
                rhs = c - a * x
                if b > 0:
                    t = _floor_div(rhs, b)
                    if not hi_set or t < hi:
                        hi = t
                        hi_set = True
                elif b < 0:
                    t = _ceil_div(rhs, b)
                    if not lo_set or t > lo:
                        lo = t
                        lo_set = True
                elif rhs < 0:
                    ok = False
                    break
            if ok and lo_set and hi_set:
                y = lo
                while y <= hi:
                    rim = False
                    for nrm in range(v):
                        if nv[3 * nrm] * x + nv[3 * nrm + 1] * y == nv[3 * nrm + 2]:
                            rim = True
                            break
                    if rim:
                        for i in range(v):
                            work[2 * i] = verts[i][0]
                            work[2 * i + 1] = verts[i][1]
                        work[2 * v] = x
                        work[2 * v + 1] = y
                        h = _hull(work, v + 1, out)
                        if _total_points(out, h) == npts + 1:
                            result.append(
                                (tuple([(out[2 * i], out[2 * i + 1]) for i in range(h)]), npts + 1)
                            )
                    y += 1
            x += 1
        return result
    finally:
        free(nv)
        free(work)


def midpoint_count(points):
    cdef int n = len(points)
    cdef int i, j, m, distinct
    cdef long long OFF = 1 << 30
    cdef long long SCALE = 1LL << 32
    if n == 0:
        return 0
    if len(points[0]) != 2:
        raise ValueError("compiled midpoint_count is planar only")
    cdef long long* xs = <long long*> malloc(2 * n * sizeof(long long))
    cdef long long* doubled = <long long*> malloc(n * sizeof(long long))
    cdef long long npairs = (<long long> n) * (n - 1) // 2
    cdef long long* sums = <long long*> malloc((npairs + 1) * sizeof(long long))
    cdef long long key
    cdef int lo, hi, mid
    cdef bint found
    try:
        for i, p in enumerate(points):
            xs[2 * i] = p[0]
            xs[2 * i + 1] = p[1]
            doubled[i] = (2 * xs[2 * i] + OFF) * SCALE + (2 * xs[2 * i + 1] + OFF)
        with nogil:
            m = 0
            for i in range(n):
                for j in range(i + 1, n):
                    sums[m] = (xs[2 * i] + xs[2 * j] + OFF) * SCALE + (xs[2 * i + 1] + xs[2 * j + 1] + OFF)
                    m += 1
            qsort(sums, m, sizeof(long long), _cmp_ll)
            qsort(doubled, n, sizeof(long long), _cmp_ll)
            distinct = 0
            for i in range(m):
                if i > 0 and sums[i] == sums[i - 1]:
                    continue
                key = sums[i]
                lo = 0
                hi = n - 1
                found = False
                while lo <= hi:
                    mid = (lo + hi) // 2
                    if doubled[mid] == key:
                        found = True
                        break
                    elif doubled[mid] < key:
                        lo = mid + 1
                    else:
                        hi = mid - 1
                if not found:
                    distinct += 1
        return distinct
    finally:
        free(xs)
        free(doubled)
        free(sums)
