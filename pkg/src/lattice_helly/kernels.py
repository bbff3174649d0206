"""Dispatch for the planar integer kernels.

The compiled module is used when it imported and the coordinates are small
enough for 64-bit arithmetic; otherwise the pure-Python reference runs.
Set ``LATTICE_HELLY_PURE=1`` to force the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("LATTICE_HELLY_PURE"):
        raise ImportError("pure kernels requested")
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# |coord| below this keeps every cross product and Pick sum inside int64
_SAFE = 1 << 28


def _small(points):
    for p in points:
        for c in p:
            if not -_SAFE < c < _SAFE:
                return False
    return True


def hull2d(points):
    points = list(points)
    if _ckernels is not None and _small(points):
        return _ckernels.hull2d(points)
    return _pykernels.hull2d(points)


def polygon_counts(verts):
    if _ckernels is not None and _small(verts):
        return _ckernels.polygon_counts(verts)
    return _pykernels.polygon_counts(verts)


def extend_polygon(verts, npts):
    # the relaxed polygon stays within a few units of the input
    if _ckernels is not None and _small(verts) and npts < 1 << 20:
        return _ckernels.extend_polygon(verts, npts)
    return _pykernels.extend_polygon(verts, npts)


def midpoint_count(points):
    points = list(points)
    if (
        _ckernels is not None
        and points
        and len(points[0]) == 2
        and len(points) <= 4096
        and _small(points)
    ):
        return _ckernels.midpoint_count(points)
    return _pykernels.midpoint_count(points)
