import pytest
from hypothesis import given, settings, strategies as st

from lattice_helly import _pykernels, kernels

ck = pytest.importorskip("lattice_helly._ckernels")

coord = st.integers(-40, 40)
pts2 = st.lists(st.tuples(coord, coord), min_size=1, max_size=40)


@given(pts2)
def test_hull_backends_agree(pts):
    assert list(map(tuple, ck.hull2d(pts))) == list(map(tuple, _pykernels.hull2d(pts)))


@given(pts2)
def test_polygon_counts_agree(pts):
    hull = _pykernels.hull2d(pts)
    if len(hull) >= 3:
        assert tuple(ck.polygon_counts(hull)) == tuple(_pykernels.polygon_counts(hull))


@given(st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=1, max_size=25, unique=True))
def test_midpoint_count_agree(pts):
    assert ck.midpoint_count(pts) == _pykernels.midpoint_count(pts)


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=3, max_size=12))
def test_extend_polygon_agree(pts):
    hull = _pykernels.hull2d(pts)
    if len(hull) < 3:
        return
    npts = _pykernels.polygon_counts(hull)[2]
    a = sorted((tuple(map(tuple, h)), n) for h, n in ck.extend_polygon(hull, npts))
    b = sorted((tuple(map(tuple, h)), n) for h, n in _pykernels.extend_polygon(hull, npts))
    assert a == b


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_hull_square_ccw_from_min():
    assert [tuple(p) for p in _pykernels.hull2d([(1, 1), (0, 0), (1, 0), (0, 1)])] == [(0, 0), (1, 0), (1, 1), (0, 1)]
