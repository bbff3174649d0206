import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lattice_helly.exactgeom import LatticePointSet, affine_rank
from lattice_helly.sumsets import (
    SizeGuardError,
    difference_set,
    freiman_check,
    has_avg5_solution,
    k_fold,
    midpoint_count,
    midpoint_set,
    minkowski_sum,
    parity_partition,
    plunnecke_check,
    triangulation_midpoint_bound,
)
from lattice_helly.witness import OCTAGON

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
KITE = [(0, 0), (1, 0), (0, 1), (2, 2)]


def L1(vals):
    return LatticePointSet([(v,) for v in vals], 1)


def test_midpoints_square():
    assert len(midpoint_set(SQUARE)) == 5
    assert midpoint_count(SQUARE) == 5


def test_midpoints_collinear():
    M = midpoint_set([(0, 0), (1, 0), (2, 0)])
    assert M.points == {(Fraction(1, 2), Fraction(0)), (Fraction(3, 2), Fraction(0))}


def test_midpoints_kite():
    assert len(midpoint_set(KITE)) == 6


def test_minkowski_examples():
    B = L1([3, 5, 9])
    assert minkowski_sum(L1([0]), B) == B
    assert minkowski_sum(L1([0, 1]), L1([0, 1])) == L1([0, 1, 2])
    assert k_fold(L1([0, 1, 3]), 2) == L1([0, 1, 2, 3, 4, 6])


def test_difference_examples():
    assert difference_set(L1([0, 1]), L1([0, 1])) == L1([-1, 0, 1])
    assert difference_set(L1([0, 1, 3]), L1([0])) == L1([0, 1, 3])


def test_five_fold_difference_brute():
    A = [0, 1, 3]
    five = k_fold(L1(A), 5)
    got = difference_set(five, five)
    brute = {sum(x) - sum(y) for x in itertools.product(A, repeat=5) for y in itertools.product(A, repeat=5)}
    assert got.as_set() == {(v,) for v in brute}


def test_parity_examples():
    P = parity_partition(SQUARE)
    assert len(P.classes) == 4 and all(len(c) == 1 for c in P.classes.values())
    P = parity_partition(OCTAGON)
    assert sorted(len(c) for c in P.classes.values()) == [2, 2, 2, 2]


def test_triangulation_bound_examples():
    assert triangulation_midpoint_bound([(0, 0), (1, 0), (2, 0)]) == 2
    assert triangulation_midpoint_bound(KITE) == 5 and midpoint_count(KITE) == 6
    assert triangulation_midpoint_bound(SQUARE) == 5 and midpoint_count(SQUARE) == 5


def test_avg5_examples():
    assert not has_avg5_solution(L1([1, 2, 3, 4, 5]))
    assert not has_avg5_solution(L1([0, 1]))
    assert not has_avg5_solution(L1([0, 1, 10, 100, 1000, 10000]))
    ok, wit = has_avg5_solution(L1([1, 2, 3, 4, 5, 6]), return_witness=True)
    # 1+2+4+5+6... needs sum 5*x6 with x6 outside the summands
    assert ok == _brute_avg5([1, 2, 3, 4, 5, 6])
    if ok:
        assert sum(wit[:5]) == 5 * wit[5] and len(set(wit)) == 6


def _brute_avg5(vals):
    for combo in itertools.permutations(vals, 6):
        if sum(combo[:5]) == 5 * combo[5]:
            return True
    return False


@settings(max_examples=60)
@given(st.lists(st.integers(-15, 15), min_size=0, max_size=8, unique=True))
def test_avg5_matches_brute(vals):
    assert has_avg5_solution(L1(vals)) == _brute_avg5(vals)


def test_plunnecke_examples():
    r = plunnecke_check(L1([0]))
    assert (r.lhs, r.rhs, r.holds) == (1, 1, True)
    r = plunnecke_check(L1([0, 1]))
    assert r.lhs == 11 and r.rhs == Fraction(3, 2) ** 10 * 2 and r.holds
    assert plunnecke_check(SQUARE).holds


def test_plunnecke_guard():
    with pytest.raises(SizeGuardError):
        plunnecke_check(L1(range(20)))
    assert plunnecke_check(L1(range(20)), guard=20).holds


pts2 = st.lists(st.tuples(st.integers(-8, 8), st.integers(-8, 8)), min_size=2, max_size=10, unique=True)


@given(pts2)
def test_midpoint_lower_bound(pts):
    assert midpoint_count(pts) >= triangulation_midpoint_bound(pts)
    assert midpoint_count(pts) == len(midpoint_set(pts))


@given(pts2)
def test_parity_classes(pts):
    P = parity_partition(pts)
    union = set().union(*(c.as_set() for c in P.classes.values()))
    assert union == set(pts) and len(P.classes) <= 4
    for c in P.classes.values():
        for p, q in itertools.combinations(list(c), 2):
            assert all((a + b) % 2 == 0 for a, b in zip(p, q))
        assert midpoint_set(c).integral() == midpoint_set(c).points


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=10, unique=True))
def test_freiman(vals):
    assert freiman_check(L1(vals))


@settings(max_examples=50)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6, unique=True))
def test_plunnecke_holds(vals):
    assert plunnecke_check(L1(vals)).holds
