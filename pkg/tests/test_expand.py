import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lattice_helly.exactgeom import HRepPolyhedron, UnboundedError, convex_hull
from lattice_helly.expand import (
    ExpansionError,
    RedundantSystemError,
    bell_expand,
    expand_batch,
    non_redundant_check,
    random_system,
    random_systems,
    shrink_one_facet,
    verify_expansion,
)

SQUARE = HRepPolyhedron([((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])
TRIANGLE = HRepPolyhedron([((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)])
CUBE = HRepPolyhedron([(e, 1) for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
                      + [(e, 0) for e in [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]])


def dot(a, x):
    return sum(p * q for p, q in zip(a, x))


def brute_points(rows, R, dim=2):
    """Lattice points of a system inside [-R, R]^dim, by plain enumeration."""
    return {x for x in itertools.product(range(-R, R + 1), repeat=dim) if all(dot(a, x) <= b for a, b in rows)}


def brute_gained(P, i, R):
    a, b = P.rows[i]
    rest = [r for j, r in enumerate(P.rows) if j != i]
    return {x for x in brute_points(rest, R, P.dim) if dot(a, x) > b}


# ---------------------------------------------------------------------------
# non-redundancy


def test_square_triangle_nonredundant():
    for P in (SQUARE, TRIANGLE, CUBE):
        rep = non_redundant_check(P)
        assert rep.non_redundant
        for i, w in enumerate(rep.witnesses):
            a, b = P.rows[i]
            assert dot(a, w) > b
            assert all(dot(c, w) <= d for j, (c, d) in enumerate(P.rows) if j != i)


def test_duplicate_rows_are_both_redundant():
    P = HRepPolyhedron(list(SQUARE.rows) + [SQUARE.rows[0]])
    assert non_redundant_check(P).redundant_rows == [0, 4]


def test_loose_row_is_redundant():
    P = HRepPolyhedron(list(SQUARE.rows) + [((1, 1), Fraction(5, 2))])
    assert non_redundant_check(P).redundant_rows == [4]


def test_fractional_tightening_is_redundant():
    # x <= 1 and x <= 3/2 cut the same lattice points, so either can go
    P = HRepPolyhedron(list(SQUARE.rows) + [((1, 0), Fraction(3, 2))])
    assert non_redundant_check(P).redundant_rows == [0, 4]


def test_unbounded_input_rejected():
    with pytest.raises(UnboundedError):
        non_redundant_check(HRepPolyhedron([((1, 0), 1), ((0, 1), 1)]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_non_redundant_against_box_search(seed):
    rng = random.Random(seed)
    raw = []
    while len(raw) < 5:
        a = (rng.randint(-2, 2), rng.randint(-2, 2))
        if any(a):
            raw.append((a, rng.randint(0, 3)))
    P = HRepPolyhedron(raw)
    try:
        rep = non_redundant_check(P)
    except UnboundedError:
        return
    for i, w in enumerate(rep.witnesses):
        gained = brute_gained(P, i, 14)
        if w is None:
            assert not gained
            continue
        a, b = P.rows[i]
        assert dot(a, w) > b
        assert all(dot(c, w) <= d for j, (c, d) in enumerate(P.rows) if j != i)
        if gained:
            assert dot(a, w) - b == min(dot(a, x) - b for x in gained)


# ---------------------------------------------------------------------------
# expansion


def check_expansion(P, res, R):
    """Independent recheck of an expansion by enumerating a box."""
    Pp = res.expanded
    X = brute_points(P.rows, R, P.dim)
    got = brute_points(Pp.rows, R, P.dim)
    V = [v for _, v in res.facet_points]
    assert len(V) == len(P) == len(set(V))
    assert got == X | set(V)
    for x in X:
        assert all(dot(a, x) < b for a, b in Pp.rows)
    for i, v in res.facet_points:
        assert [j for j, (a, b) in enumerate(Pp.rows) if dot(a, v) == b] == [i]
    assert len(convex_hull(V)) == len(V)


@pytest.mark.parametrize("P", [SQUARE, TRIANGLE], ids=["square", "triangle"])
def test_expand_small_polygons(P):
    res = bell_expand(P, seed=3)
    check_expansion(P, res, 12)
    assert all(res.checks.values())
    assert verify_expansion(res) == res.checks


def test_expand_cube():
    res = bell_expand(CUBE, seed=1)
    check_expansion(CUBE, res, 6)


def test_expanded_system_is_nonredundant():
    res = bell_expand(SQUARE, seed=0)
    assert non_redundant_check(res.expanded).non_redundant


def test_expand_is_deterministic():
    a = bell_expand(TRIANGLE, seed=11)
    b = bell_expand(TRIANGLE, seed=11)
    assert a.expanded.rows == b.expanded.rows and a.facet_points == b.facet_points


def test_expand_rejects_bad_input():
    with pytest.raises(RedundantSystemError):
        bell_expand(HRepPolyhedron(list(SQUARE.rows) + [((1, 1), 3)]))
    with pytest.raises(UnboundedError):
        bell_expand(HRepPolyhedron([((1, 0), 1), ((0, 1), 1)]))
    with pytest.raises(ValueError):
        bell_expand(HRepPolyhedron([((1, 0), Fraction(1, 3)), ((-1, 0), Fraction(-1, 4)),
                                    ((0, 1), 1), ((0, -1), 0)]))


def test_zero_budget_raises():
    with pytest.raises(ExpansionError):
        bell_expand(SQUARE, budget=0)


@pytest.mark.parametrize("idx", range(6))
def test_random_systems_expand(idx):
    P = random_systems(6, seed=5)[idx]
    assert 3 <= len(P) <= 8
    res = bell_expand(P, seed=idx)
    check_expansion(P, res, 30)


# ---------------------------------------------------------------------------
# shrinking


def test_shrink_square():
    res = bell_expand(SQUARE, seed=2)
    X = brute_points(SQUARE.rows, 4)
    assert len(X) == 4
    for keep in range(4):
        S = shrink_one_facet(res, keep)
        got = brute_points(S.rows, 12)
        assert got == X | {dict(res.facet_points)[keep]}
        assert len(got) == 5


def test_shrink_single_point():
    P = HRepPolyhedron([((1, 0), 0), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    res = bell_expand(P, seed=0)
    S = shrink_one_facet(res, 0)
    assert len(brute_points(S.rows, 10)) == 2


def test_shrink_index_checked():
    res = bell_expand(TRIANGLE, seed=0)
    with pytest.raises(IndexError):
        shrink_one_facet(res, 3)
    with pytest.raises(IndexError):
        shrink_one_facet(res, -1)


# ---------------------------------------------------------------------------
# batches


def test_random_system_properties():
    rng = random.Random(4)
    for _ in range(5):
        P = random_system(rng)
        assert non_redundant_check(P).non_redundant
        assert P.contains((0, 0))


def test_batch_is_thread_independent():
    systems = random_systems(4, seed=9)
    one = expand_batch(systems, seed=9, threads=1)
    many = expand_batch(systems, seed=9, threads=4)
    assert [r.expanded.rows for r in one] == [r.expanded.rows for r in many]
    assert [r.facet_points for r in one] == [r.facet_points for r in many]
