import itertools
import math
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lattice_helly.ballhull import (
    GenericityError,
    _sign_sqrt_diff,
    ball_count,
    ball_hull_stats,
    ball_lattice_points,
    ball_spec,
    exponent_fit,
    gauss_deviation,
    generic_center,
    geometric_radii,
    inner_ball_check,
    is_generic,
    max_edge_check,
    mu_upper_from_ball,
    radius_sequence,
)
from lattice_helly.exactgeom import convex_hull
from lattice_helly.sumsets import midpoint_set
from lattice_helly.search import mu_c_search


def brute_ball(n, r, u):
    r = Fraction(r)
    c = [r * Fraction(x) for x in u]
    R = math.ceil(r) + 1
    box = itertools.product(*(range(math.floor(ci) - R, math.ceil(ci) + R + 1) for ci in c))
    return {p for p in box if sum((pi - ci) ** 2 for pi, ci in zip(p, c)) <= r * r}


def test_lattice_points_examples():
    assert len(ball_lattice_points(ball_spec(2, 5))) == 81
    assert ball_lattice_points(ball_spec(2, 5)).as_set() == brute_ball(2, 5, (0, 0))
    assert len(ball_lattice_points(ball_spec(2, 1))) == 5
    assert len(ball_lattice_points(ball_spec(1, Fraction(5, 2)))) == 5


def test_stats_examples():
    for r, want in ((5, (81, 12, 69)), (2, (13, 4, 9)), (1, (5, 4, 1))):
        s = ball_hull_stats(ball_spec(2, r))
        assert (s.N_r, s.v_r, s.k_r) == want


def test_stats_match_hull_oracle():
    pts = sorted(brute_ball(2, 7, (0, 0)))
    assert ball_hull_stats(ball_spec(2, 7)).v_r == len(convex_hull(pts))


def test_spec_validation():
    with pytest.raises(ValueError):
        ball_spec(2, 0)
    with pytest.raises(ValueError):
        ball_spec(2, 1, (1, 0))


@pytest.mark.parametrize("n,r,u", [(2, 50, (0, 0)), (2, 37, (Fraction(1, 3), Fraction(-2, 7))),
                                   (3, 9, (0, 0, 0)), (3, Fraction(17, 2), (Fraction(1, 5), 0, Fraction(-1, 9))),
                                   (1, 13, (Fraction(1, 2),))])
def test_gauss_count_matches_brute_force(n, r, u):
    assert ball_count(ball_spec(n, r, u)) == len(brute_ball(n, r, u))


def test_inner_and_edge_checks():
    assert inner_ball_check(ball_spec(2, 5))
    assert inner_ball_check(ball_spec(2, Fraction(3, 2)))
    with pytest.raises(ValueError):
        inner_ball_check(ball_spec(2, Fraction(7, 5)))
    with pytest.raises(ValueError):
        max_edge_check(ball_spec(2, 1))
    assert max_edge_check(ball_spec(2, 5)) and ball_hull_stats(ball_spec(2, 5)).max_edge_sq == 10
    assert max_edge_check(ball_spec(2, 2)) and ball_hull_stats(ball_spec(2, 2)).max_edge_sq == 8
    assert max_edge_check(ball_spec(3, 3))


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=Fraction(3, 2), max_value=30, max_denominator=50),
       st.fractions(min_value=Fraction(-1, 2), max_value=Fraction(1, 2), max_denominator=100),
       st.fractions(min_value=Fraction(-1, 2), max_value=Fraction(1, 2), max_denominator=100))
def test_checks_hold_for_random_balls(r, u1, u2):
    spec = ball_spec(2, r, (u1, u2))
    assert inner_ball_check(spec) and max_edge_check(spec)


def test_generic_center():
    assert not is_generic((0, 0), 16)
    u1, u2 = generic_center(2, 1), generic_center(2, 2)
    assert u1 != u2
    for u in (u1, u2):
        assert all(abs(c) <= Fraction(1, 4) for c in u)
        assert all(c.denominator >= 2 ** 60 or c == 0 for c in u)


def test_radius_sequence():
    u = generic_center(2, 5)
    seq = radius_sequence(u, 10)
    assert list(seq.radii) == sorted(seq.radii) and len(set(seq.radii)) == 10
    for i, r in enumerate(seq.radii, 1):
        assert len(brute_ball(2, r, u)) == i
    # r_1 encloses only the nearest lattice point (the origin)
    assert brute_ball(2, seq.radii[0], u) == {(0, 0)}


def test_radius_sequence_nongeneric():
    with pytest.raises(GenericityError):
        radius_sequence((0, 0), 3)


def test_exponent_fit():
    f = exponent_fit(2, geometric_radii(20, 400, 8), generic_center(2, 0))
    assert f.target == Fraction(2, 3)
    assert abs(f.slope - 2 / 3) <= 0.15
    assert exponent_fit(3, [2, 3, 5, 8, 12, 20], (0, 0, 0)).target == Fraction(3, 2)
    with pytest.raises(ValueError):
        exponent_fit(2, [10] * 6)
    with pytest.raises(ValueError):
        exponent_fit(2, [10, 11, 12, 13, 14])


def test_mu_upper_from_ball():
    r = mu_upper_from_ball(2, 4)
    assert r.bound >= mu_c_search(2, 4, 6).value
    assert len(r.S) == 4
    assert midpoint_set(r.S).integral() == midpoint_set(r.S).points
    ratios = [mu_upper_from_ball(2, s).bound / s ** 3 for s in range(3, 9)]
    assert max(ratios) <= 1


def test_gauss_deviation_recorded():
    devs = [gauss_deviation(2, r)[2] for r in (10, 25, 50, 100, 200, 400)]
    assert all(d < 10 for d in devs)


getcontext().prec = 80


@given(st.fractions(0, 100, max_denominator=1000), st.fractions(0, 100, max_denominator=1000),
       st.fractions(-20, 20, max_denominator=1000))
def test_sign_sqrt_diff(t1, t2, d):
    got = _sign_sqrt_diff(t1, t2, d)
    D = lambda q: Decimal(q.numerator) / Decimal(q.denominator)
    val = D(t1).sqrt() - D(t2).sqrt() - D(d)
    if abs(val) > Decimal(10) ** -40:
        assert got == (1 if val > 0 else -1)
    # exact zero cases
    assert _sign_sqrt_diff(t1, t1, Fraction(0)) == 0


def test_sign_sqrt_diff_exact_zero():
    assert _sign_sqrt_diff(Fraction(9), Fraction(4), Fraction(1)) == 0
    assert _sign_sqrt_diff(Fraction(4), Fraction(9), Fraction(-1)) == 0
