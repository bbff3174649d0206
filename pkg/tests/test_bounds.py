from fractions import Fraction

import pytest

from lattice_helly.bounds import (
    PI_UPPER,
    aliev_linear,
    averkov_linear,
    bell_bound,
    bound_report,
    c2_upper,
    critical_bound,
    dbs_base,
    ell_pigeonhole,
    large_n_bracket,
    rabinowitz_min_area,
    subspace_bound,
    validate_monotonic_deficit,
)


def test_dbs_base():
    assert [dbs_base(1), dbs_base(2), dbs_base(10)] == [2, 4, 1024]
    with pytest.raises(ValueError):
        dbs_base(0)


def test_bell():
    assert bell_bound(2, 0) == 4 and bell_bound(1, 3) == 5 and bell_bound(3, 2) == 64


def test_linear_examples():
    assert aliev_linear(2, 0) == 4 and aliev_linear(3, 2) == 14 and aliev_linear(2, 4) == 10
    assert averkov_linear(2, 0) == 4 and averkov_linear(2, 4) == 8 and averkov_linear(3, 1) == 14


def _c2_oracle(k):
    # largest v with v <= 4.43 (k+4)^(1/3), via exact rational cubes
    v = 0
    while Fraction(v + 1) ** 3 <= Fraction(443, 100) ** 3 * (k + 4):
        v += 1
    return v


def test_c2_upper():
    assert [c2_upper(0), c2_upper(5), c2_upper(26)] == [7, 9, 13]
    vals = [c2_upper(k) for k in range(500)]
    assert vals == [_c2_oracle(k) for k in range(500)]
    assert vals == sorted(vals)


def test_rabinowitz():
    assert PI_UPPER > Fraction(314159265, 10 ** 8)
    assert rabinowitz_min_area(3) < Fraction(1, 2)
    assert rabinowitz_min_area(4) < 1
    assert rabinowitz_min_area(10) / rabinowitz_min_area(5) == 8
    with pytest.raises(ValueError):
        rabinowitz_min_area(2)


def test_subspace_and_critical():
    assert subspace_bound(2, 1, 2) == 6 and subspace_bound(3, 1, 2) == 14
    assert subspace_bound(2, 2, 6) == 10
    assert critical_bound(2, 1) == 3 and critical_bound(3, 2) == 14 and critical_bound(2, 4) == 12


def test_ell_pigeonhole():
    assert ell_pigeonhole(2, 2) == 5 and ell_pigeonhole(3, 2) == 9 and ell_pigeonhole(2, 3) == 9


def test_monotonic_deficit():
    assert validate_monotonic_deficit({4: 8, 5: 7}) == []
    assert validate_monotonic_deficit({0: 4, 1: 6}) == []
    assert validate_monotonic_deficit({0: 4, 1: 2}) == [1]
    with pytest.raises(ValueError):
        validate_monotonic_deficit({0: 4, 2: 6})


def test_large_n_bracket():
    br = large_n_bracket(4, 2)
    assert br.lower == 30 and br.upper == 30
    assert large_n_bracket(5, 2).lower == 62
    # k = 1: the exact value 2(2^n - 1) sits inside the bracket
    br = large_n_bracket(3, 1)
    assert br.lower == 14 <= br.upper and br.printed_lower == 15
    with pytest.raises(ValueError):
        large_n_bracket(2, 3)
    with pytest.raises(ValueError):
        large_n_bracket(3, 0)


def test_linear_bound_order_and_base():
    for n in range(1, 11):
        assert aliev_linear(n, 0) == averkov_linear(n, 0) == bell_bound(n, 0) == 2 ** n
        for k in range(101):
            assert averkov_linear(n, k) <= aliev_linear(n, k) <= bell_bound(n, k)


def test_bound_reports_consistent():
    for n in range(1, 11):
        for k in range(0, 101, 7):
            rep = bound_report(n, k)
            assert rep.consistent()
    rep = bound_report(2, 4)
    assert rep.entries["averkov_linear"] == 8 and rep.upper() == 8
    rep = bound_report(3, 1)
    assert rep.lower() == rep.upper() == 14
