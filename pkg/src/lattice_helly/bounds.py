"""Closed-form bounds on c(n,k) and related counts, all in exact arithmetic."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

# 355/113 exceeds pi, so dividing by it keeps area lower bounds valid
PI_UPPER = Fraction(355, 113)


def _ceil_div(a, b):
    return -(-a // b)


def dbs_base(n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2 ** n


def bell_bound(n: int, k: int) -> int:
    return (k + 2) ** n


def aliev_linear(n: int, k: int) -> int:
    t = _ceil_div(2 * (k + 1), 3)
    return t * 2 ** n - 2 * t + 2


def averkov_linear(n: int, k: int) -> int:
    return ((k + 1) // 2) * (2 ** n - 2) + 2 ** n


def c2_upper(k: int) -> int:
    """Largest v with v <= 4.43 (k+4)^(1/3), by integer cube comparison."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    rhs = 443 ** 3 * (k + 4)
    v = 0
    while (100 * (v + 1)) ** 3 <= rhs:
        v += 1
    return v


def rabinowitz_min_area(v: int) -> Fraction:
    """Certified lower bound v^3 / (8 pi^2) on the area of a lattice v-gon."""
    if v < 3:
        raise ValueError("v must be at least 3")
    return Fraction(v ** 3) / (8 * PI_UPPER ** 2)


def subspace_bound(n: int, d: int, c_d_k: int) -> int:
    """c(d,|X|) + 2(2^n - 2) for X in a d-dimensional affine subspace."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    return c_d_k + 2 * (2 ** n - 2)


def critical_bound(n: int, q: int) -> int:
    return q * (2 ** n - 1)


def ell_pigeonhole(n: int, s: int) -> int:
    return (s - 1) * 2 ** n + 1


@dataclass(frozen=True)
class LargeNBracket:
    n: int
    k: int
    lower: int
    upper: int
    printed_lower: int
    provenance: dict = field(default_factory=dict)


def large_n_bracket(n: int, k: int, c_d_k: Optional[int] = None) -> LargeNBracket:
    """Bracket on c(n,k) for 1 <= k <= n.

    The lower end is 2^(n+1) - 2, which holds for every k >= 1: the k = 1
    and collinear witnesses have 2(2^n - 1) points. The often quoted form
    2^(n+1) - k is weaker for k >= 2 and is false at k = 1, where the exact
    value is 2^(n+1) - 2; it is returned as ``printed_lower`` only.

    The upper end applies the affine-subspace bound with d = max(k-1, 1).
    c(1, k) = 2; for d >= 2 the value ``c_d_k`` may be supplied, otherwise
    averkov_linear(d, k) is used.
    """
    if not 1 <= k <= n:
        raise ValueError("large_n_bracket requires 1 <= k <= n")
    d = max(k - 1, 1)
    if d == 1:
        cdk, src = 2, "c(1,k)=2"
    elif c_d_k is not None:
        cdk, src = c_d_k, "supplied c(d,k)"
    else:
        cdk, src = averkov_linear(d, k), "averkov_linear(d,k)"
    lower = 2 ** (n + 1) - 2
    upper = subspace_bound(n, d, cdk)
    prov = {
        "lower": "witness with 2(2^n-1) points and k non-vertex points",
        "upper": f"subspace_bound with d={d}, {src}",
    }
    return LargeNBracket(n, k, lower, upper, 2 ** (n + 1) - k, prov)


def validate_monotonic_deficit(table: Mapping[int, int]) -> list:
    """Keys k where table[k] < table[k-1] - 1. The k range must be contiguous."""
    ks = sorted(table)
    if ks and ks != list(range(ks[0], ks[-1] + 1)):
        raise ValueError("k range must be contiguous")
    return [k for k in ks[1:] if table[k] < table[k - 1] - 1]


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    entries: dict  # name -> value
    tags: dict  # name -> "lower" | "upper" | "exact"

    def lower(self) -> int:
        vals = [v for name, v in self.entries.items() if self.tags[name] in ("lower", "exact")]
        return max(vals) if vals else 0

    def upper(self):
        vals = [v for name, v in self.entries.items() if self.tags[name] in ("upper", "exact")]
        return min(vals) if vals else None

    def consistent(self) -> bool:
        up = self.upper()
        return up is None or self.lower() <= up


def bound_report(n: int, k: int) -> BoundReport:
    """Every closed-form bound that applies to c(n,k)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    e, t = {}, {}

    def put(name, val, tag):
        e[name] = val
        t[name] = tag

    put("bell_bound", bell_bound(n, k), "upper")
    put("aliev_linear", aliev_linear(n, k), "upper")
    put("averkov_linear", averkov_linear(n, k), "upper")
    if k == 0:
        put("dbs_base", dbs_base(n), "exact")
    if k in (1, 2):
        put("c_n_small_k", 2 * (2 ** n - 1), "exact")
    elif k >= 3:
        put("witness_lower", 2 * (2 ** n - 1), "lower")
    if n == 2:
        put("c2_upper", c2_upper(k), "upper")
    if 1 <= k <= n:
        br = large_n_bracket(n, k)
        put("large_n_lower", br.lower, "lower")
        put("large_n_upper", br.upper, "upper")
    rep = BoundReport(n, k, e, t)
    if not rep.consistent():
        raise AssertionError(f"bound report for n={n}, k={k} is inconsistent: {e}")
    return rep
