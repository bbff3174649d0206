"""Explicit convex-position lattice sets with a known number of non-vertex points."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .exactgeom import LatticePointSet, integer_hull


@dataclass(frozen=True)
class WitnessConfig:
    name: str
    dim: int
    V: LatticePointSet
    expected_nonvertex: int
    expected_size: int


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    actual_k: int
    size: int
    convex_position: bool
    nonvertex: LatticePointSet


def _cubes(n):
    neg = [p for p in itertools.product((-1, 0), repeat=n)]
    pos = [p for p in itertools.product((0, 1), repeat=n)]
    return neg, pos


def k1_witness(n: int) -> WitnessConfig:
    """({-1,0}^n u {0,1}^n) minus the origin."""
    if n < 1:
        raise ValueError("n must be at least 1")
    neg, pos = _cubes(n)
    zero = (0,) * n
    V = sorted((set(neg) | set(pos)) - {zero})
    return WitnessConfig(f"k1(n={n})", n, LatticePointSet(V, n), 1, 2 * (2 ** n - 1))


def collinear_witness(n: int, k: int) -> WitnessConfig:
    """({-1,0}^n u {0,1}^n u {k*1}) minus {0, 1}: the non-vertex points are j*1, j < k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 2:
        raise ValueError("k must be at least 2")
    neg, pos = _cubes(n)
    zero, one = (0,) * n, (1,) * n
    V = (set(neg) | set(pos) | {(k,) * n}) - {zero, one}
    return WitnessConfig(f"collinear(n={n},k={k})", n, LatticePointSet(sorted(V), n), k, 2 * (2 ** n - 1))


def k2_witness(n: int) -> WitnessConfig:
    w = collinear_witness(n, 2)
    return WitnessConfig(f"k2(n={n})", n, w.V, 2, w.expected_size)


HEXAGON = ((0, 0), (0, 1), (1, 2), (3, 3), (2, 1), (1, 0))
OCTAGON = ((1, 0), (2, 0), (3, 1), (3, 2), (2, 3), (1, 3), (0, 2), (0, 1))
HEPTAGON = ((1, 0), (0, 1), (0, 2), (1, 3), (2, 3), (4, 2), (3, 1))


def figure_witnesses() -> tuple:
    return (
        WitnessConfig("hexagon", 2, LatticePointSet(HEXAGON), 2, 6),
        WitnessConfig("octagon", 2, LatticePointSet(OCTAGON), 4, 8),
        WitnessConfig("heptagon", 2, LatticePointSet(HEPTAGON), 5, 7),
    )


def verify_witness(V, expected_k: int) -> WitnessCheck:
    if not isinstance(V, LatticePointSet):
        V = LatticePointSet(V)
    verts, allp = integer_hull(V)
    convex = len(verts) == len(V)
    extra = LatticePointSet([p for p in allp if p not in verts], V.dim)
    actual = len(extra)
    return WitnessCheck(convex and actual == expected_k, actual, len(V), convex, extra)


def verify_config(w: WitnessConfig) -> WitnessCheck:
    chk = verify_witness(w.V, w.expected_nonvertex)
    ok = chk.ok and chk.size == w.expected_size
    return WitnessCheck(ok, chk.actual_k, chk.size, chk.convex_position, chk.nonvertex)


def by_name(name: str, n: int = 2, k: int = 2) -> WitnessConfig:
    """Look up a witness the way the CLI names them."""
    figs = {w.name: w for w in figure_witnesses()}
    if name == "k1":
        return k1_witness(n)
    if name == "k2":
        return k2_witness(n)
    if name == "collinear":
        return collinear_witness(n, k)
    if name in figs:
        return figs[name]
    raise KeyError(f"unknown witness {name!r}; choose k1, k2, collinear, {', '.join(figs)}")
