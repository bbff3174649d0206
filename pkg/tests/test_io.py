from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from _oracles import equivalent
from lattice_helly.exactgeom import HRepPolyhedron, LatticePointSet
from lattice_helly.io import (
    FormatError,
    dumps_hrep,
    dumps_pointset,
    format_rational,
    load_pointset,
    loads_hrep,
    loads_pointset,
    parse_rational,
    store_pointset,
)
from lattice_helly.search import canonicalize
from lattice_helly.witness import OCTAGON


def test_octagon_round_trip_bytes(tmp_path):
    S = LatticePointSet(OCTAGON)
    path = tmp_path / "oct.pts"
    store_pointset(path, S)
    first = path.read_bytes()
    assert load_pointset(path) == S
    store_pointset(path, load_pointset(path))
    assert path.read_bytes() == first


GOLDEN = Path(__file__).parent / "data" / "octagon_canonical.pts"


def test_canonical_golden():
    # load, canonicalize, store: the bytes are pinned by a checked-in file
    S = loads_pointset(dumps_pointset(LatticePointSet(OCTAGON)))
    text = dumps_pointset(canonicalize(S).vertices)
    assert text.encode() == GOLDEN.read_bytes()


def test_golden_is_equivalent_to_octagon():
    # independent of the normal form code: find an explicit unimodular map
    gold = list(loads_pointset(GOLDEN.read_text()))
    assert equivalent(list(OCTAGON), gold)


def test_rationals():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == -4
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(3)) == "3"
    with pytest.raises(FormatError):
        parse_rational("0/0")
    with pytest.raises(FormatError):
        parse_rational("1.5")


def test_hrep_round_trip():
    P = HRepPolyhedron([((1, Fraction(1, 3)), Fraction(7, 2)), ((-1, 0), 0)])
    assert loads_hrep(dumps_hrep(P)).rows == P.rows


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("2 2\n0 0\n0 0\n", 3, 1),  # duplicate point
        ("2 2\n0 0\n", 3, None),  # missing line
        ("2 1\n0 x\n", 2, 3),  # bad integer
        ("2 1\n0 0 0\n", 2, 5),  # too many coordinates
    ],
)
def test_pointset_errors(text, line, col):
    with pytest.raises(FormatError) as ei:
        loads_pointset(text)
    assert ei.value.line == line
    if col is not None:
        assert ei.value.col == col


def test_hrep_errors():
    with pytest.raises(FormatError) as ei:
        loads_hrep("1 2\n0 0 | 1\n")
    assert ei.value.line == 2
    with pytest.raises(FormatError):
        loads_hrep("1 2\n1 0 | 0/0\n")
    with pytest.raises(FormatError):
        loads_hrep("1 2\n1 0 1\n")


coords = st.tuples(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


@given(st.lists(coords, min_size=1, max_size=20, unique=True))
def test_pointset_round_trip(pts):
    S = LatticePointSet(pts)
    text = dumps_pointset(S)
    assert loads_pointset(text) == S
    assert dumps_pointset(loads_pointset(text)) == text


rat = st.fractions(max_denominator=10**9)


@given(st.lists(st.tuples(st.tuples(rat, rat), rat).filter(lambda r: any(r[0])), min_size=1, max_size=6))
def test_hrep_round_trip_property(rows):
    P = HRepPolyhedron(rows)
    assert loads_hrep(dumps_hrep(P)).rows == P.rows


@given(rat)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q
