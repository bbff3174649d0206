"""Text formats for point sets and H-representations.

Point set::

    n m
    x_1 ... x_n        (m lines, single spaces)

H-representation::

    m n
    a_1 ... a_n | b    (m lines; entries are integers or p/q)
"""
from __future__ import annotations

import re
from fractions import Fraction

from .exactgeom import HRepPolyhedron, LatticePointSet


class FormatError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", column {col}"
            where += ": "
        super().__init__(where + msg)


_INT = re.compile(r"[+-]?\d+\Z")
_RAT = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def _tokens(line):
    """(column, token) pairs, columns 1-based."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _parse_int(tok, line, col):
    if not _INT.match(tok):
        raise FormatError(f"expected an integer, got {tok!r}", line, col)
    return int(tok)


def parse_rational(tok, line=None, col=None) -> Fraction:
    m = _RAT.match(tok)
    if not m:
        raise FormatError(f"malformed rational {tok!r}", line, col)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise FormatError(f"zero denominator in {tok!r}", line, col)
    return Fraction(num, den)


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _body_lines(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _header(lines, what):
    if not lines:
        raise FormatError(f"empty {what} file", 1, 1)
    toks = _tokens(lines[0])
    if len(toks) != 2:
        raise FormatError("header must hold exactly two integers", 1, toks[2][0] if len(toks) > 2 else 1)
    a = _parse_int(toks[0][1], 1, toks[0][0])
    b = _parse_int(toks[1][1], 1, toks[1][0])
    if a < 0 or b < 0:
        raise FormatError("header values must be nonnegative", 1, 1)
    return a, b


def _count_line(lines, m):
    # first surplus line, or the line where a missing one was expected
    return m + 2 if len(lines) - 1 > m else len(lines) + 1


def loads_pointset(text: str) -> LatticePointSet:
    lines = _body_lines(text)
    n, m = _header(lines, "point-set")
    if n < 1:
        raise FormatError("dimension must be at least 1", 1, 1)
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} point lines, found {len(lines) - 1}", _count_line(lines, m))
    pts = []
    seen = {}
    for ln in range(2, m + 2):
        toks = _tokens(lines[ln - 1])
        if len(toks) != n:
            col = toks[n][0] if len(toks) > n else len(lines[ln - 1]) + 1
            raise FormatError(f"expected {n} coordinates, found {len(toks)}", ln, col)
        p = tuple(_parse_int(t, ln, c) for c, t in toks)
        if p in seen:
            raise FormatError(f"duplicate point {p} (first on line {seen[p]})", ln, 1)
        seen[p] = ln
        pts.append(p)
    return LatticePointSet(pts, n)


def dumps_pointset(S: LatticePointSet) -> str:
    out = [f"{S.dim} {len(S)}"]
    out.extend(" ".join(str(c) for c in p) for p in S)
    return "\n".join(out) + "\n"


def loads_hrep(text: str) -> HRepPolyhedron:
    lines = _body_lines(text)
    m, n = _header(lines, "H-representation")
    if n < 1:
        raise FormatError("dimension must be at least 1", 1, 1)
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} row lines, found {len(lines) - 1}", _count_line(lines, m))
    rows = []
    for ln in range(2, m + 2):
        toks = _tokens(lines[ln - 1])
        bars = [i for i, (_, t) in enumerate(toks) if t == "|"]
        if len(bars) != 1 or bars[0] != n or len(toks) != n + 2:
            col = toks[bars[0]][0] if bars else len(lines[ln - 1]) + 1
            raise FormatError(f"expected '{n} entries | offset'", ln, col)
        a = tuple(parse_rational(t, ln, c) for c, t in toks[:n])
        b = parse_rational(toks[n + 1][1], ln, toks[n + 1][0])
        if not any(a):
            raise FormatError("zero normal", ln, toks[0][0])
        rows.append((a, b))
    return HRepPolyhedron(rows, n)


def dumps_hrep(P: HRepPolyhedron) -> str:
    out = [f"{len(P.rows)} {P.dim}"]
    for a, b in P.rows:
        out.append(" ".join(format_rational(c) for c in a) + " | " + format_rational(b))
    return "\n".join(out) + "\n"


def load_pointset(path) -> LatticePointSet:
    with open(path, encoding="ascii") as fh:
        return loads_pointset(fh.read())


def store_pointset(path, S: LatticePointSet) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_pointset(S))


def load_hrep(path) -> HRepPolyhedron:
    with open(path, encoding="ascii") as fh:
        return loads_hrep(fh.read())


def store_hrep(path, P: HRepPolyhedron) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_hrep(P))
