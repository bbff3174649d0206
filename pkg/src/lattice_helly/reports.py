"""Run manifests, regression tables and report rendering."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import __version__
from .ballhull import ball_hull_stats, ball_spec
from .bounds import aliev_linear, averkov_linear, bell_bound, bound_report
from .exactgeom import HRepPolyhedron, LatticePointSet
from .io import format_rational
from .search import alpha_table, c2_bracket

SCHEMA = "lattice-helly-report/1"
PROVENANCE = ("published", "derived", "trivial")
DEFAULT_SEED = 1729


@dataclass
class RunManifest:
    subcommand: str
    params: dict
    seed: int = DEFAULT_SEED
    version: str = __version__
    threads: int = 1
    timings: dict = field(default_factory=dict)

    def to_dict(self, runtime: bool = False) -> dict:
        d = {
            "schema": SCHEMA,
            "subcommand": self.subcommand,
            "params": plain(self.params),
            "seed": self.seed,
            "version": self.version,
        }
        # thread count and timings vary between identical runs, so they are
        # only written on request
        if runtime:
            d["runtime"] = {"threads": self.threads, "timings": self.timings}
        return d


def plain(obj: Any):
    """JSON-ready copy: rationals as "p/q", tuples as lists, sets sorted."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return round(obj, 12)
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else format_rational(obj)
    if isinstance(obj, bytes):
        return obj.decode()
    if isinstance(obj, LatticePointSet):
        return [list(p) for p in obj]
    if isinstance(obj, HRepPolyhedron):
        return [[plain(list(a)), plain(b)] for a, b in obj.rows]
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(plain(v) for v in obj)
    if hasattr(obj, "__dataclass_fields__"):
        return {k: plain(getattr(obj, k)) for k in obj.__dataclass_fields__}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Report:
    manifest: RunManifest
    body: dict
    ok: bool = True

    def to_dict(self, runtime: bool = False) -> dict:
        return {"manifest": self.manifest.to_dict(runtime), "ok": self.ok, "result": plain(self.body)}

    def render_json(self, runtime: bool = False) -> str:
        return json.dumps(self.to_dict(runtime), sort_keys=True, indent=2) + "\n"

    def render_text(self, runtime: bool = False) -> str:
        lines = []
        _flatten(self.to_dict(runtime), "", lines)
        return "\n".join(lines) + "\n"


def _flatten(obj, prefix, out):
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(obj[k], f"{prefix}.{k}" if prefix else k, out)
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj) and not _is_points(obj):
        for i, v in enumerate(obj):
            _flatten(v, f"{prefix}[{i}]", out)
    else:
        out.append(f"{prefix}={json.dumps(obj, separators=(',', ':'))}")


def _is_points(obj):
    return all(isinstance(v, list) and all(isinstance(c, int) for c in v) for v in obj)


class RegressionTable:
    """Named key -> (value, provenance) table that refuses silent overwrites."""

    def __init__(self, name: str):
        self.name = name
        self.entries = {}

    def add(self, key, value, provenance: str):
        if provenance not in PROVENANCE:
            raise ValueError(f"provenance must be one of {PROVENANCE}")
        key = str(key)
        if key in self.entries and self.entries[key] != (plain(value), provenance):
            raise ValueError(f"table {self.name}: entry {key} already set")
        self.entries[key] = (plain(value), provenance)

    def __getitem__(self, key):
        return self.entries[str(key)][0]

    def provenance(self, key) -> str:
        return self.entries[str(key)][1]

    def __len__(self):
        return len(self.entries)

    def to_dict(self) -> dict:
        return {"name": self.name, "entries": {k: {"value": v, "provenance": p} for k, (v, p) in self.entries.items()}}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value", "provenance"])
        for k, (v, p) in self.entries.items():
            w.writerow([k, json.dumps(v, separators=(",", ":"), sort_keys=True), p])
        return buf.getvalue()


# Published values the tables are checked against.
ALPHA2_PUBLISHED = {0: 4, 1: 6, 2: 6, 4: 8, 5: 7}
C2_PUBLISHED = {0: (4, 4), 1: (6, 6), 2: (6, 6), 4: (8, 8), 5: (7, 7)}

TABLES = ("alpha2", "c2_bracket", "ball_n2", "bounds")


def emit_table(name: str, threads: int = 1) -> RegressionTable:
    t = RegressionTable(name)
    if name == "alpha2":
        for k, r in alpha_table(5, threads).items():
            t.add(k, r.value, "published" if k in ALPHA2_PUBLISHED else "derived")
    elif name == "c2_bracket":
        for k in range(6):
            br = c2_bracket(k, threads)
            val = {"lower": br.lower, "upper": br.upper}
            if br.cited_upper is not None:
                val["cited_upper"] = br.cited_upper
            t.add(k, val, "published" if k in C2_PUBLISHED else "derived")
    elif name == "ball_n2":
        for r in range(1, 21):
            s = ball_hull_stats(ball_spec(2, r))
            t.add(r, {"N": s.N_r, "v": s.v_r, "k": s.k_r, "max_edge_sq": s.max_edge_sq}, "derived")
    elif name == "bounds":
        for n in range(1, 7):
            for k in range(11):
                rep = bound_report(n, k)
                val = {
                    "bell_bound": bell_bound(n, k),
                    "aliev_linear": aliev_linear(n, k),
                    "averkov_linear": averkov_linear(n, k),
                    "lower": rep.lower(),
                    "upper": rep.upper(),
                }
                t.add(f"{n},{k}", val, "published")
    else:
        raise KeyError(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    return t


def check_published(t: RegressionTable) -> list:
    """Entries tagged published that disagree with the published values."""
    bad = []
    if t.name == "alpha2":
        for k, v in ALPHA2_PUBLISHED.items():
            if t[k] != v:
                bad.append((k, t[k], v))
    elif t.name == "c2_bracket":
        for k, (lo, up) in C2_PUBLISHED.items():
            e = t[k]
            got_up = e.get("cited_upper", e["upper"])
            if e["lower"] != lo or got_up != up:
                bad.append((k, e, (lo, up)))
    elif t.name == "bounds":
        for key in t.entries:
            n, k = map(int, key.split(","))
            e = t[key]
            if k == 0 and not (e["bell_bound"] == e["aliev_linear"] == e["averkov_linear"] == 2 ** n):
                bad.append((key, e, 2 ** n))
    return bad
