"""Compare the compiled kernels with the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs under both backends; outputs are
compared before anything is timed.
"""
from __future__ import annotations

import argparse
import random
import sys
import timeit

from lattice_helly import _pykernels

try:
    from lattice_helly import _ckernels
except ImportError:
    _ckernels = None


def _inputs(seed=0):
    rng = random.Random(seed)
    clouds = [[(rng.randint(-200, 200), rng.randint(-200, 200)) for _ in range(400)] for _ in range(20)]
    polys = [_pykernels.hull2d(c) for c in clouds]
    small = [_pykernels.hull2d([(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(12)]) for _ in range(50)]
    small = [p for p in small if len(p) >= 3]
    mids = [[(rng.randint(0, 30), rng.randint(0, 30)) for _ in range(60)] for _ in range(10)]
    return {
        "hull2d": (lambda m: [m.hull2d(c) for c in clouds]),
        "polygon_counts": (lambda m: [m.polygon_counts(p) for p in polys]),
        "extend_polygon": (lambda m: [m.extend_polygon(p, 0) for p in small]),
        "midpoint_count": (lambda m: [m.midpoint_count(s) for s in mids]),
    }


def _norm(x):
    if isinstance(x, (list, tuple)):
        return [_norm(v) for v in x]
    return x


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
        return 1
    print(f"{'kernel':<16}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in _inputs().items():
        if _norm(fn(_pykernels)) != _norm(fn(_ckernels)):
            print(f"{name}: backends disagree")
            return 2
        tp = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<16}{tp:>12.2f}{tc:>12.2f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
