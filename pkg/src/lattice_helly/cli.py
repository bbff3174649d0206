"""Command-line front end: ``lattice-helly <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__, ballhull, bounds, expand, io, search, sumsets, witness
from .exactgeom import LatticePointSet, UnboundedError
from .reports import DEFAULT_SEED, TABLES, Report, RunManifest, check_published, emit_table, plain

THREADS_ENV = "LATTICE_HELLY_THREADS"


class VerificationFailure(Exception):
    pass


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            t = int(env)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}")
        if t < 1:
            raise ValueError(f"{THREADS_ENV} must be positive")
        return t
    return 1


def _rational_list(text):
    try:
        return tuple(io.parse_rational(t) for t in text.split(","))
    except io.FormatError as e:
        raise argparse.ArgumentTypeError(str(e))


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


# ---------------------------------------------------------------------------
# subcommands; each returns (params, body, ok)


def cmd_bounds(args, threads):
    rep = bounds.bound_report(args.n, args.k)
    body = {"entries": rep.entries, "tags": rep.tags, "lower": rep.lower(), "upper": rep.upper()}
    return {"n": args.n, "k": args.k}, body, rep.consistent()


def cmd_alpha(args, threads):
    r = search.alpha_search(args.k, threads, args.max_points)
    body = {"alpha": r.value, "witness": r.witness, "witness_pointset": io.dumps_pointset(r.witness),
            "certificate": r.certificate}
    return {"k": args.k, "max_points": args.max_points}, body, True


def cmd_ell(args, threads):
    r = search.ell_search(args.k, threads)
    body = {"ell": r.value, "witness": r.witness, "witness_pointset": io.dumps_pointset(r.witness),
            "certificate": r.certificate}
    return {"k": args.k}, body, True


def cmd_mu(args, threads):
    if args.ball:
        r = ballhull.mu_upper_from_ball(args.n, args.s, args.seed)
        body = {"upper": r.bound, "N_R": r.N_R, "radius": r.radius, "S": r.S}
        ok = len(r.S) == args.s and r.bound >= search.mu_lower_bound(args.n, args.s)
        return {"n": args.n, "s": args.s, "ball": True}, body, ok
    r = search.mu_c_search(args.n, args.s, args.grid, threads)
    body = {"value": r.value, "lower_bound": r.lower_bound, "witness": r.witness,
            "witness_pointset": io.dumps_pointset(r.witness), "certificate": r.certificate}
    return {"n": args.n, "s": args.s, "grid": args.grid}, body, r.value >= r.lower_bound


BALL_COLUMNS = ("r", "N_r", "v_r", "k_r", "max_edge_sq", "inner_margin")


def _ball_row(n, u, r):
    st = ballhull.ball_hull_stats(ballhull.ball_spec(n, r, u))
    return [r, st.N_r, st.v_r, st.k_r, st.max_edge_sq, st.inner_margin]


def cmd_ball(args, threads):
    n = args.n
    if args.center_seed is not None:
        u = ballhull.generic_center(n, args.center_seed)
    elif args.center is not None:
        u = args.center
    else:
        u = (0,) * n
    params = {"n": n, "center": list(u), "center_seed": args.center_seed}
    if args.fit:
        rmin, rmax = args.fit
        radii = ballhull.geometric_radii(rmin, rmax, args.count)
        f = ballhull.exponent_fit(n, radii, u, threads)
        params.update(fit=[rmin, rmax], count=args.count)
        body = {"slope": f.slope, "intercept": f.intercept, "target": f.target, "residual": f.residual,
                "radii": f.radii, "vertices": f.counts}
        return params, body, True
    if args.rmax is not None:
        radii = list(range(1, args.rmax + 1))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                rows = list(ex.map(lambda r: _ball_row(n, u, r), radii))
        else:
            rows = [_ball_row(n, u, r) for r in radii]
        body = {"columns": list(BALL_COLUMNS), "rows": rows, "fit": None}
        if args.rmax >= 10:
            f = ballhull.exponent_fit(n, radii, u, threads)
            body["fit"] = {"slope": f.slope, "intercept": f.intercept, "target": f.target,
                           "distance": f.distance, "residual": f.residual}
        if args.csv:
            with open(args.csv, "w", encoding="ascii", newline="") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(BALL_COLUMNS)
                w.writerows(plain(rows))
        params["rmax"] = args.rmax
        return params, body, True
    r = io.parse_rational(args.r)
    spec = ballhull.ball_spec(n, r, u)
    s = ballhull.ball_hull_stats(spec)
    body = {"N": s.N_r, "v": s.v_r, "k": s.k_r, "max_edge_sq": s.max_edge_sq,
            "inner_margin": s.inner_margin, "min_delta": s.min_delta}
    ok = True
    if r * r > n:
        body["inner_ball_check"] = ballhull.inner_ball_check(spec)
        body["max_edge_check"] = ballhull.max_edge_check(spec)
        ok = body["inner_ball_check"] and body["max_edge_check"]
    params["r"] = r
    return params, body, ok


def cmd_witness(args, threads):
    w = witness.by_name(args.name, args.n, args.k)
    chk = witness.verify_config(w)
    if args.out:
        io.store_pointset(args.out, w.V)
    body = {"name": w.name, "size": chk.size, "nonvertex_count": chk.actual_k,
            "convex_position": chk.convex_position, "points": w.V, "pointset": io.dumps_pointset(w.V),
            "nonvertex": chk.nonvertex}
    return {"name": args.name, "n": args.n, "k": args.k}, body, chk.ok


def cmd_expand(args, threads):
    P = io.load_hrep(args.file)
    res = expand.bell_expand(P, args.seed)
    if args.out_hrep:
        io.store_hrep(args.out_hrep, res.expanded)
    if args.out_points:
        io.store_pointset(args.out_points, res.V)
    body = {
        "expanded_hrep": io.dumps_hrep(res.expanded),
        "facet_points": io.dumps_pointset(res.V),
        "checks": res.checks,
        "epsilon": res.epsilon,
        "attempts": res.attempts,
        "region": res.region,
        "interior": res.original_interior,
    }
    ok = all(res.checks.values())
    if args.shrink is not None:
        out = expand.shrink_one_facet(res, args.shrink)
        body["shrunk_hrep"] = io.dumps_hrep(out)
    return {"file": os.path.basename(args.file), "shrink": args.shrink}, body, ok


def cmd_bracket(args, threads):
    if args.n == 2:
        br = search.c2_bracket(args.k, threads)
        body = {"lower": br.lower, "upper": br.upper, "cited_upper": br.cited_upper, "provenance": br.provenance}
    else:
        br = bounds.large_n_bracket(args.n, args.k)
        body = {"lower": br.lower, "upper": br.upper, "printed_lower": br.printed_lower,
                "provenance": br.provenance}
    return {"n": args.n, "k": args.k}, body, br.lower <= br.upper


def cmd_table(args, threads):
    t = emit_table(args.name, threads)
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="\n") as fh:
            fh.write(t.to_csv())
    bad = check_published(t)
    return {"name": args.name}, {"table": t.to_dict(), "mismatches": bad}, not bad


def _selftest_checks(seed):
    rng = random.Random(seed)

    def bounds_ok():
        for n in range(1, 11):
            for k in range(101):
                if not bounds.averkov_linear(n, k) <= bounds.aliev_linear(n, k) <= bounds.bell_bound(n, k):
                    return False
        return all(bounds.bell_bound(n, 0) == bounds.aliev_linear(n, 0) == bounds.averkov_linear(n, 0) == 2 ** n
                   for n in range(1, 11))

    def witnesses_ok():
        ws = [witness.k1_witness(n) for n in range(1, 5)] + [witness.k2_witness(n) for n in range(1, 5)]
        ws += list(witness.figure_witnesses())
        return all(witness.verify_config(w).ok for w in ws)

    def ball_ok():
        s = ballhull.ball_hull_stats(ballhull.ball_spec(2, 5))
        if (s.N_r, s.v_r, s.k_r) != (81, 12, 69):
            return False
        return all(ballhull.inner_ball_check(ballhull.ball_spec(2, r)) and
                   ballhull.max_edge_check(ballhull.ball_spec(2, r)) for r in range(2, 21))

    def midpoints_ok():
        for _ in range(200):
            pts = {(rng.randint(0, 7), rng.randint(0, 7)) for _ in range(rng.randint(2, 8))}
            V = LatticePointSet.from_iter(pts)
            if len(V) < 2:
                continue
            if sumsets.midpoint_count(V) < sumsets.triangulation_midpoint_bound(V):
                return False
        return True

    def plunnecke_ok():
        for _ in range(30):
            A = LatticePointSet.from_iter({(rng.randint(-20, 20),) for _ in range(rng.randint(1, 5))})
            if not sumsets.plunnecke_check(A).holds or not sumsets.freiman_check(A):
                return False
        return True

    def expand_ok():
        from .exactgeom import HRepPolyhedron, enumerate_lattice_points
        sq = HRepPolyhedron([((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])
        res = expand.bell_expand(sq, seed)
        shrunk = expand.shrink_one_facet(res, 0)
        return all(res.checks.values()) and len(enumerate_lattice_points(shrunk)) == 5

    def alpha_ok():
        t = emit_table("alpha2")
        return not check_published(t)

    return [
        ("bounds", bounds_ok),
        ("witnesses", witnesses_ok),
        ("ball", ball_ok),
        ("midpoints", midpoints_ok),
        ("plunnecke", plunnecke_ok),
        ("expand", expand_ok),
        ("alpha2_table", alpha_ok),
    ]


def cmd_selftest(args, threads):
    results = {}
    for name, fn in _selftest_checks(args.seed):
        try:
            results[name] = bool(fn())
        except Exception as e:  # a crash is a failed check, reported by name
            results[name] = f"error: {type(e).__name__}: {e}"
    ok = all(v is True for v in results.values())
    return {}, {"checks": results}, ok


COMMANDS = {
    "bounds": cmd_bounds,
    "alpha": cmd_alpha,
    "ell": cmd_ell,
    "mu": cmd_mu,
    "ball": cmd_ball,
    "witness": cmd_witness,
    "expand": cmd_expand,
    "bracket": cmd_bracket,
    "table": cmd_table,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of key=value lines")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--threads", type=_positive, default=None,
                        help=f"worker threads (default: ${THREADS_ENV} or 1)")
    common.add_argument("--timings", action="store_true", help="add thread count and timings to the manifest")

    p = argparse.ArgumentParser(prog="lattice-helly", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", parents=[common], help="closed-form bounds on c(n,k)")
    s.add_argument("n", type=_positive)
    s.add_argument("k", type=_nonneg)

    s = sub.add_parser("alpha", parents=[common], help="alpha(2,k) by exhaustive search")
    s.add_argument("k", type=_nonneg)
    s.add_argument("--max-points", type=_positive, default=None)

    s = sub.add_parser("ell", parents=[common], help="ell(2,k) from the alpha table")
    s.add_argument("k", type=_positive)

    s = sub.add_parser("mu", parents=[common], help="bounds on mu_c(n,s)")
    s.add_argument("n", type=_positive)
    s.add_argument("s", type=_positive)
    s.add_argument("--grid", type=_positive, default=6)
    s.add_argument("--ball", action="store_true", help="upper bound from growing balls instead of a grid search")

    s = sub.add_parser("ball", parents=[common], help="integer hull statistics of balls")
    s.add_argument("n", type=_positive, nargs="?", default=2, help="dimension")
    s.add_argument("--r", default="5", help="single radius (integer or p/q)")
    s.add_argument("--rmax", type=_positive, default=None, help="table over radii 1..RMAX plus a fit")
    s.add_argument("--center", type=_rational_list, default=None, help="u as comma-separated rationals")
    s.add_argument("--center-seed", type=int, default=None, metavar="S", help="draw a generic center from seed S")
    s.add_argument("--fit", type=_positive, nargs=2, metavar=("RMIN", "RMAX"), default=None,
                   help="fit over COUNT geometric radii in [RMIN, RMAX]")
    s.add_argument("--count", type=_positive, default=10)
    s.add_argument("--csv", default=None, help="write the --rmax table as CSV")

    s = sub.add_parser("witness", parents=[common], help="verify a named witness configuration")
    s.add_argument("name")
    s.add_argument("--n", type=_positive, default=2)
    s.add_argument("--k", type=_positive, default=2)
    s.add_argument("--out", default=None, help="write the points in point-set format")

    s = sub.add_parser("expand", parents=[common], help="one-point-per-facet expansion of an H-rep file")
    s.add_argument("file")
    s.add_argument("--out-hrep", default=None)
    s.add_argument("--out-points", default=None)
    s.add_argument("--shrink", type=_nonneg, default=None, metavar="KEEP")

    s = sub.add_parser("bracket", parents=[common], help="bracket on c(n,k)")
    s.add_argument("k", type=_nonneg)
    s.add_argument("--n", type=_positive, default=2)

    s = sub.add_parser("table", parents=[common], help="emit a regression table")
    s.add_argument("name", choices=TABLES)
    s.add_argument("--csv", default=None)

    sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        threads = _threads(args)
        t0 = time.perf_counter()
        params, body, ok = COMMANDS[args.command](args, threads)
        elapsed = time.perf_counter() - t0
    except io.FormatError as e:
        print(f"lattice-helly: {e}", file=err)
        return 2
    except (OSError, KeyError, IndexError, ValueError, UnboundedError) as e:
        # bad arguments, unreadable files and inputs outside an operation's domain
        print(f"lattice-helly: {type(e).__name__}: {e}", file=err)
        return 2
    except (AssertionError, VerificationFailure, expand.ExpansionError, ballhull.GenericityError) as e:
        print(f"lattice-helly: verification failed: {e}", file=err)
        return 1
    man = RunManifest(args.command, params, args.seed, __version__, threads, {"seconds": round(elapsed, 6)})
    rep = Report(man, body, bool(ok))
    out.write(rep.render_json(args.timings) if args.json else rep.render_text(args.timings))
    return 0 if ok else 1


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
