"""Command-line front end.

Subcommands
-----------
spectrum  Van Vleck roots (or one Lame family) as ``index,t[,E]`` CSV
density   the limiting density on a grid as ``s,rho`` CSV
compare   histogram of the roots against the density, plus a JSON report
verify    identity checks as a JSON report; exit 1 if any check fails
complex   root scatter for a cubic with complex roots as ``re,im`` CSV

Exit codes are 0 on success, 1 on a failed verification and 2 on invalid
input.  Numbers are written with 17 significant digits; every CSV has one
header line starting with ``#``.  Negative leading values need the ``=``
form, e.g. ``--roots=-1,0,-2``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from .complex_explore import ComplexCubic, parse_complex, scatter
from .cubic import Cubic, ExponentTriple, FamilyKappa
from .density import (
    FORMULAS,
    HEUN_MIN_DISTANCE,
    DensityModel,
    cdf,
    heun_residual,
    indicial_exponents,
    rho,
)
from .errors import LameSpecError
from .families import family_spectrum, union_spectrum, verify_lame_residual
from .measures import empirical, histogram, ks_distance
from .tridiag import van_vleck_roots

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "heun_tol": 1e-5,
    "equiv_tol": 1e-8,
    "norm_tol": 1e-6,
    "indicial_tol": 1e-10,
    "family_tol": 1e-8,
}


def _fmt(x) -> str:
    return f"{x:.17g}"


def _write_csv(path, header: str, columns) -> None:
    lines = ["# " + header]
    for row in zip(*columns):
        lines.append(",".join(str(v) if isinstance(v, (int, np.integer)) else _fmt(v)
                              for v in row))
    text = "\n".join(lines) + "\n"
    _emit(path, text)


def _emit(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _triple(text: str, kind=float) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated values, got {text!r}")
    return tuple(kind(p) for p in parts)


def _cubic(args) -> Cubic:
    return Cubic(*_triple(args.roots))


def _exponents(args) -> ExponentTriple:
    return ExponentTriple(*_triple(args.alpha))


def _map(fn, chunks, threads: int):
    if threads <= 1:
        return [fn(ch) for ch in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))


def split_grid(c: Cubic, count: int, gap: float, end_gap: float = 0.0) -> np.ndarray:
    """``count`` ascending points on ``[e3, e1]`` avoiding ``gap`` around ``e2``.

    ``gap`` and ``end_gap`` are absolute distances kept from ``e2`` and from
    the endpoints; the two sides get points in proportion to their lengths.
    """
    left = (c.e3 + end_gap, c.e2 - gap)
    right = (c.e2 + gap, c.e1 - end_gap)
    len_l, len_r = left[1] - left[0], right[1] - right[0]
    if count < 2 or len_l <= 0 or len_r <= 0:
        raise ValueError("grid needs at least 2 points and a gap smaller than the support")
    n_l = min(max(1, round(count * len_l / (len_l + len_r))), count - 1)
    return np.concatenate((np.linspace(*left, n_l), np.linspace(*right, count - n_l)))


# --- subcommands -------------------------------------------------------------


def cmd_spectrum(args) -> int:
    c = _cubic(args)
    if args.kappa is not None:
        if args.n is None:
            raise ValueError("--kappa needs --n (elliptic degree)")
        fs = family_spectrum(c, args.n, FamilyKappa.parse(args.kappa))
        t = fs.roots_t if fs.n else np.full(1, np.nan)  # no linear term when n = 0
        _write_csv(args.out, f"index,t,E | n={fs.n} kappa={fs.kappa.label} m={fs.m}",
                   (list(range(fs.count)), t, fs.roots_E))
        return EXIT_OK
    m = args.m if args.m is not None else args.n
    if m is None:
        raise ValueError("give the degree with --m")
    t = van_vleck_roots(c, _exponents(args), m)
    _write_csv(args.out, f"index,t | m={m} alpha={args.alpha}", (list(range(t.size)), t))
    return EXIT_OK


def _density_rows(dm: DensityModel, grid: np.ndarray, formula: str, threads: int):
    chunks = np.array_split(grid, max(threads, 1))
    parts = _map(lambda ch: np.atleast_1d(rho(dm, ch, formula)), chunks, threads)
    return np.concatenate(parts)


def cmd_density(args) -> int:
    c = _cubic(args)
    dm = DensityModel(c, args.formula)
    grid = split_grid(c, args.grid, args.exclude * c.span)
    values = _density_rows(dm, grid, args.formula, args.threads)
    _write_csv(args.out, f"s,rho | formula={args.formula} roots={args.roots}", (grid, values))
    return EXIT_OK


def cmd_compare(args) -> int:
    c = _cubic(args)
    dm = DensityModel(c, args.formula)
    if args.kappa is not None:
        roots = family_spectrum(c, args.n, FamilyKappa.parse(args.kappa)).roots_t
    else:
        roots = van_vleck_roots(c, _exponents(args), args.n)
    em = empirical(roots)
    ks = ks_distance(em, dm)
    h = histogram(em, args.bins, c.e3, c.e1)
    centers = h.centers
    away = np.abs(centers - c.e2) > h.widths
    err = np.abs(h.heights[away] - rho(dm, centers[away]))
    max_err = float(np.max(err)) if err.size else 0.0

    _write_csv(args.hist_out, "bin_left,bin_right,count,height",
               (h.edges[:-1], h.edges[1:], [int(k) for k in h.counts], h.heights))
    if args.density_out is not None:
        grid = split_grid(c, args.grid, args.exclude * c.span)
        _write_csv(args.density_out, f"s,rho | formula={args.formula} roots={args.roots}",
                   (grid, _density_rows(dm, grid, args.formula, args.threads)))
    report = {
        "n": args.n,
        "atoms": em.count,
        "ks": ks,
        "bins": args.bins,
        "max_bin_error": max_err,
        "mass": float(np.sum(h.heights * h.widths)),
        "config": _config(args),
    }
    _emit(args.report, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _check(value: float, tol: float, **extra) -> dict:
    ok = bool(np.isfinite(value) and value <= tol)
    return {"pass": ok, "value": value, "tol": tol, **extra}


def cmd_verify(args) -> int:
    c = _cubic(args)
    dm = DensityModel(c)
    span = c.span
    rng = np.random.default_rng(args.seed)

    # Heun residual at random interior points away from the roots
    pts = []
    while len(pts) < args.points:
        s = rng.uniform(c.e3, c.e1)
        if min(abs(s - e) for e in c.roots) > HEUN_MIN_DISTANCE * span * 1.0001:
            pts.append(s)
    heun = max(heun_residual(dm, s, relative=True) for s in pts)

    # five-way equivalence
    grid = split_grid(c, 200, 0.01 * span, 0.01 * span)
    vals = {f: np.atleast_1d(rho(dm, grid, f)) for f in FORMULAS}
    equiv = max(float(np.max(np.abs(vals[a] - vals[b]) / np.abs(vals[b])))
                for a, b in combinations(FORMULAS, 2))

    lo, hi = cdf(dm, np.array([c.e3, c.e1]))
    norm = max(abs(hi - 1.0), abs(lo))

    ind = {p: indicial_exponents(c, p) for p in ("e1", "e2", "e3", "infinity")}
    want = {"e1": (0.0, 0.0), "e2": (0.0, 0.0), "e3": (0.0, 0.0), "infinity": (0.5, 1.5)}
    ind_err = max(abs(a - b) for p in ind for a, b in zip(sorted(ind[p]), want[p]))

    fam = 0.0
    for n in range(args.n_max + 1):
        for fs in union_spectrum(c, n) if n else [family_spectrum(c, 0, FamilyKappa(0, 0, 0))]:
            for j in range(fs.count):
                fam = max(fam, verify_lame_residual(c, n, fs.kappa, j))

    checks = {
        "heun": _check(heun, args.heun_tol, points=args.points),
        "equivalence": _check(equiv, args.equiv_tol, formulas=list(FORMULAS), points=200),
        "normalization": _check(norm, args.norm_tol),
        "indicial": _check(ind_err, args.indicial_tol,
                           exponents={p: list(v) for p, v in ind.items()}),
        "families": _check(fam, args.family_tol, n_max=args.n_max),
    }
    ok = all(ch["pass"] for ch in checks.values())
    report = {"pass": ok, "checks": checks, "config": _config(args)}
    _emit(args.out, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_complex(args) -> int:
    roots = _triple(args.roots, parse_complex)
    auto = args.origin == "auto"
    c = ComplexCubic(*roots, origin=0 if auto else int(args.origin))
    sc = scatter(c, args.n, _exponents(args), auto_origin=auto)
    header = (f"re,im | n={args.n} thickness={_fmt(sc.thickness)} "
              f"min_separation={_fmt(sc.min_separation)} max_residual={_fmt(sc.max_residual)} "
              f"error_estimate={_fmt(sc.error_estimate)} origin={sc.origin}")
    _write_csv(args.out, header, (sc.points.real, sc.points.imag))
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamespec",
        description="Van Vleck spectra of Lame equations and their limiting density.",
    )
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for grid evaluation (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, complex_roots=False, out=True):
        p.add_argument("--roots", default="0,1,-0.5+1i" if complex_roots else "1,0,-1",
                       help="three roots e1,e2,e3 (real: e1 > e2 > e3)")
        p.add_argument("--alpha", default="0.5,0.5,0.5",
                       help="exponents a1,a2,a3 (default 1/2,1/2,1/2)")
        if out:
            p.add_argument("--out", default="-", help="output file (default stdout)")

    p = sub.add_parser("spectrum", help="Van Vleck roots t")
    common(p)
    p.add_argument("--m", type=int, help="degree of the polynomial solutions")
    p.add_argument("--n", type=int, help="elliptic degree (with --kappa)")
    p.add_argument("--kappa", help='family selector such as "1/2,0,0" or "100"')
    p.set_defaults(func=cmd_spectrum)

    def density_opts(p):
        p.add_argument("--formula", choices=FORMULAS, default="iii")
        p.add_argument("--grid", type=int, default=1000, help="number of grid points")
        p.add_argument("--exclude", type=float, default=1e-6,
                       help="half-width of the skipped neighbourhood of e2, relative to e1 - e3")

    p = sub.add_parser("density", help="density on a grid")
    common(p)
    density_opts(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("compare", help="histogram of roots vs. density")
    common(p, out=False)
    density_opts(p)
    p.add_argument("--n", type=int, default=400, help="degree (default 400)")
    p.add_argument("--kappa", help="compare one Lame family instead")
    p.add_argument("--bins", type=int, default=40)
    p.add_argument("--hist-out", default="histogram.csv")
    p.add_argument("--density-out", default="density.csv",
                   help="density CSV path (default density.csv)")
    p.add_argument("--report", default="-", help="JSON report path (default stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="identity checks, JSON report")
    common(p)
    p.add_argument("--points", type=int, default=50, help="random points for the Heun check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=12, help="largest n for the family check")
    for key, val in DEFAULTS.items():
        p.add_argument("--" + key.replace("_", "-"), type=float, default=val)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complex", help="root scatter for a complex cubic")
    common(p, complex_roots=True)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--origin", default="auto", choices=("auto", "0", "1", "2"),
                   help="index of the root moved to 0; auto picks the best conditioned")
    p.set_defaults(func=cmd_complex)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (LameSpecError, ValueError) as exc:
        print(f"lamespec {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
