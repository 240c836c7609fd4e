"""Command-line entry point: ``twodist {test,spectrum,realize,census,sample}``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from .census import census_csv, census_json, export_census, run_census
from .eigen import DEFAULT_REL_TOL, project_center, jacobi_eigvals
from .graphs import GraphFormatError, parse_graph6
from .montecarlo import export_samples, estimate_fraction, samples_csv
from .realize import RealizationError, realize
from .spherical import NotSphericalError, adjacency_spectra, condition_oracle, interlacing_test, test_spherical

EXIT_USAGE = 2
SEED_ENV = "TWODIST_SEED"


def _fail(msg: str) -> int:
    print(f"twodist: error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _records(args) -> list[str]:
    if args.graph6:
        return list(args.graph6)
    if getattr(args, "file", None):
        with open(args.file, encoding="ascii") as fh:
            return [ln.strip() for ln in fh if ln.strip() and ln.strip() != ">>graph6<<"]
    return [ln.strip() for ln in sys.stdin if ln.strip()]


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for r in rows:
            out.write(json.dumps(r, sort_keys=True) + "\n")
    elif fmt == "csv":
        flat = [{k: v for k, v in r.items() if not isinstance(v, (list, dict))} for r in rows]
        if flat:
            w = csv.DictWriter(out, fieldnames=list(flat[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(flat)
    else:
        for r in rows:
            out.write("  ".join(f"{k}={v}" for k, v in r.items() if not isinstance(v, (list, dict))) + "\n")


def cmd_test(args) -> int:
    rows = []
    for rec in _records(args):
        try:
            g = parse_graph6(rec)
        except GraphFormatError as exc:
            return _fail(f"{rec!r}: {exc}")
        if g.n < 3:
            return _fail(f"{rec!r}: need at least 3 vertices")
        row = {"graph6": rec, **test_spherical(g, args.tol).to_dict()}
        if args.trace:
            row["trace"] = condition_oracle(g, args.tol).to_dict()
        rows.append(row)
    _emit_rows(rows, args.format, sys.stdout)
    return 0


def cmd_spectrum(args) -> int:
    rows = []
    for rec in _records(args):
        try:
            g = parse_graph6(rec)
        except GraphFormatError as exc:
            return _fail(f"{rec!r}: {exc}")
        a = g.adjacency()
        lam = jacobi_eigvals(a)
        pap = jacobi_eigvals(project_center(a))
        _, mu = adjacency_spectra(a)
        tol = args.tol * max(1.0, float(np.max(np.abs(lam))))
        interlaced = all(lam[j] + tol >= mu[j] >= lam[j + 1] - tol for j in range(len(mu)))
        rows.append({
            "graph6": rec,
            "lambda": [round(float(x), 12) for x in lam],
            "pap": [round(float(x), 12) for x in pap],
            "mu": [round(float(x), 12) for x in mu],
            "interlacing": interlaced,
            "interlacing_test": interlacing_test(g, args.tol) if g.n >= 3 else False,
        })
    if args.format == "text":
        for r in rows:
            print(r["graph6"])
            print("  lambda: " + " ".join(f"{x:.6f}" for x in r["lambda"]))
            print("  mu:     " + " ".join(f"{x:.6f}" for x in r["mu"]))
            print(f"  interlacing={r['interlacing']} criterion={r['interlacing_test']}")
    else:
        _emit_rows(rows, "json" if args.format == "json" else "csv", sys.stdout)
    return 0


def cmd_realize(args) -> int:
    recs = _records(args)
    if len(recs) != 1:
        return _fail("realize takes exactly one graph6 record")
    try:
        g = parse_graph6(recs[0])
        emb = realize(g, args.tol)
    except GraphFormatError as exc:
        return _fail(str(exc))
    except (NotSphericalError, RealizationError) as exc:
        print(json.dumps({"graph6": recs[0], "error": str(exc)}))
        return 1
    if args.plot:
        with open(args.plot, "w", encoding="utf-8") as fh:
            fh.write(emb.to_svg())
    if args.format == "text":
        print(emb.to_text())
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["point"] + [f"x{i}" for i in range(emb.dim)])
        for i, p in enumerate(emb.points):
            w.writerow([i] + [f"{x:.12g}" for x in p])
    else:
        print(json.dumps({"graph6": recs[0], **emb.to_dict()}))
    return 0


def cmd_census(args) -> int:
    try:
        row = run_census(args.n, args.graph6 or None, args.certify, args.jobs, args.tol)
    except (OSError, GraphFormatError, ValueError) as exc:
        return _fail(str(exc))
    if args.out:
        export_census([row], args.out)
    sys.stdout.write(census_csv([row]) if args.format == "csv" else census_json([row]))
    return 0


def cmd_sample(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(SEED_ENV, "0"))
    res = estimate_fraction(args.n, args.trials, args.edge_prob, seed, args.jobs, args.tol)
    if args.out:
        export_samples([res], args.out)
    if args.format == "json":
        print(json.dumps({"n": res.n, "trials": res.trials, "hits": res.hits, "fraction": res.fraction,
                          "stderr": res.stderr, "seed": res.seed, "edge_prob": res.edge_prob}))
    else:
        sys.stdout.write(samples_csv([res]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help=f"relative eigenvalue tolerance (default {DEFAULT_REL_TOL:g})")
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="twodist", description=__doc__)
    parser.add_argument("--tol", type=float, default=DEFAULT_REL_TOL)
    parser.add_argument("--format", choices=["json", "csv", "text"], default="json")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--seed", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", parents=[common], help="spectral verdict per graph6 record")
    p.add_argument("graph6", nargs="*")
    p.add_argument("--file")
    p.add_argument("--trace", action="store_true", help="include the condition trace")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of A and PAP")
    p.add_argument("graph6", nargs="*")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("realize", parents=[common], help="coordinates of the 2-distance set")
    p.add_argument("graph6", nargs="*")
    p.add_argument("--plot", metavar="SVG", help="write a 2D scatter to this file")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("census", parents=[common], help="count spherical classes by dimension")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--graph6", metavar="FILE")
    p.add_argument("--certify", action="store_true")
    p.add_argument("--out", metavar="PREFIX")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("sample", parents=[common], help="Monte Carlo spherical fraction")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol <= 0:
        return _fail("--tol must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
