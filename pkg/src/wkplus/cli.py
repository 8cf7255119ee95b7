"""Command-line entry point: ``wkplus <command> ...``.

Exit codes: 0 ok, 1 selfcheck failure, 2 invalid input, 3 strict-mode
discrepancy.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import cyclo, genus, homology, padic, selfcheck
from .kernels import parse_generators
from .quadfield import QuadraticField, is_squarefree

EXIT_OK, EXIT_SELFCHECK, EXIT_INVALID, EXIT_DISCREPANCY = 0, 1, 2, 3

DPLUS_ENV = "WK_DPLUS_GENS"

CSV_COLUMNS = [
    "d",
    "i",
    "discriminant",
    "ramified_primes",
    "R",
    "r",
    "t_plus",
    "norm_index_log2",
    "x_term_log2_min",
    "x_term_log2_max",
    "rank",
    "codescent",
    "vanishing_criterion",
    "discrepancy",
]


class InvalidInput(ValueError):
    pass


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ";".join(str(v) for v in value) + "]"
    return str(value)


def _dplus(args) -> list[Fraction] | None:
    text = args.dplus_gens if getattr(args, "dplus_gens", None) is not None else os.environ.get(DPLUS_ENV)
    if text is None:
        return None
    try:
        return parse_generators(text)
    except ValueError as exc:
        raise InvalidInput(f"bad D+ generators {text!r}: {exc}") from None


def _field(d: int) -> QuadraticField:
    try:
        E = QuadraticField.from_radicand(d)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    return E


def _twist(i: int) -> int:
    if i < 3 or i % 2 == 0:
        raise InvalidInput(f"twist i must be odd and >= 3, got {i}")
    return i


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_report(rep: genus.GenusReport) -> str:
    x_term = str(rep.x_term_log2_min) if rep.x_term_log2_min == rep.x_term_log2_max else (
        f"{rep.x_term_log2_min}..{rep.x_term_log2_max}"
    )
    lines = [
        f"E = Q(sqrt {rep.d}), i = {rep.i}",
        f"  discriminant          {rep.discriminant}",
        f"  ramified primes       {rep.ramified_primes}",
        f"  R(E/Q)                {rep.R}  (r = {rep.r})",
        f"  t_plus                {rep.t_plus}",
        f"  log2 norm index       {rep.norm_index_log2}",
        f"  log2 |X| bounds       {x_term}",
        f"  codescent branch      {rep.codescent}",
        f"  rk_2 WK+              {rep.rank}",
        f"  vanishing criterion   {rep.vanishing_criterion}"
        + ("  (no odd ramified prime; taken from the rank)" if rep.criterion_ambiguous else ""),
        f"  discrepancy           {rep.discrepancy}",
    ]
    return "\n".join(lines) + "\n"


def cmd_rank(args) -> int:
    rep = genus.rank_quadratic(_field(args.d), _twist(args.i), _dplus(args))
    _emit(rep.to_json() + "\n" if args.json else render_report(rep), args.out)
    if args.strict and rep.discrepancy:
        return EXIT_DISCREPANCY
    return EXIT_OK


def scan_radicands(dmin: int, dmax: int) -> list[int]:
    return [d for d in range(dmin, dmax + 1) if d not in (0, 1) and is_squarefree(d)]


def scan_rows(dmin: int, dmax: int, twists, dplus=None, workers: int = 1, timing: bool = False) -> list[dict]:
    """One row per (squarefree d, i), ordered by d then i."""
    jobs = [(d, i) for d in scan_radicands(dmin, dmax) for i in sorted(twists)]

    def run(job):
        t0 = time.perf_counter()
        row = genus.rank_quadratic(QuadraticField(job[0]), job[1], dplus).to_dict()
        if timing:
            row["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        return row

    if workers <= 1:
        return [run(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, jobs))


def format_rows(rows: list[dict], fmt: str, timing: bool = False) -> str:
    columns = CSV_COLUMNS + (["timing_ms"] if timing else [])
    if fmt == "json":
        return json.dumps([{k: r[k] for k in columns} for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_csv_cell(r[k]) for k in columns])
    return buf.getvalue()


def cmd_scan(args) -> int:
    if args.dmin > args.dmax:
        raise InvalidInput(f"empty range [{args.dmin}, {args.dmax}]")
    twists = [_twist(i) for i in args.i]
    rows = scan_rows(args.dmin, args.dmax, twists, _dplus(args), args.workers, args.timing)
    _emit(format_rows(rows, args.format, args.timing), args.out)
    return EXIT_OK


def cmd_genus(args) -> int:
    if args.d is not None:
        E = _field(args.d)
        if cyclo.is_in_cyclo_z2_global(E):
            _emit(f"Q(sqrt {E.d}) lies in the cyclotomic Z_2-extension: codescent, no genus ratio\n", args.out)
            return EXIT_OK
        exp = genus.genus_ratio_quadratic(E, _twist(args.i), _dplus(args))
        _emit(f"log2 |(WK+ E)^G| / |WK+ Q| = {exp}\n", args.out)
        return EXIT_OK
    if args.x_log2 is None or args.global_h1_log2 is None or args.norm_index_log2 is None:
        raise InvalidInput("give --d, or all of --x-log2, --local-h1-log2, --global-h1-log2, --norm-index-log2")
    try:
        local = [int(t) for t in args.local_h1_log2.split(",") if t.strip()] if args.local_h1_log2 else []
        exp = genus.genus_ratio_general(args.x_log2, local, args.global_h1_log2, args.norm_index_log2)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    _emit(f"log2 |(WK+ E)_G| / |WK+ F| = {exp}\n", args.out)
    return EXIT_OK


def _place(text: str):
    t = text.strip().lower()
    if t in ("inf", "oo", "infinity", "real"):
        return padic.INF
    return int(t)


def cmd_hilbert(args) -> int:
    try:
        a, b = Fraction(args.a), Fraction(args.b)
        v = _place(args.place)
        value = padic.hilbert(a, b, v)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(str(exc)) from None
    _emit(f"{value:+d}\n", args.out)
    return EXIT_OK


def cmd_local_orders(args) -> int:
    try:
        m = 1 - args.twist
        closed = cyclo.local_h0_order(args.ell, args.f, m)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    lines = [f"|H^0(K, Q_2/Z_2({m}))| = {closed}  (ell = {args.ell}, f = {args.f})"]
    for k in range(1, args.kmax + 1):
        lines.append(f"  level 2^{k}: {cyclo.local_h0_order_enum(args.ell, args.f, m, k)} fixed points")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _parse_action(text: str) -> list[list[int]]:
    return [[int(t) for t in row.split(",")] for row in text.split(";")]


def cmd_homology(args) -> int:
    try:
        orders = [int(t) for t in args.orders.split(",")]
        M = homology.Finite2Module.from_lists(orders, _parse_action(args.action))
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    h0, h1 = homology.tate_orders(M, args.method)
    _emit(f"|M| = {M.order}\nH^0 order = {h0}\nH^-1 order = {h1}\nHerbrand quotient 1: {h0 == h1}\n", args.out)
    return EXIT_OK


def cmd_selfcheck(args) -> int:
    names = args.suite or list(selfcheck.SUITES)
    failed = False
    for name in names:
        if name not in selfcheck.SUITES:
            raise InvalidInput(f"unknown suite {name!r}; choose from {sorted(selfcheck.SUITES)}")
        problem = selfcheck.SUITES[name]()
        if problem is None:
            print(f"PASS {name}")
        else:
            print(f"FAIL {name}: {problem}")
            failed = True
            break
    return EXIT_SELFCHECK if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wkplus", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dplus=False):
        p.add_argument("--out", help="write output to FILE instead of stdout")
        if dplus:
            p.add_argument("--dplus-gens", help=f"D+ generators over Q, e.g. '2' (env {DPLUS_ENV})")

    p = sub.add_parser("rank", help="2-rank of WK+ for Q(sqrt d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.add_argument("--strict", action="store_true", help="exit 3 when a discrepancy is flagged")
    common(p, dplus=True)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("scan", help="rank reports over a range of radicands")
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--i", type=int, nargs="+", default=[3])
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="add a timing_ms column (not reproducible)")
    common(p, dplus=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("genus", help="genus-formula exponent, quadratic or from supplied orders")
    p.add_argument("--d", type=int)
    p.add_argument("--i", type=int, default=3)
    p.add_argument("--x-log2", type=int)
    p.add_argument("--local-h1-log2", help="comma-separated log2 orders")
    p.add_argument("--global-h1-log2", type=int)
    p.add_argument("--norm-index-log2", type=int)
    common(p, dplus=True)
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("hilbert", help="Hilbert symbol (a, b)_v")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--place", required=True, help="a prime or 'inf'")
    common(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("local-orders", help="|H^0(K, Q_2/Z_2(1-i))| for a local field")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--f", type=int, default=1)
    p.add_argument("--twist", type=int, default=3)
    p.add_argument("--kmax", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_local_orders)

    p = sub.add_parser("homology", help="Tate cohomology of a finite 2-module")
    p.add_argument("--orders", required=True, help="cyclic orders, e.g. '4,4'")
    p.add_argument("--action", required=True, help="rows of sigma, e.g. '0,1;1,0'")
    p.add_argument("--method", choices=["auto", "enumerate", "snf"], default="auto")
    common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("selfcheck", help="run oracle agreement sweeps")
    p.add_argument("--suite", action="append", help=f"one of {', '.join(selfcheck.SUITES)}")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
