"""Command line interface: ``ehrenfest <subcommand> ...``.

Subcommands: table, fk, evolve, tvd, cutoff, verify, simulate. CSV output
starts with ``#`` comment lines recording the run parameters; JSON output
carries the same data under ``"meta"``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .combinatorics import compositions, multinomial
from .gelfand import ResourceLimitError, check_type_count, zonal_table
from .oracle import build_kernel, power_distribution, simulate, type_labels, verify
from .shuffles import ShuffleKind, fourier_coefficients
from .spectral import cutoff_threshold, distribution_after, tv_curve, tv_distance, uniform

ORDERING = "compositions in lexicographically decreasing order"

EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def comp(k) -> str:
    return " ".join(str(x) for x in k)


def _meta(args, **extra) -> dict:
    meta = {"tool": "ehrenfest", "version": __version__, "command": args.command, "r": args.r, "n": args.n}
    if getattr(args, "shuffle", None) is not None:
        meta["shuffle"] = str(args.shuffle)
    meta["ordering"] = ORDERING
    meta.update(extra)
    return meta


def render(meta: dict, columns: list[str], rows: list[list], fmt_name: str) -> str:
    if fmt_name == "json":
        records = [dict(zip(columns, row)) for row in rows]
        return json.dumps({"meta": meta, "rows": records}, indent=2) + "\n"
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else fmt(v) for v in row])
    return buf.getvalue()


def cmd_table(args) -> tuple[str, int]:
    table = zonal_table(args.r, args.n)
    columns = ["k"]
    for ell in table.index:
        columns += [f"{comp(ell)}_re", f"{comp(ell)}_im"]
    rows = []
    for k, values in zip(table.index, table.values):
        row: list = [comp(k)]
        for v in values:
            row += [float(v.real), float(v.imag)]
        rows.append(row)
    return render(_meta(args), columns, rows, args.format), 0


def cmd_fk(args) -> tuple[str, int]:
    check_type_count(args.r, args.n)
    f = fourier_coefficients(args.shuffle, args.r, args.n)
    rows = [
        [comp(k), multinomial(k), float(v.real), float(v.imag)]
        for k, v in zip(compositions(args.r, args.n), f)
    ]
    return render(_meta(args), ["k", "dimension", "f_re", "f_im"], rows, args.format), 0


def cmd_evolve(args) -> tuple[str, int]:
    dist = distribution_after(args.shuffle, args.n_steps, args.r, args.n)
    rows = [
        [comp(ell), multinomial(ell), m, p]
        for ell, m, p in zip(dist.index, dist.masses, dist.type_probabilities())
    ]
    tv = tv_distance(dist, uniform(args.r, args.n))
    meta = _meta(args, N=args.n_steps, tv_to_uniform=fmt(tv))
    return render(meta, ["type", "orbit_size", "mass_per_state", "type_probability"], rows, args.format), 0


def cmd_tvd(args) -> tuple[str, int]:
    if args.n_min < 0 or args.n_max < args.n_min:
        raise ValueError(f"invalid step range {args.n_min}..{args.n_max}")
    curve = tv_curve(args.shuffle, args.r, args.n, list(range(args.n_min, args.n_max + 1)))
    columns = ["N", "tv_exact", "tv_bound", "tv_squared", "bound_squared"]
    if args.r == 2:
        columns.append("tv_parity_limit")
    rows = [list(row[: len(columns)]) for row in curve]
    meta = _meta(args, n_min=args.n_min, n_max=args.n_max)
    return render(meta, columns, rows, args.format), 0


def cmd_cutoff(args) -> tuple[str, int]:
    cut = cutoff_threshold(args.r, args.n, args.c)
    tv = tv_distance(distribution_after(ShuffleKind.ANY_OTHER, cut.whole_steps, args.r, args.n), uniform(args.r, args.n))
    holds = tv * tv - cut.offset <= cut.guarantee
    columns = ["c", "steps", "whole_steps", "guarantee", "offset", "tv_squared_at_whole_steps", "holds"]
    rows = [[args.c, cut.steps, cut.whole_steps, cut.guarantee, cut.offset, tv * tv, str(holds).lower()]]
    meta = _meta(args, shuffle=ShuffleKind.ANY_OTHER.value)
    return render(meta, columns, rows, args.format), 0 if holds else EXIT_FAILED_CHECK


def cmd_verify(args) -> tuple[str, int]:
    if args.n_steps < 0:
        raise ValueError(f"--n-steps must be >= 0, got {args.n_steps}")
    report = verify(args.shuffle, args.r, args.n, args.n_steps, args.tolerance)
    report = {"meta": _meta(args), **report}
    return json.dumps(report, indent=2) + "\n", 0 if report["status"] == "pass" else EXIT_FAILED_CHECK


def cmd_simulate(args) -> tuple[str, int]:
    emp = simulate(args.shuffle, args.r, args.n, args.n_steps, args.trials, args.seed)
    exact = power_distribution(build_kernel(args.shuffle, args.r, args.n), args.n_steps).probabilities()
    tv = emp.tv_to(exact)
    labels = type_labels(args.r, args.n)
    per_type = np.bincount(labels, weights=emp.counts, minlength=len(compositions(args.r, args.n)))
    report = {
        "meta": _meta(args, rng=emp.algorithm, seed=args.seed, trials=args.trials, N=args.n_steps),
        "tv_to_exact": tv,
        "tolerance": args.tolerance,
        "status": "pass" if tv <= args.tolerance else "fail",
        "counts_per_type": {comp(ell): int(c) for ell, c in zip(compositions(args.r, args.n), per_type)},
    }
    return json.dumps(report, indent=2) + "\n", 0 if report["status"] == "pass" else EXIT_FAILED_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ehrenfest", description="Spectral analysis of r-urn Ehrenfest shuffles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, shuffle=True, fmt=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("-r", type=int, required=True, help="number of urns (>= 2)")
        p.add_argument("-n", type=int, required=True, help="number of balls (>= 1)")
        if shuffle:
            p.add_argument("--shuffle", type=ShuffleKind.parse, default=ShuffleKind.ANY_OTHER,
                           help="any-other (default), cyclic-left or cyclic-bidir")
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", help="write to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    add("table", cmd_table, "zonal spherical function table", shuffle=False)
    add("fk", cmd_fk, "Fourier coefficients f_k of a shuffle")
    p = add("evolve", cmd_evolve, "per-type distribution after N steps")
    p.add_argument("--n-steps", type=int, required=True)
    p = add("tvd", cmd_tvd, "total variation curve and its upper bound")
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, required=True)
    p = add("cutoff", cmd_cutoff, "cutoff threshold and guarantee (any-other shuffle)", shuffle=False)
    p.add_argument("-c", type=float, default=0.0, help="cutoff offset c")
    p = add("verify", cmd_verify, "compare spectral results with exact kernel powering", fmt=False)
    p.add_argument("--n-steps", type=int, default=25)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p = add("simulate", cmd_simulate, "Monte Carlo run compared with the exact law", fmt=False)
    p.add_argument("--n-steps", type=int, required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=0.02, help="max allowed TV to the exact law")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.r < 2 or args.n < 1:
            raise ValueError(f"need r >= 2 and n >= 1, got r={args.r}, n={args.n}")
        text, status = args.func(args)
    except ResourceLimitError as exc:
        print(f"ehrenfest {args.command}: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"ehrenfest {args.command}: invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
