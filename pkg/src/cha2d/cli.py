"""Command-line front end.

Subcommands:
    table1     recompute the reference energy table and report deviations
    sweep      all measures over an r0 grid, CSV/JSON plus optional SVG charts
    crossover  radius where an excited state's position/momentum entropies meet
    inversion  radius where the 2s and 3d energies cross

Exit codes: 0 success, 2 tolerance/bound violation (strict mode for sweep),
3 configuration error, 4 numerical failure.
"""

import argparse
import json
import sys

import numpy as np

from . import records as rec_mod
from .hydrogen import STATE_ORDER, DegenerateWavefunctionError, NoBracketError
from .infotheory import MeasureSpec
from .quadrature import NonFiniteIntegrandError, TailNonConvergenceError
from .records import (
    CSV_COLUMNS,
    NoSignChangeError,
    SweepConfig,
    TABLE_TOL,
    crossover_radius,
    inversion_radius,
    sweep,
    table_rows,
)

EXIT_OK = 0
EXIT_TOLERANCE = 2
EXIT_CONFIG = 3
EXIT_NUMERICAL = 4

_NUMERICAL_ERRORS = (
    NoBracketError,
    DegenerateWavefunctionError,
    NonFiniteIntegrandError,
    TailNonConvergenceError,
    NoSignChangeError,
    ArithmeticError,
)


def _fmt(value):
    """Shortest round-trip decimal representation."""
    if value is None:
        return ""
    return repr(float(value))


def parse_r0_grid(text):
    """Comma list of radii, or `min:max:count` for log spacing."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("grid spec must be min:max:count")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        return tuple(float(x) for x in np.geomspace(lo, hi, count))
    return tuple(float(x) for x in text.split(","))


def read_config_file(path):
    """Flat key = value file mirroring the CLI flags."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {line!r}")
            key, _, val = line.partition("=")
            values[key.strip().replace("-", "_")] = val.strip()
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cha2d",
        description="Variational energies and information measures of the "
        "disk-confined two-dimensional hydrogen atom.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, grid=True):
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--states", default=",".join(STATE_ORDER),
                       help="comma list from {1s,2s,2p,3d}")
        if grid:
            p.add_argument("--r0-grid", dest="r0_grid",
                           help="comma list of radii or min:max:count (log)")
        p.add_argument("--lambda", dest="renyi_lambda", type=float,
                       default=2.0 / 3.0, help="lower Renyi order")
        p.add_argument("--beta", dest="renyi_beta", type=float, default=3.0,
                       help="upper Renyi order")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--plot", action="store_true", default=False)
        p.add_argument("--no-plot", dest="plot", action="store_false")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--strict", action="store_true")
        p.add_argument("--tol", type=float, default=TABLE_TOL)

    p_table = sub.add_parser("table1", help="reference energy comparison")
    common(p_table, grid=False)

    p_sweep = sub.add_parser("sweep", help="measures over an r0 grid")
    common(p_sweep)

    p_cross = sub.add_parser("crossover", help="entropy crossover radius")
    common(p_cross, grid=False)
    p_cross.add_argument("--state", default="2s", choices=STATE_ORDER)
    p_cross.add_argument("--bracket", default="1,6",
                         help="comma pair of bracketing radii")

    p_inv = sub.add_parser("inversion", help="2s/3d energy crossing radius")
    common(p_inv, grid=False)
    p_inv.add_argument("--bracket", default="0.5,2",
                       help="comma pair of bracketing radii")
    return parser


def _apply_config_file(args, argv):
    if not getattr(args, "config", None):
        return args
    values = read_config_file(args.config)
    casts = {
        "states": str, "r0_grid": str, "renyi_lambda": float,
        "renyi_beta": float, "out": str, "format": str, "jobs": int,
        "tol": float, "state": str, "bracket": str,
        "lambda": float, "beta": float,
    }
    bools = {"plot", "strict", "no_plot"}
    argv_flags = {a.split("=")[0].lstrip("-").replace("-", "_")
                  for a in argv if a.startswith("--")}
    for key, raw in values.items():
        if key == "lambda":
            key = "renyi_lambda"
        elif key == "beta":
            key = "renyi_beta"
        if key in argv_flags or f"renyi_{key}" in argv_flags:
            continue  # explicit flags override the file
        if key in bools:
            setattr(args, "plot" if key == "no_plot" else key,
                    raw.lower() in ("1", "true", "yes", "on")
                    if key != "no_plot"
                    else raw.lower() not in ("1", "true", "yes", "on"))
        elif key in casts:
            setattr(args, key, casts[key](raw))
        else:
            raise ValueError(f"unknown config key {key!r}")
    return args


def _make_config(args):
    states = tuple(s.strip() for s in args.states.split(","))
    grid = rec_mod.DEFAULT_R0_GRID
    if getattr(args, "r0_grid", None):
        grid = parse_r0_grid(args.r0_grid)
    return SweepConfig(
        states=states,
        r0_grid=grid,
        measure_spec=MeasureSpec(renyi_lambda=args.renyi_lambda,
                                 renyi_beta=args.renyi_beta),
        jobs=args.jobs,
    )


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _records_csv(recs):
    lines = [",".join(CSV_COLUMNS)]
    for r in recs:
        cells = []
        for col in CSV_COLUMNS:
            val = getattr(r, col)
            cells.append(val if col in ("state", "flags") else _fmt(val))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _records_json(recs):
    rows = []
    for r in recs:
        row = {col: getattr(r, col) for col in CSV_COLUMNS}
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"


def cmd_table1(args):
    cfg = _make_config(args)
    rows = table_rows(cfg, tol=args.tol)
    header = ["state", "r0", "alpha", "energy", "E_ref", "deviation", "status"]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(
                row[c] if c in ("state", "status") else _fmt(row[c])
                for c in header))
        _emit("\n".join(lines) + "\n", args.out)
    if any(row["status"].startswith("error") for row in rows):
        return EXIT_NUMERICAL
    if any(row["status"] == "tolerance" for row in rows):
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_sweep(args):
    cfg = _make_config(args)
    recs = sweep(cfg)
    if args.format == "json":
        _emit(_records_json(recs), args.out)
    else:
        _emit(_records_csv(recs), args.out)
    if args.plot:
        from .plotting import write_line_charts

        stem = (args.out.rsplit(".", 1)[0] if args.out else "cha2d_sweep")
        write_line_charts(recs, stem)
    if any(r.flags.startswith("error") for r in recs):
        return EXIT_NUMERICAL
    if args.strict and any(r.flags != "ok" for r in recs):
        return EXIT_TOLERANCE
    return EXIT_OK


def _parse_bracket(text):
    lo, hi = (float(x) for x in text.split(","))
    return lo, hi


def cmd_crossover(args):
    cfg = _make_config(args)
    lo, hi = _parse_bracket(args.bracket)
    r_c = crossover_radius(args.state, lo=lo, hi=hi, config=cfg)
    _emit(f"crossover_radius,{args.state},{_fmt(r_c)}\n", args.out)
    return EXIT_OK


def cmd_inversion(args):
    cfg = _make_config(args)
    lo, hi = _parse_bracket(args.bracket)
    r_star = inversion_radius(lo=lo, hi=hi, config=cfg)
    _emit(f"inversion_radius,{_fmt(r_star)}\n", args.out)
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(argv)
    try:
        args = _apply_config_file(args, argv)
    except (OSError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    handler = {
        "table1": cmd_table1,
        "sweep": cmd_sweep,
        "crossover": cmd_crossover,
        "inversion": cmd_inversion,
    }[args.command]
    try:
        return handler(args)
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except _NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
