"""Command line interface.

Subcommands: verify, count, boxdim, render, constants, report.  Exit codes:
0 success, 1 validation or usage error, 2 budget/feasibility refusal.  All
outputs are byte-deterministic for a fixed argument vector; floats are
printed with ten significant digits and counts as exact decimal integers.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from . import boxdim, counting, geometry, scan
from .grid import PRESETS, GridConfig, load_config, preset
from .verify import VerifyFailure, verify as run_verify

FLOAT_FMT = "%.10g"


class Parser(argparse.ArgumentParser):
    """argparse front end that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _add_config_flags(sub):
    group = sub.add_mutually_exclusive_group()
    group.add_argument(
        "--preset",
        choices=sorted(PRESETS),
        help="built-in configuration (default: paper)",
    )
    group.add_argument("--config", help="path to a JSON config {\"m\":..,\"n\":..,\"p\":..}")


def _config_from(args) -> GridConfig:
    if getattr(args, "config", None):
        return load_config(args.config)
    return preset(args.preset or "paper")


def build_parser() -> Parser:
    parser = Parser(prog="boxgap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=Parser)
    sub.required = True

    p = sub.add_parser("verify", help="run the oracle cross-validation suite")
    _add_config_flags(p)
    p.add_argument("--nmax", type=int, default=10, help="work cap for the checks (default 10)")
    p.add_argument("--only", help="run a single named check")

    p = sub.add_parser("count", help="emit a family count table as CSV")
    _add_config_flags(p)
    p.add_argument(
        "--family",
        choices=counting.FAMILIES,
        default="loops",
        help="word family to count (default loops)",
    )
    p.add_argument("--nmax", type=int, default=50, help="largest length N (default 50)")
    p.add_argument("--out", help="CSV path (default: stdout)")

    p = sub.add_parser("boxdim", help="emit the scale/ratio series as CSV")
    _add_config_flags(p)
    p.add_argument("--kmax", type=int, help="all scales k = 1..kmax (default 20)")
    p.add_argument(
        "--scales",
        choices=("all", "paper"),
        default="all",
        help="scale family: every k, or the two power families",
    )
    p.add_argument("--nmax", type=int, default=2, help="family depth for --scales paper")
    p.add_argument(
        "--oracle",
        choices=("dp", "grid"),
        default="dp",
        help="n_hat column source: histogram DP or geometric grid count",
    )
    p.add_argument("--out", help="CSV path (default: stdout)")

    p = sub.add_parser("render", help="rasterize the depth-d cylinder union to a P4 bitmap")
    _add_config_flags(p)
    p.add_argument("--depth", type=int, default=5, help="cylinder depth (default 5)")
    p.add_argument("--width", type=int, default=864, help="pixels across (default 864)")
    p.add_argument("--height", type=int, default=864, help="pixels down (default 864)")
    p.add_argument("--out", required=True, help="output .pbm path")

    p = sub.add_parser("constants", help="print the two closed-form dimension constants")
    _add_config_flags(p)

    p = sub.add_parser("report", help="emit the ratio-oscillation report as markdown")
    _add_config_flags(p)
    p.add_argument("--nmax", type=int, default=1, help="scale-family depth (default 1)")
    p.add_argument("--out", help="markdown path (default: stdout)")

    return parser


def _emit_rows(rows, fieldnames, out_path):
    if out_path:
        geometry.export_csv(rows, out_path, fieldnames)
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def _cmd_verify(args) -> int:
    cfg = _config_from(args)
    run_verify(cfg, nmax=args.nmax, only=args.only, emit=print)
    print("all checks passed")
    return 0


def _cmd_count(args) -> int:
    cfg = _config_from(args)
    if args.nmax < 0:
        raise ValueError("--nmax must be >= 0")
    table = counting.count_table(args.family, args.nmax, cfg)
    rows = []
    for N, value in enumerate(table.values):
        logv = counting.log_big(value)
        rows.append(
            {
                "N": str(N),
                "value": str(value),
                "log_value": FLOAT_FMT % logv,
                "rate": FLOAT_FMT % (logv / N) if N else "",
            }
        )
    _emit_rows(rows, ["N", "value", "log_value", "rate"], args.out)
    return 0


def _cmd_boxdim(args) -> int:
    cfg = _config_from(args)
    if args.scales == "paper":
        large, half = boxdim.paper_scales(args.nmax, cfg)
        ks = sorted(set(large) | set(half))
    else:
        ks = list(range(1, (args.kmax or 20) + 1))
    rows = []
    for k in ks:
        if args.oracle == "grid":
            value = geometry.grid_box_count(k, cfg)
            l = boxdim.l_of_k(k, cfg)
            ratio = counting.log_big(value) / (k * math.log(cfg.n))
        else:
            rec = boxdim.scale_record(k, cfg)
            value, l, ratio = rec.n_hat, rec.l, rec.ratio
        rows.append(
            {
                "k": str(k),
                "l": str(l),
                "n_hat": str(value),
                "ratio": FLOAT_FMT % ratio,
            }
        )
    _emit_rows(rows, ["k", "l", "n_hat", "ratio"], args.out)
    return 0


def _cmd_render(args) -> int:
    cfg = _config_from(args)
    raster = geometry.rasterize(args.depth, args.width, args.height, cfg)
    geometry.write_pnm(raster, args.out)
    return 0


def _cmd_constants(args) -> int:
    cfg = _config_from(args)
    d_high, d_low = boxdim.dimension_constants(cfg)
    print(("D_high = " + FLOAT_FMT + "  (%.4f to four decimal places)") % (d_high, round(d_high, 4)))
    print(("D_low  = " + FLOAT_FMT + "  (%.4f to four decimal places)") % (d_low, round(d_low, 4)))
    print("gap of the rounded values = %.4f" % (round(d_high, 4) - round(d_low, 4)))
    return 0


def _cmd_report(args) -> int:
    cfg = _config_from(args)
    report = boxdim.gap_report(args.nmax, cfg)
    text = report.to_markdown()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError("cannot write report %s: %s" % (args.out, exc)) from exc
    else:
        sys.stdout.write(text)
    return 0


_DISPATCH = {
    "verify": _cmd_verify,
    "count": _cmd_count,
    "boxdim": _cmd_boxdim,
    "render": _cmd_render,
    "constants": _cmd_constants,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        sys.set_int_max_str_digits(1_000_000)
    except AttributeError:
        pass  # interpreters without the str-digits guard need no bump
    try:
        return _DISPATCH[args.command](args)
    except scan.BudgetError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except VerifyFailure as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
