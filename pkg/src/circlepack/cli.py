"""Command-line front end.

Exit codes: 0 on success, 1 on invalid input, 2 when a packing fails its
geometric verification.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from . import hexpack, lens, lune, render, sector, square
from .errors import CirclePackError, InternalCheckFailed, InvalidInput

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Reports usage problems as invalid input instead of argparse's exit 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _precision(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if not 4 <= p <= 17:
        raise argparse.ArgumentTypeError(f"precision must lie in [4, 17], got {p}")
    return p


def _tolerance(text: str) -> float:
    try:
        t = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"tolerance must be a number, got {text!r}")
    if not (math.isfinite(t) and t > 0.0):
        raise argparse.ArgumentTypeError(f"tolerance must be positive and finite, got {text!r}")
    return t


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    common.add_argument("--out", default=None, help="output file (default: standard output)")
    common.add_argument("--precision", type=_precision, default=17, help="significant digits, 4 to 17")
    common.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True)
    common.add_argument("--tolerance", type=_tolerance, default=1e-9, help="residual tolerance relative to region size")

    parser = _Parser(prog="circlepack", description="Chains of tangent circles in planar regions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("square-a", "square: semicircle and quarter circle, closed off by a side"),
        ("square-b", "square: two semicircles and a quarter circle"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--side", type=float, required=True)
        p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("sector", parents=[common], help="circular sector")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--angle-deg", type=float, required=True)
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("lens", parents=[common], help="two equal touching circles on a line")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("lune", parents=[common], help="two tangent circles inside a third")
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--minor", type=int, default=0)
    p.add_argument("--major", type=int, default=0)

    p = sub.add_parser("hex", parents=[common], help="hexagonal packing metrics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=float, default=1.0)

    p = sub.add_parser("hex-curve", parents=[common], help="hexagonal packing density against n")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    return parser


def _sequences(args) -> tuple[list, object]:
    """Packing sequences for a chain subcommand plus the matching verifier."""
    cmd = args.command
    if cmd in ("square-a", "square-b"):
        spec = square.SquareRegionSpec(args.side, square.SquareMode(cmd), args.count)
        return [square.pack(spec)], square.verify
    if cmd == "sector":
        if not math.isfinite(args.angle_deg):
            raise InvalidInput(f"angle must be finite, got {args.angle_deg!r}", "angle-deg")
        try:
            spec = sector.SectorSpec(args.radius, math.radians(args.angle_deg), args.count)
        except InvalidInput as exc:
            if exc.parameter == "central_angle":
                exc.parameter = "angle-deg"
            raise
        return [sector.pack(spec)], sector.verify
    if cmd == "lens":
        return [lens.pack(lens.LensSpec(args.radius, args.count))], lens.verify
    if cmd == "lune":
        spec = lune.LuneSpec(args.R, args.a, args.b, args.minor, args.major)
        return list(lune.pack_lune(spec)), lune.verify
    raise AssertionError(cmd)


def _render_sequences(args, out) -> int:
    seqs, verifier = _sequences(args)
    reports = [verifier(s, args.tolerance) for s in seqs] if args.verify else None
    if args.format == "csv":
        text = render.sequences_csv(seqs, args.precision)
    elif args.format == "json":
        text = render.sequences_json(seqs, args.precision, reports)
    else:
        text = render.sequences_svg(seqs, args.precision)
    out(text)
    for s in seqs:
        if s.meta.get("truncated"):
            print(f"warning: {s.region} chain stopped after {len(s)} circles (radius underflow)", file=sys.stderr)
    if reports:
        failed = [f for r in reports for f in r.failures()]
        if failed:
            worst = max(failed, key=lambda kv: kv[1])
            print(
                f"verification failed: {len(failed)} residual(s) above tolerance; worst {worst[0]} = {worst[1]:.3e}",
                file=sys.stderr,
            )
            return EXIT_VERIFY
    return EXIT_OK


def _render_hex(args, out) -> int:
    spec = hexpack.HexPackSpec(args.n, args.r)
    m = hexpack.metrics(spec)
    if args.format == "csv":
        out(render.hex_csv(args.n, args.r, m, args.precision))
    elif args.format == "json":
        out(render.hex_json(args.n, args.r, m, args.precision))
    else:
        out(render.hex_svg(m, args.precision))
    return EXIT_OK


def _render_curve(args, out) -> int:
    rows = hexpack.density_curve(args.n_min, args.n_max)
    if args.format == "csv":
        out(render.curve_csv(rows, args.precision))
    elif args.format == "json":
        out(render.curve_json(rows, args.precision))
    else:
        out(render.curve_svg(rows, args.precision))
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    chunks: list[str] = []
    try:
        if args.command == "hex":
            code = _render_hex(args, chunks.append)
        elif args.command == "hex-curve":
            code = _render_curve(args, chunks.append)
        else:
            code = _render_sequences(args, chunks.append)
    except InvalidInput as exc:
        name = f" (parameter {exc.parameter})" if exc.parameter else ""
        print(f"error{name}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalCheckFailed as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except CirclePackError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID

    text = "".join(chunks)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error (parameter out): {exc}", file=sys.stderr)
            return EXIT_INVALID
    else:
        sys.stdout.write(text)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
