"""Command-line surface.

Subcommands: enumerate, stats, sigma, table, distribution, avoiders,
verify. Every subcommand takes --format text|json; partition-valued
output defaults to compact text whenever all entries are <= 9 and falls
back to the comma form otherwise. Results go to stdout, diagnostics to
stderr. Exit codes: 0 success, 1 usage or input error, 2 verification
failure.
"""

import argparse
import json
import sys
from collections import Counter

from .errors import NoNonsingletonBlock, OneIsSingleton, PartinvError
from .involution import orbit_class, sigma
from .partitions import (
    DEFAULT_MAX_N,
    enumerate_all,
    enumerate_nonoverlapping,
    format_partition,
    is_nonoverlapping,
    parse,
    span,
)
from .patterns import DEFAULT_MAX_N as PATTERN_MAX_N
from .patterns import avoider_last_entry_distribution
from .recurrence import v_table
from .stats import aux_r, aux_s, stat_x, stat_y
from .verify import run_all


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _partition_arg(text: str):
    return parse(text)


def cmd_enumerate(args) -> int:
    max_n = args.max_n if args.max_n is not None else DEFAULT_MAX_N
    gen = enumerate_nonoverlapping if args.nonoverlapping else enumerate_all
    stream = gen(args.n, max_n=max_n)
    if args.format == "json":
        parts = list(stream)
        _emit_json({
            "n": args.n,
            "nonoverlapping": args.nonoverlapping,
            "count": len(parts),
            "partitions": [p.to_json() for p in parts],
        })
    else:
        for p in stream:
            print(format_partition(p))
    return 0


def cmd_stats(args) -> int:
    p = _partition_arg(args.partition)
    try:
        r = aux_r(p)
    except NoNonsingletonBlock:
        r = None
    try:
        s = aux_s(p)
    except OneIsSingleton:
        s = None
    spans = [span(b) for b in p.blocks]
    nonov = is_nonoverlapping(p)
    if args.format == "json":
        _emit_json({
            "partition": p.to_json(),
            "n": p.n,
            "x": stat_x(p),
            "y": stat_y(p),
            "r": r,
            "s": s,
            "spans": [[sp.lo, sp.hi] for sp in spans],
            "nonoverlapping": nonov,
        })
    else:
        print(f"partition: {format_partition(p)}")
        print(f"n: {p.n}")
        print(f"X: {stat_x(p)}")
        print(f"Y: {stat_y(p)}")
        if r is not None:
            print(f"r: {r}")
        if s is not None:
            print(f"s: {s}")
        print("spans: " + " ".join(f"[{sp.lo},{sp.hi}]" for sp in spans))
        print(f"nonoverlapping: {_bool(nonov)}")
    return 0


def cmd_sigma(args) -> int:
    p = _partition_arg(args.partition)
    image = sigma(p)
    orbit = orbit_class(p)
    if args.format == "json":
        _emit_json({
            "input": p.to_json(),
            "image": image.to_json(),
            "image_text": format_partition(image),
            "orbit": orbit.value,
        })
    else:
        print(format_partition(image))
        print(f"orbit: {orbit.value}")
    return 0


def cmd_table(args) -> int:
    table = v_table(args.n_max)
    sums = table.row_sums()
    if args.format == "json":
        _emit_json({
            "n_max": table.n_max,
            "rows": [[str(v) for v in row] for row in table.rows],
            "row_sums": [str(v) for v in sums],
        })
        return 0
    label_w = max(3, len(str(table.n_max)))
    col_w = [
        max(len(str(k)), max(len(str(table.rows[n - 1][k - 1])) for n in range(k, table.n_max + 1)))
        for k in range(1, table.n_max + 1)
    ]
    header = "n\\k".rjust(label_w) + "".join(f"  {str(k).rjust(col_w[k - 1])}" for k in range(1, table.n_max + 1))
    print(header)
    for n, row in enumerate(table.rows, start=1):
        cells = "".join(f"  {str(v).rjust(col_w[k])}" for k, v in enumerate(row))
        print(str(n).rjust(label_w) + cells)
    print()
    print("row sums")
    sum_w = max(len(str(v)) for v in sums)
    for n, total in enumerate(sums, start=1):
        print(str(n).rjust(label_w) + "  " + str(total).rjust(sum_w))
    return 0


def cmd_distribution(args) -> int:
    max_n = args.max_n if args.max_n is not None else DEFAULT_MAX_N
    gen = enumerate_nonoverlapping if args.nonoverlapping else enumerate_all
    joint = Counter()
    for p in gen(args.n, max_n=max_n):
        joint[(stat_x(p), stat_y(p))] += 1
    if args.stat == "joint":
        cells = [[i, j, joint[(i, j)]] for i, j in sorted(joint)]
    else:
        marg = Counter()
        for (i, j), c in joint.items():
            marg[i if args.stat == "x" else j] += c
        cells = [[k, marg[k]] for k in sorted(marg)]
    if args.format == "json":
        _emit_json({
            "n": args.n,
            "stat": args.stat,
            "nonoverlapping": args.nonoverlapping,
            "counts": cells,
        })
    else:
        for row in cells:
            print(" ".join(map(str, row)))
    return 0


def cmd_avoiders(args) -> int:
    max_n = args.max_n if args.max_n is not None else PATTERN_MAX_N
    dist = avoider_last_entry_distribution(args.n, max_n=max_n)
    total = sum(dist.values())
    if args.format == "json":
        _emit_json({
            "n": args.n,
            "count": total,
            "last_entry_distribution": [[k, dist[k]] for k in sorted(dist)],
        })
    else:
        print(f"count {total}")
        for k in sorted(dist):
            print(f"{k} {dist[k]}")
    return 0


def cmd_verify(args) -> int:
    reports = run_all(args.max_n)
    failed = [r for r in reports if not r.ok]
    if args.format == "json":
        _emit_json({
            "ok": not failed,
            "checks": [r.to_json() for r in reports],
        })
    else:
        for r in reports:
            print(r.summary())
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 2 if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="partinv",
                     description="Set-partition statistics, the X/Y-swapping involution, "
                                 "the v-triangle, and brute-force verification.")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def common(p, max_n_help=None):
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default text)")
        p.add_argument("--compact", action="store_true",
                       help="compact partition text when every entry is <= 9 "
                            "(the default; entries > 9 always use the comma form)")
        if max_n_help:
            p.add_argument("--max-n", type=int, default=None, metavar="N",
                           help=max_n_help)

    p = sub.add_parser("enumerate", help="list the partitions of [n]")
    p.add_argument("n", type=int)
    p.add_argument("--nonoverlapping", action="store_true",
                   help="only nonoverlapping partitions")
    common(p, max_n_help=f"enumeration guard override (default {DEFAULT_MAX_N})")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stats", help="X, Y, r, s, spans and the nonoverlapping flag")
    p.add_argument("partition", help="partition text, e.g. '3/4/7/852/961'")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sigma", help="apply the involution")
    p.add_argument("partition", help="partition text, e.g. '2/431'")
    common(p)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("table", help="the v-triangle and its row sums")
    p.add_argument("n_max", type=int)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("distribution", help="X/Y/joint statistic counts over partitions of [n]")
    p.add_argument("n", type=int)
    p.add_argument("--stat", choices=("x", "y", "joint"), default="joint", type=str.lower)
    p.add_argument("--nonoverlapping", action="store_true",
                   help="restrict to nonoverlapping partitions")
    common(p, max_n_help=f"enumeration guard override (default {DEFAULT_MAX_N})")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("avoiders", help="pattern-avoider count and last-entry distribution")
    p.add_argument("n", type=int)
    common(p, max_n_help=f"factorial guard override (default {PATTERN_MAX_N})")
    p.set_defaults(func=cmd_avoiders)

    p = sub.add_parser("verify", help="run every exhaustive check")
    common(p, max_n_help="run all checks to this depth instead of their defaults")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse signals both --help (0) and usage errors (1, via
        # _Parser.error) this way; surface them as return codes
        return exc.code if isinstance(exc.code, int) else 1
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return 1
    try:
        return args.func(args)
    except PartinvError as exc:
        print(f"partinv: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
