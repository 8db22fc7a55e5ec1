"""Command-line front end.

Subcommands: profile, table, verify, scan, irn. Output formats are text,
csv, and json; json and csv are byte-deterministic for any worker count
(timing is only embedded when --timing is passed; text always shows it).

Exit codes: 0 success/verified, 1 violations found, 2 usage error.

Every flag can also come from a key=value config file (--config) or an
environment variable (DIVRANK_<NAME>); command line wins, then environment,
then file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .classify import enumerate_index_ratio, scan_range
from .core import (
    CheckpointError,
    ScanInterrupted,
    SieveMemoryError,
    build_spf_sieve,
    format_rational,
    parse_rational,
)
from .scanner import CHUNK_SIZE_DEFAULT
from .sigma import profile
from .theorems import (
    ScanReport,
    scan_conjecture1,
    scan_conjecture2,
    scan_conjecture3,
    scan_lower_bound,
    scan_multiplier,
    scan_pairing,
    scan_prime_power_distinct,
    scan_sigma_bounds,
    scan_unit_fraction,
    scan_upper_bound,
)

ENV_PREFIX = "DIVRANK_"
DEFAULT_MAX = 100_000

VERIFY_CHECKS = (
    "upper-bound",
    "lower-bound",
    "sigma-bounds",
    "multiplier",
    "pairing",
    "prime-power-distinct",
    "unit-fraction",
)

CSV_PROFILE_COLUMNS = ("n", "tau", "sigma_e", "sigma_o", "k", "is_index_ratio")


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def rational_arg(text):
    try:
        return format_rational(parse_rational(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_bool(text):
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _parse_format(text):
    if text not in ("text", "csv", "json"):
        raise ValueError(f"format must be text, csv, or json, got {text!r}")
    return text


# settings that may come from a config file or DIVRANK_* environment variables
SETTING_PARSERS = {
    "max": positive_int,
    "format": _parse_format,
    "out": str,
    "workers": positive_int,
    "chunk_size": positive_int,
    "sieve_limit": positive_int,
    "checkpoint": str,
    "max_chunks": positive_int,
    "timing": _parse_bool,
    "seed": int,
    "samples": positive_int,
    "k": lambda text: [rational_arg(part) for part in text.split(",") if part],
}


def load_config_file(path):
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def resolve_settings(parser, args):
    """Fold config file and environment values into parsed args (CLI wins)."""
    try:
        file_values = load_config_file(args.config) if getattr(args, "config", None) else {}
    except (OSError, ValueError) as exc:
        parser.error(f"cannot read config file: {exc}")
    for name, parse in SETTING_PARSERS.items():
        if not hasattr(args, name) or getattr(args, name) is not None:
            continue
        raw = os.environ.get(ENV_PREFIX + name.upper())
        source = "environment variable " + ENV_PREFIX + name.upper()
        if raw is None and name in file_values:
            raw = file_values[name]
            source = f"config file key {name!r}"
        if raw is None:
            continue
        try:
            setattr(args, name, parse(raw))
        except (ValueError, argparse.ArgumentTypeError) as exc:
            parser.error(f"bad value in {source}: {exc}")
    return args


def _fill_defaults(args):
    defaults = {
        "max": DEFAULT_MAX,
        "format": "text",
        "workers": 1,
        "chunk_size": CHUNK_SIZE_DEFAULT,
        "timing": False,
        "seed": 2,
        "samples": 500,
        "k": [],
    }
    for name, value in defaults.items():
        if hasattr(args, name) and getattr(args, name) is None:
            setattr(args, name, value)
    return args


# ---------------------------------------------------------------------------
# rendering


def _csv_text(rows, header):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload):
    return json.dumps(payload, indent=2) + "\n"


def _bool_str(flag):
    return "true" if flag else "false"


def render_profile(prof, fmt):
    if fmt == "json":
        return _json_text({
            "kind": "profile",
            "n": prof.n,
            "tau": prof.tau,
            "sigma_e": prof.sigma_e,
            "sigma_o": prof.sigma_o,
            "k": format_rational(prof.k),
            "is_index_ratio": prof.is_index_ratio,
            "divisors": list(prof.divisors),
        })
    if fmt == "csv":
        row = (prof.n, prof.tau, prof.sigma_e, prof.sigma_o,
               format_rational(prof.k), _bool_str(prof.is_index_ratio))
        return _csv_text([row], CSV_PROFILE_COLUMNS)
    lines = [
        f"n = {prof.n}",
        "divisors = " + " ".join(map(str, prof.divisors)),
        f"tau = {prof.tau}",
        f"sigma_e = {prof.sigma_e}",
        f"sigma_o = {prof.sigma_o}",
        f"k = {format_rational(prof.k)}",
        f"index ratio number = {'yes' if prof.is_index_ratio else 'no'}",
    ]
    return "\n".join(lines) + "\n"


def _class_rows(table, filters):
    if filters:
        keys = [parse_rational(f) for f in filters]
        pairs = [(k, table.members(k)) for k in keys]
    else:
        pairs = table.sorted_by_smallest_member()
    return [(format_rational(k), members) for k, members in pairs]


def render_table(table, filters, fmt):
    rows = _class_rows(table, filters)
    if fmt == "json":
        return _json_text({
            "kind": "table",
            "lo": table.lo,
            "hi": table.hi,
            "classes": [
                {
                    "k": k,
                    "count": len(members),
                    "first_members": members[:8],
                    "last_members": members[-8:],
                }
                for k, members in rows
            ],
        })
    if fmt == "csv":
        body = [
            (k, len(members),
             " ".join(map(str, members[:8])),
             " ".join(map(str, members[-8:])))
            for k, members in rows
        ]
        return _csv_text(body, ("k", "count", "first_members", "last_members"))
    lines = [f"G_k members in [{table.lo}, {table.hi}]"]
    width = max((len(k) for k, _ in rows), default=1)
    for k, members in rows:
        if not members:
            shown = "(none)"
        elif len(members) <= 12:
            shown = ", ".join(map(str, members))
        else:
            shown = (", ".join(map(str, members[:8]))
                     + ", ..., "
                     + ", ".join(map(str, members[-4:])))
        lines.append(f"{k.rjust(width)} | {shown}")
    return "\n".join(lines) + "\n"


def render_report(report: ScanReport, fmt, timing):
    elapsed = report.elapsed_ms if timing else None
    if fmt == "json":
        return _json_text({
            "kind": "report",
            "check": report.check,
            "lo": report.lo,
            "hi": report.hi,
            "status": report.status,
            "violations": report.violations,
            "elapsed_ms": elapsed,
            "config": report.config,
            "notes": report.notes,
            "applicable": report.applicable,
        })
    if fmt == "csv":
        header = ("check", "lo", "hi", "status", "applicable", "elapsed_ms",
                  "n", "expected", "actual")
        elapsed_cell = "" if elapsed is None else elapsed
        if report.violations:
            body = [
                (report.check, report.lo, report.hi, report.status,
                 report.applicable, elapsed_cell,
                 v["n"], v["expected"], v["actual"])
                for v in report.violations
            ]
        else:
            body = [(report.check, report.lo, report.hi, report.status,
                     report.applicable, elapsed_cell, "", "", "")]
        return _csv_text(body, header)
    lines = [
        f"check = {report.check}",
        f"range = [{report.lo}, {report.hi}]",
        f"status = {report.status}",
        f"applicable = {report.applicable}",
        f"violations = {len(report.violations)}",
        f"elapsed_ms = {report.elapsed_ms}",
        "config = " + " ".join(f"{k}={v}" for k, v in report.config.items()),
    ]
    for v in report.violations[:20]:
        lines.append(f"  violation n={v['n']}: expected {v['expected']}, got {v['actual']}")
    if len(report.violations) > 20:
        lines.append(f"  ... and {len(report.violations) - 20} more")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_irn(limit, members, fmt, sieve=None):
    if fmt == "json":
        return _json_text({
            "kind": "irn",
            "limit": limit,
            "count": len(members),
            "members": members,
        })
    if fmt == "csv":
        rows = []
        for n in members:
            prof = profile(n, sieve)
            rows.append((prof.n, prof.tau, prof.sigma_e, prof.sigma_o,
                         format_rational(prof.k), _bool_str(prof.is_index_ratio)))
        return _csv_text(rows, CSV_PROFILE_COLUMNS)
    return ", ".join(map(str, members)) + "\n"


def emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
        print(f"wrote {out_path}", file=sys.stderr)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_profile(args):
    emit(render_profile(profile(args.n), args.format), args.out)
    return 0


def cmd_table(args):
    try:
        table = scan_range(
            1, args.max,
            workers=args.workers,
            chunk_size=args.chunk_size,
            sieve_limit=args.sieve_limit,
            checkpoint=args.checkpoint,
            max_chunks=args.max_chunks,
        )
    except ScanInterrupted as exc:
        print(f"scan paused at n={exc.last_n}; rerun with the same flags to resume "
              f"from {exc.checkpoint}", file=sys.stderr)
        return 0
    emit(render_table(table, args.k, args.format), args.out)
    return 0


def _report_exit(report, args):
    emit(render_report(report, args.format, args.timing), args.out)
    return 1 if report.status == "violated" else 0


def cmd_verify(args):
    common = dict(workers=args.workers, chunk_size=args.chunk_size,
                  sieve_limit=args.sieve_limit, checkpoint=args.checkpoint,
                  max_chunks=args.max_chunks)
    try:
        if args.check == "upper-bound":
            report = scan_upper_bound(args.max, **common)
        elif args.check == "lower-bound":
            report = scan_lower_bound(args.max, **common)
        elif args.check == "sigma-bounds":
            report = scan_sigma_bounds(args.max, **common)
        elif args.check == "pairing":
            report = scan_pairing(args.max, **common)
        elif args.check == "multiplier":
            n_max = args.max if args.max_given else 1000
            report = scan_multiplier(n_max=n_max, samples=args.samples, seed=args.seed)
        elif args.check == "prime-power-distinct":
            report = scan_prime_power_distinct(args.max)
        else:
            report = scan_unit_fraction(args.max)
    except ScanInterrupted as exc:
        print(f"scan paused at n={exc.last_n}; rerun with the same flags to resume "
              f"from {exc.checkpoint}", file=sys.stderr)
        return 0
    return _report_exit(report, args)


def cmd_scan(args):
    scanners = {1: scan_conjecture1, 2: scan_conjecture2, 3: scan_conjecture3}
    try:
        report = scanners[args.conjecture](
            args.max,
            workers=args.workers,
            chunk_size=args.chunk_size,
            sieve_limit=args.sieve_limit,
            checkpoint=args.checkpoint,
            max_chunks=args.max_chunks,
        )
    except ScanInterrupted as exc:
        print(f"scan paused at n={exc.last_n}; rerun with the same flags to resume "
              f"from {exc.checkpoint}", file=sys.stderr)
        return 0
    return _report_exit(report, args)


def cmd_irn(args):
    members = enumerate_index_ratio(args.max, workers=args.workers)
    sieve = build_spf_sieve(max(args.max, 2)) if args.format == "csv" else None
    emit(render_irn(args.max, members, args.format, sieve), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sub, scans=True):
    sub.add_argument("--format", choices=("text", "csv", "json"), default=None,
                     help="output format (default text)")
    sub.add_argument("--out", default=None, metavar="FILE",
                     help="write the payload to FILE instead of stdout")
    sub.add_argument("--config", default=None, metavar="FILE",
                     help="key=value file supplying defaults for any flag")
    if scans:
        sub.add_argument("--max", type=positive_int, default=None, metavar="N",
                         help=f"scan limit (default {DEFAULT_MAX})")
        sub.add_argument("--workers", type=positive_int, default=None, metavar="W",
                         help="worker processes; never changes output bytes")
        sub.add_argument("--chunk-size", type=positive_int, default=None, metavar="C",
                         help=f"chunk length for range scans (default {CHUNK_SIZE_DEFAULT})")
        sub.add_argument("--sieve-limit", type=positive_int, default=None, metavar="N",
                         help="build the smallest-prime-factor table up to N (default: scan limit)")
        sub.add_argument("--checkpoint", default=None, metavar="FILE",
                         help="save/resume scan state in FILE")
        sub.add_argument("--max-chunks", type=positive_int, default=None, metavar="M",
                         help="process at most M chunks this run, then pause (needs --checkpoint)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="divrank",
        description="Divisor-rank parity sums, the ratio k(n) = sigma_e/sigma_o, "
                    "G_k classification tables, and exhaustive theorem/conjecture scans.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("profile", help="divisor profile of a single integer")
    p.add_argument("n", type=positive_int)
    _add_common(p, scans=False)
    p.set_defaults(func=cmd_profile)

    t = subs.add_parser("table", help="G_k classification table for [1, max]")
    t.add_argument("--k", action="append", type=rational_arg, default=None,
                   metavar="RAT", help="only list this class (repeatable)")
    _add_common(t)
    t.set_defaults(func=cmd_table)

    v = subs.add_parser("verify", help="run one theorem suite over [1, max]")
    v.add_argument("check", choices=VERIFY_CHECKS)
    v.add_argument("--seed", type=int, default=None,
                   help="sample seed for the multiplier check (default 2)")
    v.add_argument("--samples", type=positive_int, default=None,
                   help="sample count for the multiplier check (default 500)")
    v.add_argument("--timing", action="store_const", const=True, default=None,
                   help="embed wall time in json/csv output (breaks byte determinism)")
    _add_common(v)
    v.set_defaults(func=cmd_verify)

    s = subs.add_parser("scan", help="run a conjecture counterexample scan")
    s.add_argument("conjecture", type=int, choices=(1, 2, 3))
    s.add_argument("--timing", action="store_const", const=True, default=None,
                   help="embed wall time in json/csv output (breaks byte determinism)")
    _add_common(s)
    s.set_defaults(func=cmd_scan)

    i = subs.add_parser("irn", help="list index ratio numbers up to max")
    i.add_argument("--workers", type=positive_int, default=None, metavar="W")
    _add_common(i, scans=False)
    i.add_argument("--max", type=positive_int, default=None, metavar="N",
                   help=f"enumeration limit (default {DEFAULT_MAX})")
    i.set_defaults(func=cmd_irn)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    resolve_settings(parser, args)
    args.max_given = getattr(args, "max", None) is not None
    _fill_defaults(args)
    try:
        return args.func(args)
    except (CheckpointError, SieveMemoryError, ValueError) as exc:
        print(f"divrank: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
