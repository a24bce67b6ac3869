"""Command-line front end.

Subcommands: ``zeros``, ``normal-form``, ``classify``, ``bounds``, ``verify``.
JSON goes to standard output; ``--csv PATH`` writes a CSV file instead.
Exit codes: 0 success, 1 usage error, 2 verification violations,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from .bounds import verify_suite
from .convexity import DEFAULT_TOL, Verdict, classify_empirical, classify_theoretical
from .errors import (
    DegreeTooSmall,
    ParameterOutOfRange,
    SturmZerosError,
)
from .families import Family, FamilySpec, Purpose, validate
from .normal_form import F_eval, critical_points, j_eval
from .reports import ClassificationPayload, GridPoint, NormalFormPayload, ReportEnvelope
from .serialize import csv_cell
from .sweep import DEFAULT_GRID, DEFAULT_SWEEP_VERSION, GridEntry, run_sweep
from .zeros import compute_zeros

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def parse_range(text, cast=float):
    """``"lo:hi:step"`` (inclusive) or a single number."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return (cast(parts[0]),)
        if len(parts) != 3:
            raise ValueError
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected lo:hi:step or a number") from None
    if not step > 0 or hi < lo:
        raise UsageError(f"bad range {text!r}; need step > 0 and hi >= lo")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return tuple(cast(lo + i * step) for i in range(count))


def parse_grid(text):
    parts = text.split(":")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if len(parts) != 3 or count < 1:
            raise ValueError
    except (ValueError, IndexError):
        raise UsageError(f"bad grid {text!r}; expected lo:hi:count") from None
    return np.linspace(lo, hi, count)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--family", choices=[f.value for f in Family])
    common.add_argument("--csv", metavar="PATH")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)

    single = _Parser(add_help=False)
    single.add_argument("--alpha", type=float)
    single.add_argument("--beta", type=float)
    single.add_argument("--n", type=int)

    parser = _Parser(prog="sturmzeros", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("zeros", parents=[common, single], help="zeros and spacings")
    nf = sub.add_parser("normal-form", parents=[common, single], help="F and j on a grid")
    nf.add_argument("--t-grid", metavar="LO:HI:COUNT")
    sub.add_parser("classify", parents=[common, single], help="convexity partition and empirical check")
    sub.add_parser("bounds", parents=[common, single], help="spacing bounds for one spec")
    ver = sub.add_parser("verify", parents=[common], help="run a sweep")
    ver.add_argument("--sweep", choices=["default"])
    ver.add_argument("--alpha", action="append", default=[], metavar="LO:HI:STEP")
    ver.add_argument("--beta", action="append", default=[], metavar="LO:HI:STEP")
    ver.add_argument("--n", action="append", default=[], metavar="LO:HI:STEP")
    return parser


def _spec_from_args(args):
    if args.family is None or args.alpha is None or args.n is None:
        raise UsageError("--family, --alpha and --n are required")
    family = Family(args.family)
    if family is Family.JACOBI:
        if args.beta is None:
            raise UsageError("--beta is required for jacobi")
        return FamilySpec.jacobi(args.alpha, args.beta, args.n)
    if args.beta is not None and not (family is Family.ULTRASPHERICAL and args.beta == args.alpha):
        raise UsageError("--beta is only accepted for jacobi")
    return FamilySpec(family, args.alpha, args.n)


def _rows_zeros(zs):
    for k, x in enumerate(zs.zeros, 1):
        yield {"kind": "zero", "k": k, "x": x}
    for k, d in enumerate(zs.spacings, 1):
        yield {"kind": "gap", "k": k, "x": zs.zeros[k - 1], "x_next": zs.zeros[k], "spacing": d}
    for k, d2 in enumerate(zs.second_differences, 1):
        yield {"kind": "triple", "k": k, "second_difference": d2}


def _rows_normal_form(payload):
    for p in payload.grid:
        yield {"kind": "grid", "t": p.t, "F": p.F, "j": p.j}


def _rows_classify(payload):
    for i, p in enumerate(payload.report.partition):
        yield {"kind": "piece", "k": i, "lo": p.lo, "hi": p.hi, "label": p.label, "provenance": p.provenance}
    if payload.empirical is not None:
        for t in payload.empirical.triples:
            yield {
                "kind": "triple",
                "k": t.k,
                "piece": t.piece,
                "sign": t.sign,
                "second_difference": t.second_difference,
                "verdict": t.verdict,
            }


def _rows_bounds(suite):
    for r in suite.records:
        yield {"kind": "gap", **{f: getattr(r, f) for f in r.__dataclass_fields__}}
    checks = list(suite.global_checks)
    if suite.literal_check is not None:
        checks.append(suite.literal_check)
    for c in checks:
        yield {"kind": "global", **{f: getattr(c, f) for f in c.__dataclass_fields__}}


def _rows_sweep(summary):
    for name in summary.totals.__dataclass_fields__:
        yield {"kind": "total", "name": name, "value": getattr(summary.totals, name)}
    for v in summary.violations:
        yield {"kind": "violation", **{f: getattr(v, f) for f in v.__dataclass_fields__}}
    for v in summary.literal_failures:
        yield {"kind": "literal_failure", **{f: getattr(v, f) for f in v.__dataclass_fields__}}


def write_csv(path, rows):
    rows = list(rows)
    header = []
    for r in rows:
        for key in r:
            if key not in header:
                header.append(key)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, header, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({key: csv_cell(r.get(key)) for key in header})


def _cmd_zeros(args):
    spec = _spec_from_args(args)
    zs = compute_zeros(spec)
    return ReportEnvelope("zeros", spec, zs), _rows_zeros(zs), EXIT_OK


def _cmd_normal_form(args):
    spec = _spec_from_args(args)
    validate(spec, Purpose.CLASSIFICATION)
    if args.t_grid:
        ts = parse_grid(args.t_grid)
    elif spec.kind is Family.LAGUERRE:
        ts = np.linspace(0.05, 4.0 * spec.n + 2.0 * spec.alpha + 12.0, 21)
    else:
        ts = np.linspace(-0.99, 0.99, 21)
    lo, hi = spec.support
    if not all(lo < t < hi for t in ts):
        raise UsageError(f"--t-grid must lie strictly inside ({lo}, {hi})")
    profile = critical_points(spec)
    has_j = spec.kind is not Family.LAGUERRE
    grid = tuple(
        GridPoint(float(t), F_eval(spec, t), j_eval(spec, t) if has_j else None) for t in ts
    )
    payload = NormalFormPayload(profile, grid)
    return ReportEnvelope("normal-form", spec, payload), _rows_normal_form(payload), EXIT_OK


def _cmd_classify(args):
    spec = _spec_from_args(args)
    validate(spec, Purpose.ZERO_COMPUTATION)
    report = classify_theoretical(spec, critical_points(spec))
    empirical = None
    if spec.n >= 3:
        empirical = classify_empirical(compute_zeros(spec), report, args.tol)
    payload = ClassificationPayload(report, empirical, args.tol)
    bad = empirical is not None and empirical.count(Verdict.DISAGREES) > 0
    code = EXIT_VIOLATION if bad else EXIT_OK
    return ReportEnvelope("classify", spec, payload), _rows_classify(payload), code


def _cmd_bounds(args):
    spec = _spec_from_args(args)
    suite = verify_suite(spec)
    code = EXIT_VIOLATION if suite.violations else EXIT_OK
    return ReportEnvelope("bounds", spec, suite), _rows_bounds(suite), code


def _cmd_verify(args):
    if args.sweep == "default":
        if args.family or args.alpha or args.beta or args.n:
            raise UsageError("--sweep default takes no grid flags")
        summary = run_sweep(DEFAULT_GRID, name=DEFAULT_SWEEP_VERSION, tol_rel=args.tol)
    else:
        if not (args.family and args.alpha and args.n):
            raise UsageError("verify needs --sweep default or --family with --alpha and --n ranges")
        family = Family(args.family)
        alphas = tuple(v for r in args.alpha for v in parse_range(r))
        degrees = tuple(v for r in args.n for v in parse_range(r, cast=lambda x: int(round(float(x)))))
        betas = None
        if family is Family.JACOBI:
            if not args.beta:
                raise UsageError("--beta is required for jacobi")
            betas = tuple(v for r in args.beta for v in parse_range(r))
        elif args.beta:
            raise UsageError("--beta is only accepted for jacobi")
        summary = run_sweep([GridEntry(family, alphas, degrees, betas)], name="custom", tol_rel=args.tol)
    code = EXIT_OK if summary.ok else EXIT_VIOLATION
    return ReportEnvelope("verify", None, summary), _rows_sweep(summary), code


COMMANDS = {
    "zeros": _cmd_zeros,
    "normal-form": _cmd_normal_form,
    "classify": _cmd_classify,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().rstrip())
        if not args.tol > 0:
            raise UsageError("--tol must be positive")
        envelope, rows, code = COMMANDS[args.command](args)
        if args.csv:
            write_csv(args.csv, rows)
        else:
            stdout.write(envelope.dumps())
        return code
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except (ParameterOutOfRange, DegreeTooSmall) as exc:
        print(f"{parser.prog} {getattr(args, 'command', '')}: {exc}", file=stderr)
        return EXIT_USAGE
    except SturmZerosError as exc:
        print(
            f"{parser.prog} {args.command}: numerical failure ({type(exc).__name__}): {exc}",
            file=stderr,
        )
        return EXIT_NUMERIC


def main():
    sys.exit(run())
