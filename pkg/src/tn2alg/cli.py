"""
Command-line front end: verification suites with machine-readable reports.

Commands::

    tn2alg verify-algebra    --algebra topological-n2 --range -5..5
    tn2alg check-r           --r r.json --range -3..3
    tn2alg solve-derivations --degree 0 --parity even \
                             --gen-window -2..2 --value-window -8..8
    tn2alg invariant-kernel  --gen-window -2..2 --value-window -8..8
    tn2alg skew-probe        --gen-window -2..2 --value-window -8..8 [--r r.json]

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad input
or configuration.  Reports echo the resolved configuration and are emitted
as JSON (default) or a lossy text rendering; `--out` writes atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import tempfile

from . import derivations, yangbaxter
from .algebra import ALGEBRAS, Generator, bracket, jacobi_defect, skew_defect
from .serialize import FormatError, load_tensor2

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2

_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def parse_range(text: str) -> tuple:
    """Inclusive integer range written lo..hi (e.g. -5..5)."""
    m = _RANGE_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(
            "expected an inclusive range like -5..5, got %r" % (text,)
        )
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range %r" % (text,))
    return (lo, hi)


def parse_parity(text: str) -> int:
    try:
        return {"even": 0, "odd": 1, "0": 0, "1": 1}[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError("parity must be even or odd")


def _emit(report: dict, args) -> None:
    if args.format == "json":
        payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        payload = _render_text(report)
    if args.out:
        _atomic_write(args.out, payload)
    else:
        sys.stdout.write(payload)


def _atomic_write(path: str, payload: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render_text(report: dict, indent: str = "") -> str:
    lines = []

    def walk(obj, prefix):
        if isinstance(obj, dict):
            for key in sorted(obj):
                value = obj[key]
                if isinstance(value, (dict, list)) and value:
                    lines.append("%s%s:" % (prefix, key))
                    walk(value, prefix + "  ")
                else:
                    lines.append("%s%s: %s" % (prefix, key, _scalar_text(value)))
        elif isinstance(obj, list):
            for value in obj:
                lines.append("%s- %s" % (prefix, _scalar_text(value)))
        else:
            lines.append("%s%s" % (prefix, _scalar_text(obj)))

    walk(report, indent)
    return "\n".join(lines) + "\n"


def _scalar_text(value) -> str:
    if isinstance(value, list) and not value:
        return "[]"
    if isinstance(value, dict) and not value:
        return "{}"
    return str(value)


def cmd_verify_algebra(args) -> int:
    algebra = ALGEBRAS[args.algebra]
    lo, hi = args.range
    gens = sorted(algebra.generators(lo, hi), key=Generator.sort_key)
    report = {
        "command": "verify-algebra",
        "algebra": algebra.name,
        "range": [lo, hi],
    }
    failure = None

    pairs = triples = 0
    for x in gens:
        for y in gens:
            pairs += 1
            if not skew_defect(algebra, x, y).is_zero():
                failure = "skew-symmetry fails at [%s, %s]" % (x, y)
                break
            bxy = bracket(algebra.monomial(x), algebra.monomial(y))
            for g in bxy.terms:
                if g.index != x.index + y.index:
                    failure = "grading fails at [%s, %s]" % (x, y)
                if g.parity != ((x.parity + y.parity) & 1):
                    failure = "parity fails at [%s, %s]" % (x, y)
        if failure:
            break
    if not failure:
        for x in gens:
            for y in gens:
                for z in gens:
                    triples += 1
                    if not jacobi_defect(algebra, x, y, z).is_zero():
                        failure = "Jacobi fails at (%s, %s, %s)" % (x, y, z)
                        break
                if failure:
                    break
            if failure:
                break

    report["pairs_checked"] = pairs
    report["triples_checked"] = triples
    report["passed"] = failure is None
    if failure:
        report["counterexample"] = failure
    _emit(report, args)
    return EXIT_OK if failure is None else EXIT_CHECK_FAILED


def cmd_check_r(args) -> int:
    algebra = ALGEBRAS[args.algebra]
    try:
        tensor = load_tensor2(args.r, algebra)
        r = yangbaxter.RMatrix(tensor)
    except (OSError, FormatError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return EXIT_BAD_INPUT
    checks = yangbaxter.run_r_checks(r, args.range)
    report = {
        "command": "check-r",
        "algebra": algebra.name,
        "r_file": args.r,
        "window": list(args.range),
        "r_parity": r.parity,
        "checks": [c.to_dict() for c in checks],
        "passed": all(c.passed for c in checks),
    }
    _emit(report, args)
    return EXIT_OK if report["passed"] else EXIT_CHECK_FAILED


def _window_config(args) -> derivations.WindowConfig:
    return derivations.WindowConfig(
        gen_window=args.gen_window,
        value_window=args.value_window,
        degree=getattr(args, "degree", 0),
        parity=getattr(args, "parity", 0),
        margin=args.margin,
    )


def cmd_solve_derivations(args) -> int:
    algebra = ALGEBRAS[args.algebra]
    try:
        cfg = _window_config(args)
        cfg.validate()
    except derivations.ClosureError as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return EXIT_BAD_INPUT
    report = derivations.compare_der_vs_inn(algebra, cfg)
    payload = report.to_dict()
    payload["command"] = "solve-derivations"
    payload["algebra"] = algebra.name
    _emit(payload, args)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_invariant_kernel(args) -> int:
    algebra = ALGEBRAS[args.algebra]
    try:
        cfg = _window_config(args)
        cfg.validate()
    except derivations.ClosureError as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return EXIT_BAD_INPUT
    report = derivations.invariant_kernel(algebra, cfg)
    payload = report.to_dict()
    payload["command"] = "invariant-kernel"
    payload["algebra"] = algebra.name
    payload["passed"] = report.dim == 0
    _emit(payload, args)
    return EXIT_OK if report.dim == 0 else EXIT_CHECK_FAILED


def cmd_skew_probe(args) -> int:
    algebra = ALGEBRAS[args.algebra]
    if args.r:
        # Directed probe: find a generator whose action breaks skewness.
        try:
            tensor = load_tensor2(args.r, algebra)
        except (OSError, FormatError) as exc:
            sys.stderr.write("error: %s\n" % (exc,))
            return EXIT_BAD_INPUT
        witness = derivations.skew_witness(tensor, args.gen_window)
        payload = {
            "command": "skew-probe",
            "algebra": algebra.name,
            "r_file": args.r,
            "gen_window": list(args.gen_window),
            "witness": str(witness) if witness else None,
            "orbit_skew": witness is None,
        }
        _emit(payload, args)
        return EXIT_OK
    try:
        cfg = _window_config(args)
        cfg.validate()
    except derivations.ClosureError as exc:
        sys.stderr.write("error: %s\n" % (exc,))
        return EXIT_BAD_INPUT
    report = derivations.skew_invariance_probe(algebra, cfg)
    payload = report.to_dict()
    payload["command"] = "skew-probe"
    payload["algebra"] = algebra.name
    _emit(payload, args)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tn2alg",
        description="Exact verification engine for the topological N=2 "
        "superconformal algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--algebra",
            choices=sorted(ALGEBRAS),
            default="topological-n2",
            help="registered algebra (default: topological-n2)",
        )
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write the report to this path (atomic)")

    def windows(p):
        p.add_argument("--gen-window", type=parse_range, default=(-2, 2))
        p.add_argument("--value-window", type=parse_range, default=(-8, 8))
        p.add_argument("--margin", type=int, default=1)

    p = sub.add_parser("verify-algebra", help="axiom sweeps over a generator range")
    common(p)
    p.add_argument("--range", type=parse_range, default=(-5, 5))
    p.set_defaults(func=cmd_verify_algebra)

    p = sub.add_parser("check-r", help="Yang-Baxter and coalgebra checks for r")
    common(p)
    p.add_argument("--r", required=True, help="JSON file holding the r-matrix")
    p.add_argument("--range", type=parse_range, default=(-3, 3))
    p.set_defaults(func=cmd_check_r)

    p = sub.add_parser(
        "solve-derivations", help="windowed derivation cohomology at one degree"
    )
    common(p)
    windows(p)
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--parity", type=parse_parity, default=0)
    p.set_defaults(func=cmd_solve_derivations)

    p = sub.add_parser("invariant-kernel", help="solve x.r = 0 over the window")
    common(p)
    windows(p)
    p.set_defaults(func=cmd_invariant_kernel)

    p = sub.add_parser(
        "skew-probe", help="skew-invariance probe (optionally for one r file)"
    )
    common(p)
    windows(p)
    p.add_argument("--r", help="probe this tensor directly for a witness")
    p.set_defaults(func=cmd_skew_probe)

    return parser


_VALUE_FLAGS = ("--range", "--gen-window", "--value-window")


def _join_range_flags(argv) -> list:
    """Fold `--range -5..5` into `--range=-5..5` so argparse accepts it.

    argparse would otherwise read the leading `-` of a negative bound as a
    new option.
    """
    out = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _VALUE_FLAGS and k + 1 < len(argv):
            out.append("%s=%s" % (tok, argv[k + 1]))
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_range_flags(list(argv)))
    except SystemExit as exc:
        # argparse exits with 2 on bad flags, which matches our convention
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
