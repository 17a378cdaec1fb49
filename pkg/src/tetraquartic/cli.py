"""Command-line front end: ``tetraquartic <subcommand> [--input FILE] [--format text|json] [--jobs N]``."""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .errors import InputParseError
from .report import exit_status, render, run_report, to_json, to_text

SUBCOMMANDS = ("lattice", "discform", "isometry", "quartic", "report")


def stringify(obj):
    """Every number becomes an exact string so JSON consumers never see floats."""
    if isinstance(obj, dict):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    if isinstance(obj, (bool, int, Fraction)) or obj is None:
        return render(obj)
    return obj


def resolve_jobs(arg, environ=None):
    environ = os.environ if environ is None else environ
    if arg is not None:
        jobs = arg
    else:
        raw = environ.get("TETRAQUARTIC_JOBS", "").strip()
        if not raw:
            return 1
        try:
            jobs = int(raw)
        except ValueError:
            raise SystemExit(f"TETRAQUARTIC_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise SystemExit("--jobs must be at least 1")
    return jobs


def _extras(subcommand, summary):
    extra = {}
    if subcommand == "lattice":
        from .lattice import standard_registry

        extra["lattice"] = standard_registry().to_json()
    elif subcommand == "discform":
        from .discform import build_disc_group, generator_table
        from .lattice import m_lattice

        extra["generators"] = {name: {"canonical": val, "signed": sgn}
                               for name, val, sgn in generator_table(build_disc_group(m_lattice()))}
    elif subcommand == "isometry":
        from .isometry import decide_order, load_printed_matrices

        pm = load_printed_matrices()
        cert = decide_order(pm.alpha.compose(pm.beta))
        extra["alpha_beta"] = {"charpoly": list(cert.charpoly), "traces": list(cert.trace_sequence),
                               "entry_growth": list(cert.entry_growth), "verdict": cert.verdict}
    if summary:
        extra["quartic"] = summary
    return stringify(extra)


def _text_extras(extra):
    lines = []

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k in sorted(obj):
                walk(f"{prefix}.{k}" if prefix else k, obj[k])
        elif isinstance(obj, list) and obj and all(isinstance(x, str) for x in obj):
            lines.append(f"{prefix} = [{', '.join(obj)}]")
        elif isinstance(obj, list):
            for i, x in enumerate(obj):
                walk(f"{prefix}[{i}]", x)
        else:
            lines.append(f"{prefix} = {obj}")

    walk("", extra)
    return "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(prog="tetraquartic", description="Exact verification of tetrahedral quartic claims.")
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    p.add_argument("--input", metavar="FILE", help="JSON file with the twelve coefficients (default: reference sample)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $TETRAQUARTIC_JOBS or 1)")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    jobs = resolve_jobs(args.jobs)
    coeffs = None
    if args.input:
        from .quartic import parse_input

        try:
            with open(args.input, encoding="utf-8") as fh:
                coeffs = parse_input(fh.read())
        except OSError as exc:
            print(f"tetraquartic: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
            return 2
        except InputParseError as exc:
            print(f"tetraquartic: {args.input}: {exc}", file=sys.stderr)
            return 2
    summary = {} if args.subcommand in ("quartic", "report") else None
    records = run_report(args.subcommand, coeffs=coeffs, jobs=jobs, summary=summary)
    extra = _extras(args.subcommand, summary)
    if args.format == "json":
        print(to_json(records, extra))
    else:
        print(to_text(records))
        if extra:
            print()
            print(_text_extras(extra))
    return exit_status(records)


if __name__ == "__main__":
    sys.exit(main())
