"""Command-line front end: identity verification runs and sequence export.

Subcommands:
    verify [--id I3] [--order N] [--oracle-bound B] [--format json|text] [--output F]
    seq <name> --upto K [--format csv|json] [--output F]
    coeff <expr-id> <n>

The SPTLAB_ORDER environment variable supplies a default truncation order;
an explicit --order flag wins.  ``verify`` exits 0 exactly when every
executed (non-diagnostic) check passes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import identities


def _resolve_order(flag_value: int | None) -> int | None:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(identities.ORDER_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(
                f"{identities.ORDER_ENV_VAR} must be an integer, got {env!r}"
            )
    return None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _format_text(results, order, oracle_bound) -> str:
    lines = [
        f"identity verification: order={'default' if order is None else order} "
        f"oracle_bound={oracle_bound if oracle_bound is not None else identities.DEFAULT_ORACLE_BOUND}"
    ]
    for r in results:
        line = f"{r.id:>4}  {r.status:<5} order={r.order_checked:<3} ({r.runtime_ms:.1f} ms)"
        if r.first_mismatch is not None:
            idx, left, right = r.first_mismatch
            line += f"  first mismatch at {idx}: {left} vs {right}"
        lines.append(line)
        if r.diagnostic is not None and "name" in r.diagnostic:
            d = r.diagnostic
            note = f"      diagnostic {d['name']}: {d['status']} (expected {d['expected_status']})"
            if "first_mismatch" in d:
                idx, left, right = d["first_mismatch"]
                note += f", first mismatch at {idx}: {left} vs {right}"
            lines.append(note)
    passed = sum(r.status == "pass" for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="sptlab",
        description="exact q-series identity checks for smallest-parts partition statistics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity registry")
    v.add_argument("--id", help="run a single check (e.g. I3) instead of all 22")
    v.add_argument("--order", type=int, default=None, help="series truncation order")
    v.add_argument("--oracle-bound", type=int, default=None,
                   help="max index for enumeration-backed comparisons")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--output", help="write the report to a file instead of stdout")

    s = sub.add_parser("seq", help="export a named sequence")
    s.add_argument("name", choices=identities.SEQUENCE_NAMES)
    s.add_argument("--upto", type=int, required=True, help="largest index to export")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--output", help="write to a file instead of stdout")

    c = sub.add_parser("coeff", help="print one coefficient of a registered series")
    c.add_argument("expr_id", choices=identities.SEQUENCE_NAMES)
    c.add_argument("n", type=int)

    args = parser.parse_args(argv)

    if args.command == "verify":
        order = _resolve_order(args.order)
        try:
            if args.id:
                results = [identities.run(args.id, order, args.oracle_bound)]
            else:
                results = identities.run_all(order, args.oracle_bound)
        except ValueError as exc:
            raise SystemExit(str(exc))
        if args.format == "json":
            text = json.dumps(
                identities.report(results, order, args.oracle_bound), indent=2
            ) + "\n"
        else:
            text = _format_text(results, order, args.oracle_bound)
        _emit(text, args.output)
        return 0 if identities.all_passed(results) else 1

    if args.command == "seq":
        try:
            text = identities.export_sequence(args.name, args.upto, args.format)
        except ValueError as exc:
            raise SystemExit(str(exc))
        _emit(text, args.output)
        return 0

    if args.command == "coeff":
        try:
            values = dict(identities.sequence_values(args.expr_id, args.n))
        except ValueError as exc:
            raise SystemExit(str(exc))
        if args.n not in values:
            raise SystemExit(f"{args.expr_id} has no index {args.n}")
        sys.stdout.write(f"{values[args.n]}\n")
        return 0

    return 2  # pragma: no cover


if __name__ == "__main__":
    raise SystemExit(main())
