"""Command-line front end: ``eulermgn <command> ...`` or ``python -m eulermgn``.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import format_rational
from .errors import DomainError, VerificationError
from .genfun import DEFAULT_ORDER, SERIES_NAMES, chibar_table, named_series
from .moduli import chi_open
from .oracle import (
    MarkedPermutation,
    PermutationGroupAction,
    burnside_polynomial,
    d4_action,
    klein_action,
    symmetric_action,
    tree_statistics,
)
from .quotients import QuotientKind, QuotientSpec, evaluate
from .strata import chi_m1_recursive, chi_m1_via_strata, chi_m2_recursive, chi_m2_via_strata
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
FORMATS = ("table", "json", "csv")


@dataclass
class OutputRecord:
    kind: str
    inputs: dict
    value: Fraction | list[Fraction]
    provenance: str
    audit: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        value = self.value
        out = {
            "kind": self.kind,
            "inputs": self.inputs,
            "value": [format_rational(v) for v in value] if isinstance(value, list)
            else format_rational(value),
            "provenance": self.provenance,
        }
        if self.audit:
            out["audit"] = self.audit
        return out


def _render(record: OutputRecord, fmt: str, index_name: str = "n", first_index: int = 0) -> str:
    if fmt == "json":
        return json.dumps(record.to_json(), indent=2)
    values = record.value if isinstance(record.value, list) else None
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if values is None:
            w.writerow([*record.inputs, "value"])
            w.writerow([*record.inputs.values(), format_rational(record.value)])
        else:
            w.writerow([index_name, "value"])
            for i, v in enumerate(values, start=first_index):
                w.writerow([i, format_rational(v)])
        return buf.getvalue().rstrip("\n")
    args = ", ".join(f"{k}={v}" for k, v in record.inputs.items())
    if values is None:
        return f"{record.kind}({args}) = {format_rational(record.value)}    [{record.provenance}]"
    lines = [f"{record.kind}({args})    [{record.provenance}]"]
    width = max(len(str(first_index + len(values) - 1)), len(index_name))
    for i, v in enumerate(values, start=first_index):
        lines.append(f"  {i:>{width}}  {format_rational(v)}")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

_METHODS = {
    (1, "strata"): chi_m1_via_strata,
    (1, "recursive"): chi_m1_recursive,
    (2, "strata"): chi_m2_via_strata,
    (2, "recursive"): chi_m2_recursive,
}


def _cmd_chi_open(args) -> tuple[OutputRecord, dict]:
    if args.method == "closed":
        value = chi_open(args.genus, args.n)
    else:
        fn = _METHODS.get((args.genus, args.method))
        if fn is None:
            raise DomainError(f"method {args.method!r} is not available for genus {args.genus}")
        value = fn(args.n)
    rec = OutputRecord("chi-open", {"genus": args.genus, "n": args.n}, value,
                       f"{args.method} formula" if args.method == "closed" else args.method)
    return rec, {}


def _cmd_chi_compact(args) -> tuple[OutputRecord, dict]:
    table = chibar_table(args.genus, args.max_n, args.order)
    rec = OutputRecord(
        "chi-compact",
        {"genus": args.genus, "max_n": args.max_n, "order": args.order},
        [v for _, v in table],
        f"n! [t^n] K{args.genus}, checked against the graph-type assembly",
    )
    return rec, {"first_index": table[0][0]}


def _cmd_quotient(args) -> tuple[OutputRecord, dict]:
    kind = QuotientKind.parse(args.kind)
    spec = QuotientSpec(kind, tuple(args.sizes), args.j)
    inputs = {"kind": kind.value, "sizes": list(spec.sizes)}
    if spec.j is not None:
        inputs["j"] = spec.j
    return OutputRecord("quotient", inputs, evaluate(spec), "quotient table"), {}


def _parse_group(n: int, text: str) -> PermutationGroupAction:
    name, _, arg = text.partition(":")
    name = name.lower()
    if name == "klein" and not arg:
        return klein_action(n)
    if name == "d4" and not arg:
        return d4_action(n)
    if name == "sj" and arg:
        try:
            j = int(arg)
        except ValueError:
            raise DomainError(f"sj needs an integer, got {arg!r}") from None
        return symmetric_action(n, j)
    if name == "custom" and arg:
        try:
            gens = [(MarkedPermutation.parse_cycles(n, g),) for g in arg.split(";") if g.strip()]
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        return PermutationGroupAction.generated((n,), gens, label=f"custom on M_0,{n}")
    raise DomainError(f"unknown group {text!r}; use klein, d4, sj:<j> or custom:<cycles>")


def _cmd_oracle_quotient(args) -> tuple[OutputRecord, dict]:
    action = _parse_group(args.n, args.group)
    P = burnside_polynomial(action)
    rec = OutputRecord(
        "oracle-quotient",
        {"n": args.n, "group": args.group},
        P(1),
        "twisted Burnside point count at q = 1",
        audit={"group_order": action.order, "P(q)": P.to_strings()},
    )
    return rec, {}


def _cmd_oracle_trees(args) -> tuple[OutputRecord, dict]:
    count, total = tree_statistics(args.n)
    rec = OutputRecord("oracle-trees", {"n": args.n}, total,
                       "sum over stable rooted trees", audit={"trees": count})
    return rec, {}


def _cmd_series(args) -> tuple[OutputRecord, dict]:
    series = named_series(args.name, args.order).series
    values = series.egf_values() if args.values == "egf" else list(series.coeffs)
    what = "n! [t^n]" if args.values == "egf" else "[t^n]"
    rec = OutputRecord("series", {"name": args.name, "order": args.order, "values": args.values},
                       values, f"{what} {args.name}")
    return rec, {}


def _cmd_verify(args, out) -> int:
    results = run_suites(args.suite)
    for r in results:
        print(r.line(), file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return EXIT_FAILED if failed else EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default="table")

    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER,
                       help=f"series truncation order (default {DEFAULT_ORDER})")

    p = argparse.ArgumentParser(
        prog="eulermgn",
        description="Exact Euler characteristics of moduli spaces of pointed curves.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    chi = sub.add_parser("chi", help="Euler characteristics of M_g,n and Mbar_g,n")
    chi_sub = chi.add_subparsers(dest="space", required=True)
    op = chi_sub.add_parser("open", parents=[fmt], help="chi(M_g,n)")
    op.add_argument("--genus", type=int, choices=(0, 1, 2), required=True)
    op.add_argument("--n", type=_nonneg, required=True)
    op.add_argument("--method", choices=("closed", "strata", "recursive"), default="closed")
    op.set_defaults(handler=_cmd_chi_open)
    cp = chi_sub.add_parser("compact", parents=[fmt, order], help="chi(Mbar_g,n) table")
    cp.add_argument("--genus", type=int, choices=(1, 2), required=True)
    cp.add_argument("--max-n", type=_nonneg, required=True)
    cp.set_defaults(handler=_cmd_chi_compact)

    q = sub.add_parser("quotient", parents=[fmt], help="tabulated quotient Euler characteristic")
    q.add_argument("kind", help=", ".join(k.value for k in QuotientKind))
    q.add_argument("sizes", type=int, nargs="+")
    q.add_argument("--j", type=int, help="number of permuted markings (M0ModSj)")
    q.set_defaults(handler=_cmd_quotient)

    s = sub.add_parser("series", parents=[order], help="coefficients of a generating function")
    s.add_argument("--name", choices=SERIES_NAMES, required=True)
    s.add_argument("--format", choices=FORMATS + ("coeffs", "egf"), default="table",
                   help="coeffs and egf are shorthands for table output of that kind")
    s.add_argument("--values", choices=("coeffs", "egf"), default=None,
                   help="plain coefficients or n! times them (default coeffs)")
    s.set_defaults(handler=_cmd_series)

    o = sub.add_parser("oracle", help="brute-force oracles")
    o_sub = o.add_subparsers(dest="oracle", required=True)
    oq = o_sub.add_parser("quotient", parents=[fmt], help="twisted Burnside count for M_0,n / G")
    oq.add_argument("--n", type=_nonneg, required=True)
    oq.add_argument("--group", required=True,
                    help='klein, d4, sj:<j>, or custom:"(1 2)(3 4);(5 6)" (generators split by ;)')
    oq.set_defaults(handler=_cmd_oracle_quotient)
    ot = o_sub.add_parser("trees", parents=[fmt], help="weighted count of stable rooted trees")
    ot.add_argument("--n", type=_nonneg, required=True)
    ot.set_defaults(handler=_cmd_oracle_trees)

    v = sub.add_parser("verify", help="run self-check suites")
    v.add_argument("--suite", nargs="+", choices=list(SUITES) + ["all"], default=["all"])
    v.set_defaults(handler=None)
    return p


def _normalize_series_format(args) -> None:
    if args.format in ("coeffs", "egf"):
        if args.values not in (None, args.format):
            raise DomainError(f"--format {args.format} conflicts with --values {args.values}")
        args.values, args.format = args.format, "table"
    elif args.values is None:
        args.values = "coeffs"


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "series":
            _normalize_series_format(args)
        record, layout = args.handler(args)
    except (DomainError, ValueError) as exc:
        print(f"eulermgn: error: {exc}", file=err)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"eulermgn: verification failed: {exc}", file=err)
        return EXIT_FAILED
    print(_render(record, args.format, **layout), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
