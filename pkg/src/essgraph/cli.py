"""Command-line client for the analysis pipeline.

Every subcommand goes through the same service-layer builders as the HTTP
endpoints, so `--format json` output matches the API responses byte for byte.
`serve` starts the FastAPI application.

Exit status: 0 on success, 1 when a verification sweep finds a disagreement,
2 on domain violations (n prime or below 4).
"""

from __future__ import annotations

import argparse
import sys

from .connectivity import CSV_HEADER, classify, report_csv_row
from .ideals import DomainError, factorize
from .service.schemas import (
    AnalyzeReport,
    SpectrumReport,
    build_analyze_report,
    build_spectrum_report,
    build_verify_summary,
    connectivity_info_from_report,
)

MATRIX_CHOICES = ("adjacency", "laplacian", "signless", "normalized")


def _spectrum_line(entries) -> str:
    return "{" + ", ".join(
        f"{e.value:.6g}" + (f" (x{e.multiplicity})" if e.multiplicity > 1 else "")
        for e in entries
    ) + "}"


def _render_spectrum_text(report: SpectrumReport) -> str:
    lines = [
        f"n = {report.n}  matrix = {report.kind}  scope = {report.scope}",
        f"  spectrum: {_spectrum_line(report.entries)}",
    ]
    if report.fixed_part is not None:
        lines.append(f"  fixed part: {_spectrum_line(report.fixed_part)}")
    if report.quotient_part is not None:
        lines.append(f"  quotient part: {_spectrum_line(report.quotient_part)}")
    dev = "n/a" if report.max_abs_deviation is None else f"{report.max_abs_deviation:.3e}"
    lines.append(f"  agreement: {report.agreement}  max deviation: {dev}")
    return "\n".join(lines)


def _render_analyze_text(report: AnalyzeReport) -> str:
    f = report.factorization
    factors = " * ".join(
        f"{p}^{m}" if m > 1 else str(p) for p, m in zip(f.primes, f.exponents)
    )
    lines = [
        f"n = {report.n} = {factors}",
        f"nonzero proper ideals: {report.total_ideals}   essential clique order: {report.clique_order}",
    ]
    if report.classes:
        lines.append("classes (saturated positions | representative | size | neighbor weight | members):")
        for row in report.classes:
            sat = "{" + ",".join(map(str, row.saturated)) + "}"
            members = ", ".join(f"<{g}>" for g in row.members)
            lines.append(
                f"  {sat:<12} <{row.representative}>  size {row.size}  N {row.neighbor_weight}  [{members}]"
            )
    else:
        lines.append("classes: none (single prime factor; the graph is complete)")
    s = report.structure
    lines.append(
        f"structure: assembled == definitional: {s.equal} "
        f"(edges {s.assembled_edges} vs {s.bruteforce_edges}, host edges {s.host_edges})"
    )
    lines.append("spectra of the nonessential subgraph:")
    for spec in report.spectra:
        dev = "n/a" if spec.max_abs_deviation is None else f"{spec.max_abs_deviation:.3e}"
        lines.append(f"  {spec.kind:<10} {_spectrum_line(spec.entries)}  agree={spec.agreement} dev={dev}")
    c = report.connectivity
    lines.append(
        f"connectivity: b={c.spectral_radius:.6g} (b=T: {c.b_equals_T})  "
        f"a={c.algebraic_connectivity:.6g}  kappa={c.kappa_maxflow} (formula {c.kappa_formula})"
    )
    lines.append(
        f"  case={c.case}  a-vs-kappa={c.a_vs_kappa}  complement connected: {c.complement_connected}"
    )
    li = report.laplacian_integral
    if li.integral:
        lines.append(f"Laplacian integral: yes  class-matrix spectrum {li.integer_spectrum}")
    else:
        lines.append(f"Laplacian integral: no  (eigenvalue {li.offending:.10g} is not an integer)")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    fact = factorize(args.n)
    report = build_analyze_report(fact, args.tolerance)
    if args.format == "json":
        print(report.model_dump_json(indent=2))
    else:
        print(_render_analyze_text(report))
    return 0


def _cmd_spectra(args) -> int:
    fact = factorize(args.n)
    report = build_spectrum_report(fact, args.matrix, args.scope, args.tolerance)
    if args.format == "json":
        print(report.model_dump_json(indent=2))
    else:
        print(_render_spectrum_text(report))
    return 0


def _cmd_verify_range(args) -> int:
    summary = build_verify_summary(args.lo, args.hi, args.tolerance)
    if args.format == "json":
        print(summary.model_dump_json(indent=2))
    else:
        print(
            f"range [{summary.lo}, {summary.hi}]: checked {summary.checked}, "
            f"skipped {summary.skipped}, failures {len(summary.failures)}"
        )
        if summary.failures:
            first = summary.failures[0]
            print(f"first failure: n={first.n} check={first.check}: {first.detail}")
        for failure in summary.failures:
            print(f"  FAIL n={failure.n} {failure.check}: {failure.detail}")
    return 0 if summary.all_passed else 1


def _cmd_export(args) -> int:
    from .service.app import export_text

    fact = factorize(args.n)
    try:
        text = export_text(fact, args.what, args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    with open(args.path, "w") as handle:
        handle.write(text)
    print(f"wrote {args.what} of n={args.n} to {args.path} ({args.format})")
    return 0


def _cmd_report(args) -> int:
    hi = args.hi if args.hi is not None else args.lo
    reports = []
    for n in range(args.lo, hi + 1):
        try:
            fact = factorize(n)
        except DomainError:
            continue
        reports.append(classify(fact, args.tolerance))
    if args.format == "json":
        infos = [connectivity_info_from_report(r) for r in reports]
        print("[" + ",\n".join(i.model_dump_json() for i in infos) + "]")
    else:
        print(CSV_HEADER)
        for r in reports:
            print(report_csv_row(r))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("essgraph.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="essgraph",
        description="Essential ideal graphs of Z_n: structure, spectra, connectivity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tolerance(p):
        p.add_argument("--tolerance", type=float, default=1e-8, help="eigenvalue comparison tolerance")

    p = sub.add_parser("analyze", help="full report for one modulus")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_tolerance(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("spectra", help="one spectrum report (closed form vs brute force)")
    p.add_argument("n", type=int)
    p.add_argument("--matrix", choices=MATRIX_CHOICES, default="laplacian")
    p.add_argument("--scope", choices=("full", "subgraph"), default="subgraph")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_tolerance(p)
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("verify-range", help="cross-validate every composite modulus in a range")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_tolerance(p)
    p.set_defaults(func=_cmd_verify_range)

    p = sub.add_parser("export", help="write a graph to a DOT or edge-list file")
    p.add_argument("n", type=int)
    p.add_argument("what", choices=("graph", "host", "aig"))
    p.add_argument("path")
    p.add_argument("--format", choices=("dot", "edgelist"), default="dot")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("report", help="connectivity reports for a range (CSV or JSON)")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int, nargs="?", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_tolerance(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
