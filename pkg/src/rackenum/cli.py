"""Command-line front end.

Subcommands: enumerate, optable, cayley, coset, bench.  Exit codes are 0
for a completed run, 1 for input errors, and 2 when the run limit was
exceeded.  RACKENUM_LIMIT overrides the default run limit of 10000.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from .driver import (
    EnumOptions,
    EnumResult,
    RunStatus,
    SubrackSpec,
    enumerate_cosets,
    enumerate_rack,
    metrics_json,
)
from .presentation import (
    Presentation,
    PresentationError,
    parse_element,
    parse_presentation,
    render_presentation,
    with_flags,
)
from .rackout import cayley_graph, compact, components, operation_table, operation_table_csv, verify_rack_axioms

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_RUN_LIMIT = 2

DEFAULT_RUN_LIMIT = 10000

COSET_NOTE = "note: rack cosets need not partition the rack; counts are reported as-is"


@dataclasses.dataclass
class RunReport:
    """What a command did: result summary, files written, fixture name."""

    result: dict
    artifacts: list[str]
    fixture: str | None = None


def default_run_limit() -> int:
    env = os.environ.get("RACKENUM_LIMIT")
    if env:
        try:
            value = int(env)
            if value >= 1:
                return value
        except ValueError:
            pass
        print(f"ignoring invalid RACKENUM_LIMIT={env!r}", file=sys.stderr)
    return DEFAULT_RUN_LIMIT


def _add_run_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", help="presentation file")
    sub.add_argument("--limit", type=int, default=None,
                     help=f"run limit (default {DEFAULT_RUN_LIMIT}, or RACKENUM_LIMIT)")
    sub.add_argument("--no-ward", action="store_true",
                     help="skip filling undefined row entries before advancing")
    sub.add_argument("--minimal-secondary", action="store_true",
                     help="replace secondary words by minimal cyclic representatives")
    sub.add_argument("--no-trace", action="store_true",
                     help="do not maintain element trace labels")
    sub.add_argument("--quandle", action="store_true",
                     help="add the idempotence relations for every generator")
    sub.add_argument("--nquandle", type=int, default=None, metavar="N",
                     help="add the n-quandle relation schema")
    sub.add_argument("--outdir", default=".", help="directory for emitted files")
    sub.add_argument("--json", action="store_true", help="machine-readable report on stdout")


def _options(args: argparse.Namespace) -> EnumOptions:
    limit = args.limit if args.limit is not None else default_run_limit()
    return EnumOptions(
        run_limit=limit,
        ward=not args.no_ward,
        minimal_secondary=args.minimal_secondary,
        keep_trace=not args.no_trace,
    )


def _load(args: argparse.Namespace) -> Presentation:
    text = Path(args.input).read_text(encoding="utf-8")
    p = parse_presentation(text)
    return with_flags(p, quandle=args.quandle or None, nquandle=args.nquandle)


def _emit(path: Path, text: str, artifacts: list[str]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    artifacts.append(str(path))


def _report(report: RunReport, args: argparse.Namespace, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(dataclasses.asdict(report), indent=2))
    else:
        for line in lines:
            print(line)
        for path in report.artifacts:
            print(f"wrote {path}")


def _run_to_completion(args: argparse.Namespace) -> tuple[Presentation, EnumResult]:
    p = _load(args)
    result = enumerate_rack(p, _options(args))
    return p, result


def _summary_lines(result: EnumResult) -> list[str]:
    m = metrics_json(result)
    if result.completed:
        head = f"completed: order {m['order']}, L {m['L']}, E {m['E']}"
    else:
        head = f"run limit exceeded: L {m['L']}, E {m['E']}"
    return [head,
            f"scans {m['scans']}, deductions {m['deductions']}, coincidences {m['coincidences']},"
            f" wall {m['wall_time_s']:.3f}s"]


def cmd_enumerate(args: argparse.Namespace) -> int:
    p, result = _run_to_completion(args)
    stem = Path(args.input).stem
    outdir = Path(args.outdir)
    artifacts: list[str] = []
    _emit(outdir / f"{stem}.table.txt", result.table.render(), artifacts)
    _emit(outdir / f"{stem}.metrics.json",
          json.dumps(metrics_json(result), indent=2) + "\n", artifacts)
    report = RunReport(result=metrics_json(result), artifacts=artifacts)
    _report(report, args, _summary_lines(result))
    return EXIT_OK if result.completed else EXIT_RUN_LIMIT


def cmd_optable(args: argparse.Namespace) -> int:
    p, result = _run_to_completion(args)
    if not result.completed:
        print("run limit exceeded; no operation table emitted", file=sys.stderr)
        return EXIT_RUN_LIMIT
    rt = operation_table(compact(result.table))
    violations = verify_rack_axioms(rt, quandle=p.quandle or p.nquandle is not None,
                                    n=p.nquandle)
    op_text, inv_text = operation_table_csv(rt)
    stem = Path(args.input).stem
    outdir = Path(args.outdir)
    artifacts: list[str] = []
    _emit(outdir / f"{stem}.op.csv", op_text, artifacts)
    _emit(outdir / f"{stem}.inv_op.csv", inv_text, artifacts)
    lines = _summary_lines(result)
    lines.append(f"axiom checks: {'ok' if not violations else f'{len(violations)} violations'}")
    for v in violations:
        print(v, file=sys.stderr)
    report = RunReport(result={**metrics_json(result), "axiom_violations": len(violations)},
                       artifacts=artifacts)
    _report(report, args, lines)
    return EXIT_OK


def cmd_cayley(args: argparse.Namespace) -> int:
    p, result = _run_to_completion(args)
    if not result.completed:
        print("run limit exceeded; no Cayley graph emitted", file=sys.stderr)
        return EXIT_RUN_LIMIT
    compacted = compact(result.table)
    graph = cayley_graph(compacted)
    parts = components(compacted)
    stem = Path(args.input).stem
    artifacts: list[str] = []
    _emit(Path(args.outdir) / f"{stem}.cayley.dot",
          graph.to_dot(merge_involutive=args.undirected), artifacts)
    lines = _summary_lines(result)
    lines.append(f"components: {parts.sizes}")
    report = RunReport(result={**metrics_json(result), "components": parts.sizes},
                       artifacts=artifacts)
    _report(report, args, lines)
    return EXIT_OK


def cmd_coset(args: argparse.Namespace) -> int:
    p = _load(args)
    if not args.sub.strip():
        raise PresentationError("--sub needs at least one subrack element")
    elements = tuple(parse_element(part.strip(), p)
                     for part in args.sub.split(";") if part.strip())
    if not elements:
        raise PresentationError("--sub needs at least one subrack element")
    sub = SubrackSpec(elements)
    result = enumerate_cosets(p, sub, _options(args))
    stem = Path(args.input).stem
    artifacts: list[str] = []
    _emit(Path(args.outdir) / f"{stem}.cosets.txt", result.table.render(), artifacts)
    _emit(Path(args.outdir) / f"{stem}.coset_metrics.json",
          json.dumps(metrics_json(result), indent=2) + "\n", artifacts)
    lines = _summary_lines(result)
    if result.completed:
        lines.insert(0, f"cosets: {result.table.live_count}")
    lines.append(COSET_NOTE)
    report = RunReport(result={**metrics_json(result),
                               "cosets": result.table.live_count if result.completed else None,
                               "partition_warning": True},
                       artifacts=artifacts)
    _report(report, args, lines)
    return EXIT_OK if result.completed else EXIT_RUN_LIMIT


def cmd_bench(args: argparse.Namespace) -> int:
    manifest = Path(args.manifest)
    try:
        text = manifest.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read manifest: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    entries: list[tuple[Path, int | None]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        expected = None
        if len(parts) > 2:
            print(f"manifest line {line_no}: too many fields", file=sys.stderr)
            continue
        if len(parts) == 2:
            try:
                expected = int(parts[1])
            except ValueError:
                print(f"manifest line {line_no}: bad expected order {parts[1]!r}", file=sys.stderr)
                continue
        entries.append((manifest.parent / parts[0], expected))

    limit = args.limit if args.limit is not None else default_run_limit()
    rows = []
    for path, expected in entries:
        row = {"name": path.stem, "expected": expected}
        try:
            p = parse_presentation(path.read_text(encoding="utf-8"))
            result = enumerate_rack(p, EnumOptions(run_limit=limit))
            row.update(metrics_json(result))
            if expected is not None and result.metrics.order != expected:
                row["mismatch"] = True
        except (OSError, PresentationError) as exc:
            row["error"] = str(exc)
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return EXIT_OK

    headers = ["name", "status", "t", "order", "L", "E", "L/order", "E/order", ""]
    table = [headers]
    for row in rows:
        if "error" in row:
            table.append([row["name"], "error: " + row["error"], "", "", "", "", "", "", ""])
            continue
        flag = ""
        if row.get("mismatch"):
            flag = f"MISMATCH (expected {row['expected']})"
        table.append([
            row["name"],
            row["status"],
            f"{row['wall_time_s']:.2f}",
            str(row["order"]) if row["order"] is not None else "-",
            str(row["L"]),
            str(row["E"]),
            f"{row['L_over_order']:.1f}" if row["L_over_order"] else "-",
            f"{row['E_over_order']:.1f}" if row["E_over_order"] else "-",
            flag,
        ])
    widths = [max(len(r[c]) for r in table) for c in range(len(headers))]
    for r in table:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rackenum",
        description="Enumerate finitely presented racks and quandles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum_p = sub.add_parser("enumerate", help="run the enumeration, emit table and metrics")
    _add_run_flags(enum_p)
    enum_p.set_defaults(func=cmd_enumerate)

    op_p = sub.add_parser("optable", help="emit operation table CSVs for a finite rack")
    _add_run_flags(op_p)
    op_p.set_defaults(func=cmd_optable)

    cay_p = sub.add_parser("cayley", help="emit the Cayley graph as DOT")
    _add_run_flags(cay_p)
    cay_p.add_argument("--undirected", action="store_true",
                       help="draw involutive edge pairs as single undirected edges")
    cay_p.set_defaults(func=cmd_cayley)

    coset_p = sub.add_parser("coset", help="enumerate cosets of a subrack")
    _add_run_flags(coset_p)
    coset_p.add_argument("--sub", required=True,
                         help="semicolon-separated subrack generators, e.g. \"a;a^[b b]\"")
    coset_p.set_defaults(func=cmd_coset)

    bench_p = sub.add_parser("bench", help="run a manifest of presentations, print a report")
    bench_p.add_argument("manifest", help="file listing presentation paths and optional expected orders")
    bench_p.add_argument("--limit", type=int, default=None)
    bench_p.add_argument("--json", action="store_true")
    bench_p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PresentationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
