"""Command-line interface.

Subcommands: gen, verify, bounds, table, solve, figures, export.
Exit codes: 0 success/valid, 1 run completed with violations, 2 usage or
parse error, 3 solver timeout.  Primary output goes to stdout (or
--output); a one-line run manifest goes to stderr, or to a file when
--log is set, so stdout stays byte-identical across identical runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bounds as bounds_mod
from . import render, serialize
from .figures import FIGURE_IDS, figure_labeling
from .graphs import GeneralGraph, StackedBook, path_graph
from .labeling import label_graph
from .solver import STATUS_TIMEOUT, SearchConfig, solve_exact, solve_stacked_book
from .verify import verify

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3


def _write_output(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _labeling_document(labeling, fmt: str) -> str:
    if fmt == "json":
        return serialize.dumps(serialize.labeling_to_json(labeling))
    if fmt == "text":
        return render.render_text(labeling)
    if fmt == "dot":
        return render.render_dot(labeling)
    if fmt == "tikz":
        return render.render_tikz(labeling)
    raise ValueError(f"unknown format {fmt!r}")


def _cmd_gen(args) -> tuple[int, str]:
    book = StackedBook(args.m, args.n)
    labeling = label_graph(book)
    _write_output(_labeling_document(labeling, args.format), args.output)
    return EXIT_OK, f"span={labeling.span}"


def _cmd_figures(args) -> tuple[int, str]:
    if args.which is None:
        if args.format != "json":
            raise ValueError("--format other than json needs --which")
        document = {which: serialize.labeling_to_json(figure_labeling(which))
                    for which in FIGURE_IDS}
        _write_output(serialize.dumps(document), args.output)
        return EXIT_OK, "all figures"
    labeling = figure_labeling(args.which)
    _write_output(_labeling_document(labeling, args.format), args.output)
    return EXIT_OK, f"figure {args.which}"


def _cmd_bounds(args) -> tuple[int, str]:
    report = bounds_mod.bound_report(args.m, args.n)
    if args.format == "json":
        document = {"m": report.m, "n": report.n, "lower": report.lower,
                    "upper": report.upper, "exact": report.exact}
        _write_output(serialize.dumps(document), args.output)
    else:
        exact = str(report.exact) if report.exact is not None else "open"
        rows = [("m", "n", "lower", "upper", "exact"),
                (str(report.m), str(report.n), str(report.lower), str(report.upper), exact)]
        _write_output(_align(rows), args.output)
    return EXIT_OK, f"lower={report.lower} upper={report.upper}"


def _table_rows(m_lo: int, m_hi: int, n_lo: int, n_hi: int) -> list[dict]:
    rows = []
    for m in range(m_lo, m_hi + 1):
        for n in range(n_lo, n_hi + 1):
            if n % 2 != 0:
                continue
            labeling = label_graph(StackedBook(m, n))
            report = verify(labeling.graph, labeling)
            rows.append({
                "m": m,
                "n": n,
                "lower": bounds_mod.lower_bound(m, n),
                "span": labeling.span,
                "exact": bounds_mod.exact_radio_number(m, n) if m >= 4 else None,
                "status": "valid" if report.valid else "invalid",
            })
    return rows


def _align(rows: list[tuple[str, ...]]) -> str:
    if not rows:
        return ""
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    return "\n".join(lines) + "\n"


def _cmd_table(args) -> tuple[int, str]:
    m_lo, m_hi = args.m
    n_lo, n_hi = args.n
    rows = _table_rows(m_lo, m_hi, n_lo, n_hi)
    if args.format == "json":
        _write_output(serialize.dumps(rows), args.output)
    else:
        header = ("m", "n", "lower", "span", "exact", "status")
        cells = [header] + [
            tuple(str(r[k]) if r[k] is not None else "open" for k in header) for r in rows
        ]
        if args.format == "csv":
            text = "\n".join(",".join(row) for row in cells) + "\n"
        else:
            text = _align(cells)
        _write_output(text, args.output)
    return EXIT_OK, f"{len(rows)} rows"


def _cmd_verify(args) -> tuple[int, str]:
    graph = None
    if args.graph is not None:
        graph = serialize.graph_from_json(serialize.loads(_read_input(args.graph)))
    document = serialize.loads(_read_input(args.labeling))
    labeling = serialize.labeling_from_json(document, graph=graph)
    report = verify(labeling.graph, labeling)

    if args.report == "json":
        payload = {
            "valid": report.valid,
            "span": report.span,
            "f_min": report.f_min,
            "f_max": report.f_max,
            "violations": [
                {"u": _vertex_doc(x.u), "v": _vertex_doc(x.v), "distance": x.distance,
                 "required_gap": x.required_gap, "actual_gap": x.actual_gap}
                for x in report.violations
            ],
        }
        _write_output(serialize.dumps(payload), args.output)
    else:
        lines = [f"valid={str(report.valid).lower()} span={report.span} "
                 f"f_min={report.f_min} f_max={report.f_max}"]
        for x in report.violations:
            lines.append(f"violation: {x.u} vs {x.v} distance={x.distance} "
                         f"required={x.required_gap} actual={x.actual_gap}")
        _write_output("\n".join(lines) + "\n", args.output)

    if report.valid:
        return EXIT_OK, f"valid span={report.span}"
    return EXIT_VIOLATIONS, f"{len(report.violations)} violations"


def _vertex_doc(v):
    if hasattr(v, "branch"):
        return {"branch": v.branch, "page": v.page}
    return v


def _cmd_solve(args) -> tuple[int, str]:
    sources = sum(x is not None for x in (args.m, args.path, args.graph))
    if sources != 1:
        raise ValueError("choose exactly one of: positional m n, --path, --graph")
    if args.m is not None and args.n is None:
        raise ValueError("positional m needs n as well")

    seed: int | None
    if args.seed_upper == "auto":
        seed = None
    else:
        try:
            seed = int(args.seed_upper)
        except ValueError:
            raise ValueError(f"--seed-upper must be an integer or 'auto', "
                             f"got {args.seed_upper!r}") from None
    if args.threads != 1:
        print(f"note: parallel search is not implemented; running single-threaded "
              f"(requested --threads {args.threads})", file=sys.stderr)

    config = SearchConfig(upper_bound_seed=seed, time_limit=args.time_limit,
                          symmetry_breaking=not args.no_symmetry)

    if args.m is not None:
        result = solve_stacked_book(StackedBook(args.m, args.n), config)
    elif args.path is not None:
        result = solve_exact(path_graph(args.path), config)
    else:
        graph = serialize.graph_from_json(serialize.loads(_read_input(args.graph)))
        if isinstance(graph, StackedBook):
            result = solve_stacked_book(graph, config)
        else:
            result = solve_exact(graph, config)

    payload = {
        "status": result.status,
        "radio_number": result.radio_number,
        "nodes_explored": result.nodes_explored,
        "witness": serialize.labeling_to_json(result.witness),
    }
    _write_output(serialize.dumps(payload), args.output)
    if result.status == STATUS_TIMEOUT:
        return EXIT_TIMEOUT, f"timeout incumbent={result.radio_number}"
    return EXIT_OK, f"{result.status} radio_number={result.radio_number}"


def _cmd_export(args) -> tuple[int, str]:
    if (args.m is None) == (args.which is None):
        raise ValueError("choose exactly one source: positional m n, or --which")
    if args.m is not None:
        if args.n is None:
            raise ValueError("positional m needs n as well")
        book = StackedBook(args.m, args.n)
        labeling = label_graph(book)
        stem = f"g{book.m}x{book.n}"
    else:
        labeling = figure_labeling(args.which)
        book = labeling.graph
        stem = f"figure_{args.which.replace('-', '_')}"

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    labels_path = outdir / f"{stem}_labels.csv"
    labels_path.write_text(render.render_csv(labeling, args.delimiter))

    report = verify(book, labeling)
    bound = bounds_mod.bound_report(book.m, book.n)
    summary_path = outdir / f"{stem}_summary.csv"
    header = ("m", "n", "lower", "upper", "exact", "span", "valid")
    values = (book.m, book.n, bound.lower, bound.upper,
              bound.exact if bound.exact is not None else "open",
              report.span, str(report.valid).lower())
    summary_path.write_text(
        args.delimiter.join(header) + "\n"
        + args.delimiter.join(str(v) for v in values) + "\n")

    plot_path = render.save_plot(labeling, outdir / f"{stem}.{args.figure_format}")

    written = [str(labels_path), str(summary_path), str(plot_path)]
    sys.stdout.write("\n".join(written) + "\n")
    return EXIT_OK, f"wrote {len(written)} files to {outdir}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stackedbook",
        description="Radio labelings, bounds, verification and exact search "
                    "for stacked-book graphs S_m x P_n.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log", default=None, metavar="PATH",
                        help="append the run manifest line to this file instead of stderr")
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--output", default="-", metavar="PATH",
                     help="write primary output here ('-' for stdout)")

    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", parents=[common, out],
                       help="construct a radio labeling of G_{m,n}")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "text", "dot", "tikz"), default="json")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", parents=[common, out],
                       help="check a labeling against the radio condition")
    p.add_argument("--labeling", default="-", metavar="PATH",
                   help="labeling JSON ('-' for stdin)")
    p.add_argument("--graph", default=None, metavar="PATH",
                   help="graph JSON (needed for general-graph labelings)")
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", parents=[common, out],
                       help="closed-form bounds for G_{m,n}")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table", parents=[common, out],
                       help="bound/span sweep over parameter ranges")
    p.add_argument("--m", type=int, nargs=2, required=True, metavar=("MIN", "MAX"))
    p.add_argument("--n", type=int, nargs=2, required=True, metavar=("MIN", "MAX"))
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("solve", parents=[common, out],
                       help="exact radio number by branch and bound")
    p.add_argument("m", type=int, nargs="?", default=None)
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("--path", type=int, default=None, metavar="N",
                   help="solve the path P_N instead of a stacked book")
    p.add_argument("--graph", default=None, metavar="PATH",
                   help="solve a graph loaded from JSON")
    p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    p.add_argument("--seed-upper", default="auto", metavar="INT|auto",
                   help="upper-bound seed; 'auto' derives it from the constructed labeling")
    p.add_argument("--no-symmetry", action="store_true",
                   help="disable symmetry breaking (value unchanged, more nodes)")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("figures", parents=[common, out],
                       help="emit the bundled reference labelings")
    p.add_argument("--which", choices=FIGURE_IDS, default=None,
                   help="one figure (default: all, as a JSON object)")
    p.add_argument("--format", choices=("json", "text", "dot", "tikz"), default="json")
    p.set_defaults(func=_cmd_figures)

    p = sub.add_parser("export", parents=[common],
                       help="write delimited label data plus a rendered figure to files")
    p.add_argument("m", type=int, nargs="?", default=None)
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("--which", choices=FIGURE_IDS, default=None,
                   help="export a bundled figure instead of a generated labeling")
    p.add_argument("--outdir", required=True, metavar="DIR")
    p.add_argument("--figure-format", choices=("png", "svg", "pdf"), default="png")
    p.add_argument("--delimiter", default=",")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code, outcome = args.func(args)
    except (ValueError, serialize.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code, outcome = EXIT_USAGE, f"error: {exc}"
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code, outcome = EXIT_USAGE, f"error: {exc}"
    _emit_manifest(args, outcome, time.perf_counter() - start)
    return code


def _emit_manifest(args, outcome: str, wall_time: float) -> None:
    parameters = {k: v for k, v in vars(args).items()
                  if k not in ("func", "log") and v is not None}
    manifest = {
        "subcommand": args.subcommand,
        "parameters": parameters,
        "wall_time_s": round(wall_time, 4),
        "outcome": outcome,
    }
    line = json.dumps(manifest)
    if args.log:
        with open(args.log, "a") as handle:
            handle.write(line + "\n")
    else:
        print(line, file=sys.stderr)


def run() -> None:
    sys.exit(main())
