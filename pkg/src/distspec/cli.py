"""Command-line front end.

Exit codes: 0 when everything checked passes, 1 on any disagreement, table
failure or per-item error, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import census
from .families import (
    DescriptorError,
    FamilyDescriptor,
    build,
    classify_eigencount,
    descriptors_of_order,
    p4_form,
    recognize_all,
    thm31_admissible,
)
from .graph import GraphError, NotConnectedError, is_connected
from .graph6 import Graph6Error, parse_graph6, read_graph6_stream, write_graph6
from .spectral import second_least_ge_minus2, spectrum, third_largest_le_minus1

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text_lines: Iterable[str], out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _read_graphs(args) -> list:
    graphs = [parse_graph6(s) for s in args.graphs]
    if args.input:
        if args.input == "-":
            graphs.extend(read_graph6_stream(sys.stdin))
        else:
            try:
                with open(args.input) as fh:
                    graphs.extend(read_graph6_stream(fh))
            except OSError as exc:
                raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    if not graphs:
        raise UsageError("no input graphs: pass graph6 strings or --input")
    return graphs


# -- subcommands ------------------------------------------------------------------

def cmd_spectrum(args, out) -> int:
    results, lines, status = [], [], EXIT_OK
    for g in _read_graphs(args):
        g6 = write_graph6(g)
        try:
            spec = spectrum(g)
        except NotConnectedError as exc:
            results.append({"graph6": g6, "error": str(exc)})
            lines.append(f"{g6}\terror: {exc}")
            status = EXIT_FAIL
            continue
        results.append({"graph6": g6, "spectrum": spec.to_json()})
        parts = [f"{e.approx:.4f}" + (f"^{e.mult}" if e.mult > 1 else "") for e in spec.entries]
        lines.append(f"{g6}\t" + " ".join(parts))
    _emit(results, args.format, lines, out)
    return status


def _classify_one(g) -> dict:
    g6 = write_graph6(g)
    if not is_connected(g):
        return {"graph6": g6, "error": "graph is not connected"}
    fds = recognize_all(g)
    return {
        "graph6": g6,
        "n": g.n,
        "third_largest_le_minus1": third_largest_le_minus1(g) if g.n >= 3 else None,
        "second_least_ge_minus2": second_least_ge_minus2(g) if g.n >= 2 else None,
        "bucket": classify_eigencount(g),
        "descriptor": str(fds[0]) if fds else None,
        "thm31_admissible": any(thm31_admissible(f) for f in fds),
        "matches": [str(f) for f in fds],
        "p4_form": p4_form(g),
    }


def cmd_classify(args, out) -> int:
    rows = [_classify_one(g) for g in _read_graphs(args)]
    status = EXIT_FAIL if any("error" in r for r in rows) else EXIT_OK
    lines = []
    for r in rows:
        if "error" in r:
            lines.append(f"{r['graph6']}\terror: {r['error']}")
        else:
            lines.append(
                f"{r['graph6']}\td3<=-1:{r['third_largest_le_minus1']}\t"
                f"d(n-1)>=-2:{r['second_least_ge_minus2']}\t{r['bucket']}\t{r['descriptor'] or '-'}"
            )
    _emit(rows, args.format, lines, out)
    return status


def cmd_build(args, out) -> int:
    rows = []
    for text in args.descriptors:
        fd = FamilyDescriptor.parse(text)
        rows.append({"descriptor": str(fd), "graph6": write_graph6(build(fd))})
    _emit(rows, args.format, [r["graph6"] for r in rows], out)
    return EXIT_OK


def _census_graphs(args):
    if args.input or args.graphs:
        graphs = _read_graphs(args)
        return graphs, {"source": args.input or "argv", "orders": sorted({g.n for g in graphs})}
    orders = args.order or [4, 5, 6]
    for n in orders:
        if not 1 <= n <= 6:
            raise UsageError(f"--order must be between 1 and 6 (got {n}); use --input for larger orders")
    return census.builtin_graphs(orders), {"source": "builtin", "orders": orders}


def cmd_census(args, out) -> int:
    graphs, scope = _census_graphs(args)
    scope["graphs"] = len(graphs)
    report = census.run_census(graphs, scope, jobs=args.jobs, timing=args.timing)
    ok = census.census_passed(report, corrected=args.corrected)
    lines = [f"scope: {scope['source']} orders={scope['orders']} graphs={scope['graphs']}"]
    for key in ("theorem31", "bucket_n_minus_1", "theorem41", "theorem42", "theorem42_corrected"):
        sec = report[key]
        lines.append(
            f"{key}: checked={sec['checked']} agreements={sec['agreements']} "
            f"disagreements={len(sec['disagreements'])} errors={len(sec['errors'])}"
        )
        for d in sec["disagreements"]:
            lines.append(f"  {d['graph6']} spectral={d['spectral']} structural={d['structural']} "
                         f"bucket={d['bucket']} {','.join(d['descriptors'])}")
    lines.append("PASS" if ok else "FAIL")
    _emit(report, args.format, lines, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_tables(args, out) -> int:
    if args.max_param < 2:
        raise UsageError("--max-param must be at least 2")
    report = census.run_tables(args.max_param, timing=args.timing)
    ok = census.tables_passed(report)
    t = report["tables"]
    lines = []
    for part in ("table1", "table2"):
        bad = [r for r in t[part] if not r["pass"]]
        lines.append(f"{part}: {len(t[part]) - len(bad)}/{len(t[part])} rows pass")
        for r in bad:
            lines.append(f"  {r['label']}: expected {r['expected']:.4f} computed {r['computed']:.4f}")
    bad3 = [r for r in t["table3"] if not r["pass"]]
    lines.append(f"table3: {len(t['table3']) - len(bad3)}/{len(t['table3'])} families exact "
                 f"({sum(r['checked'] for r in t['table3'])} instances)")
    for r in bad3:
        lines.append(f"  {r['family']}: {', '.join(r['mismatches'])}")
    lines.append("PASS" if ok else "FAIL")
    _emit(report, args.format, lines, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cospectral(args, out) -> int:
    if args.descriptors:
        fds = [FamilyDescriptor.parse(s) for s in args.descriptors]
    else:
        order = args.order[-1] if args.order else 14
        fds = [fd for fd in descriptors_of_order(order, [args.family]) if thm31_admissible(fd)]
    pairs = census.cospectral_search(fds)
    report = {"searched": len(fds), "cospectral": pairs}
    _emit(report, args.format,
          [f"searched {len(fds)} descriptors"] + [f"{p['order']}\t{p['pair'][0]}\t{p['pair'][1]}" for p in pairs],
          out)
    return EXIT_OK


def cmd_recover_fixtures(args, out) -> int:
    rec = census.recover_forbidden_fixtures()
    members = census.thm31_members_up_to(args.max_param)
    forb = census.verify_forbidden(members, census.unique_fixtures(rec))
    ok = all(r["status"] == "unique" for r in rec) and forb["pass"]
    report = {"fixtures": rec, "forbidden": forb}
    lines = [f"{r['label']} n={r['order']} {r['stat']}={r['expected']:.4f} {r['status']} "
             f"{' '.join(r['candidates'])}" for r in rec]
    lines.append(f"forbidden check: {forb['checked']} members, {len(forb['violations'])} violations")
    lines.append("PASS" if ok else "FAIL")
    _emit(report, args.format, lines, out)
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in reports")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graphs", nargs="*", metavar="GRAPH6", help="inline graph6 strings")
    graph_in.add_argument("--input", metavar="PATH", help="graph6 file, one graph per line ('-' for stdin)")

    p = argparse.ArgumentParser(prog="distspec", description="Exact distance spectra and census checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", parents=[common, graph_in], help="exact distance spectrum of each graph")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("classify", parents=[common, graph_in],
                       help="threshold predicates, multiplicity bucket and family of each graph")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("build", parents=[common], help="graph6 of family descriptors such as I5[2,3]")
    s.add_argument("descriptors", nargs="+", metavar="DESCRIPTOR")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("census", parents=[common, graph_in],
                       help="check the characterization theorems on a graph census")
    s.add_argument("--order", type=int, action="append", help="built-in enumeration order (n <= 6); repeatable")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    s.add_argument("--corrected", action="store_true",
                   help="judge the n-3 theorem by its corrected statement (K_{1,1,c} excluded)")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify-tables", parents=[common], help="reproduce the numeric and polynomial tables")
    s.add_argument("--max-param", type=int, default=3,
                   help="J-family parameter bound; I-families go one further (default 3)")
    s.set_defaults(func=cmd_verify_tables)

    s = sub.add_parser("cospectral", parents=[common], help="non-isomorphic cospectral pairs among descriptors")
    s.add_argument("descriptors", nargs="*", metavar="DESCRIPTOR")
    s.add_argument("--family", default="J7", help="family to scan when no descriptors are given")
    s.add_argument("--order", type=int, action="append", help="order to scan (default 14)")
    s.set_defaults(func=cmd_cospectral)

    s = sub.add_parser("recover-fixtures", parents=[common],
                       help="recover the forbidden subgraphs from their printed statistics")
    s.add_argument("--max-param", type=int, default=3, help="parameter bound for the forbidden check")
    s.set_defaults(func=cmd_recover_fixtures)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args, out)
    except Graph6Error as exc:
        print(f"distspec: graph6 parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DescriptorError, UsageError) as exc:
        print(f"distspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"distspec: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
