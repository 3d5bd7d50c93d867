"""Command-line front end.

Usage::

    mckayquiver analyze FILE [--json]
    mckayquiver auslander FILE
    mckayquiver invariants FILE [--max-degree L] [--relation-bound B]
    mckayquiver quiver FILE --format dot|grid|json [--closed] [--labels MAPFILE]
    mckayquiver series FILE --max-degree L
    mckayquiver survey LISTFILE [--jobs N]

Exit codes: 0 success, 1 validation error, 2 parse error, 3 resource limit.
Every error line starts with ``error:``.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import errors
from .coaction import CoactionPair, validate_pair
from .dimensions import auslander_check, graded_dimension, lambda_mod_e1
from .group import DEFAULT_MAX_COSETS, enumerate_group
from .invariants import compress_monomial, hilbert_series, invariant_report, smallest_invariant_u_power
from .lattice import build_mckay_quiver, export_quiver, toroidal_grid
from .presentation import parse_presentation, parse_word

EXIT_OK, EXIT_VALIDATION, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3

CSV_COLUMNS = ["presentation", "order", "m", "auslander_iso", "invariant_regular", "basis_degrees"]


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, errors.PresentationSyntaxError):
        return EXIT_PARSE
    if isinstance(exc, errors.CosetLimitExceeded):
        return EXIT_LIMIT
    return EXIT_VALIDATION


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_pair(text: str, max_cosets: int) -> CoactionPair:
    pres = parse_presentation(text)
    return validate_pair(enumerate_group(pres, max_cosets))


def read_labels(path: str, pair: CoactionPair) -> dict[int, str]:
    """``WORD NAME`` per line; WORD uses the presentation word syntax."""
    names = {}
    for lineno, line in enumerate(_read(path).splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            word, name = line.rsplit(None, 1)
        except ValueError:
            raise errors.PresentationSyntaxError(f"labels line {lineno}: expected 'WORD NAME'") from None
        names[pair.group.evaluate(parse_word(word))] = name
    return names


def _b(x: bool) -> str:
    return "true" if x else "false"


# -- reports ---------------------------------------------------------------

def analysis_report(pair: CoactionPair, text: str, max_degree: int | None = None,
                    relation_bound: int | None = None) -> dict:
    g = pair.group
    inv = invariant_report(pair, max_degree, relation_bound)
    graded_len = len(inv.series) - 1
    return {
        "presentation": " ".join(line.split("#", 1)[0].strip() for line in text.splitlines()).strip(),
        "order": g.order,
        "m": pair.m,
        "period": pair.period,
        "validation": "ok",
        "auslander": auslander_check(pair).to_dict(),
        "quotient": lambda_mod_e1(pair).to_dict(),
        "graded": {
            "from": g.name(g.identity),
            "max_degree": graded_len,
            "table": {
                g.name(j): [graded_dimension(pair, g.identity, j, l) for l in range(graded_len + 1)]
                for j in range(g.order)
            },
        },
        "invariants": inv.to_dict(),
        "smallest_invariant_u_power": smallest_invariant_u_power(pair),
    }


def format_analysis(rep: dict) -> str:
    inv = rep["invariants"]
    aus = rep["auslander"]
    reg = inv["regularity"]
    q = rep["quotient"]
    lines = [
        f"presentation: {rep['presentation']}",
        f"order: {rep['order']}",
        f"m: {rep['m']}",
        f"validation: {rep['validation']}",
        f"auslander_iso: {_b(aus['iso'])} (order_method={_b(aus['order_method'])}, "
        f"coverage_method={_b(aus['coverage_method'])})",
        "lambda_mod_e1: " + (str(q["value"]) if q["kind"] == "finite"
                             else f"infinite (witness: {q['witness']['line']} 0)"),
        f"invariant_regular: {_b(reg['regular'])} (order_method={_b(reg['order_method'])}, "
        f"basis_method={_b(reg['basis_method'])})",
    ]
    lines += _format_invariants(inv)
    lines.append(f"smallest_invariant_u_power: {rep['smallest_invariant_u_power']}")
    return "\n".join(lines) + "\n"


def _format_invariants(inv: dict) -> list[str]:
    lines = ["basis_degrees: " + " ".join(str(h["degree"]) for h in inv["basis"]), "basis:"]
    for k, h in enumerate(inv["basis"], 1):
        r, c = h["pos"]
        lines.append(f"  h{k} ({r},{c}) degree {h['degree']}: {compress_monomial(h['monomial'])}")
    lines.append(f"relations (bound {inv['relation_bound']}):")
    for rel in inv["relations"]:
        lhs = " + ".join(f"{c}*h{k}" if c > 1 else f"h{k}" for k, c in enumerate(rel["lhs"], 1) if c)
        rhs = " + ".join(f"{c}*h{k}" if c > 1 else f"h{k}" for k, c in enumerate(rel["rhs"], 1) if c)
        lines.append(f"  {lhs} = {rhs}")
    if not inv["relations"]:
        lines.append("  (none)")
    lines.append("series: " + " ".join(str(x) for x in inv["series"]))
    if inv.get("annotation"):
        lines.append(f"annotation: {inv['annotation']}")
    return lines


def survey_row(line: str, max_cosets: int) -> tuple[list[str], str | None, int]:
    """CSV row for one presentation, plus an error message and exit code."""
    row = [line, "", "", "", "", ""]
    try:
        g = enumerate_group(parse_presentation(line), max_cosets)
        row[1] = str(g.order)
        pair = validate_pair(g)
        inv = invariant_report(pair, max_degree=0)
        row[2:] = [str(pair.m), _b(auslander_check(pair).is_isomorphism), _b(inv.is_regular),
                   ";".join(str(d) for d in inv.degrees)]
    except errors.McKayError as exc:
        return row, str(exc), exit_code_for(exc)
    return row, None, EXIT_OK


def _survey_job(args):
    return survey_row(*args)


# -- subcommands -----------------------------------------------------------

def cmd_analyze(args, pair, text, out):
    rep = analysis_report(pair, text, args.max_degree, args.relation_bound)
    if args.json:
        out.write(json.dumps(rep, sort_keys=True) + "\n")
    else:
        out.write(format_analysis(rep))


def cmd_auslander(args, pair, text, out):
    ev = auslander_check(pair)
    q = lambda_mod_e1(pair)
    if args.json:
        out.write(json.dumps({"order": pair.order, "m": pair.m, "auslander": ev.to_dict(),
                              "quotient": q.to_dict()}, sort_keys=True) + "\n")
    else:
        out.write(f"order: {pair.order}\nm: {pair.m}\n"
                  f"auslander_iso: {_b(ev.is_isomorphism)} (order_method={_b(ev.order_method)}, "
                  f"coverage_method={_b(ev.coverage_method)})\n"
                  f"lambda_mod_e1: {q}\n")


def cmd_invariants(args, pair, text, out):
    inv = invariant_report(pair, args.max_degree, args.relation_bound).to_dict()
    if args.json:
        out.write(json.dumps(inv, sort_keys=True) + "\n")
    else:
        out.write("\n".join([f"regular: {_b(inv['regular'])}"] + _format_invariants(inv)) + "\n")


def cmd_quiver(args, pair, text, out):
    names = read_labels(args.labels, pair) if args.labels else None
    obj = build_mckay_quiver(pair) if args.format == "dot" else toroidal_grid(pair)
    out.write(export_quiver(pair, obj, args.format, names=names, closed=args.closed))


def cmd_series(args, pair, text, out):
    series = hilbert_series(pair, args.max_degree)
    if args.json:
        out.write(json.dumps({"series": series}) + "\n")
    else:
        out.write(" ".join(str(x) for x in series) + "\n")


def cmd_survey(args, out, err) -> int:
    lines = []
    for raw in _read(args.listfile).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    jobs = [(line, args.max_cosets) for line in lines]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_survey_job, jobs))
    else:
        results = [_survey_job(j) for j in jobs]

    status = EXIT_OK
    if args.json:
        rows = [dict(zip(CSV_COLUMNS, row), error=msg) for row, msg, _ in results]
        out.write(json.dumps(rows) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row, _, _ in results:
            writer.writerow(row)
        out.write(buf.getvalue())
    for n, (row, msg, code) in enumerate(results, 1):
        if msg:
            err.write(f"error: entry {n} ({row[0]}): {msg}\n")
            status = status or code
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS,
                        help="coset enumeration limit (default: %(default)s)")

    parser = _Parser(
        prog="mckayquiver",
        description="McKay quivers and invariant rings of group gradings on k<u,v>/(u^2-v^2).",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="full report")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--relation-bound", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="append elapsed time (breaks byte-determinism)")

    p = sub.add_parser("auslander", parents=[common], help="Auslander map decision")
    p.add_argument("file")

    p = sub.add_parser("invariants", parents=[common], help="invariant ring generators and relations")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--relation-bound", type=int, default=None)

    p = sub.add_parser("quiver", parents=[common], help="export the McKay quiver")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "grid", "json"], required=True)
    p.add_argument("--closed", action="store_true", help="repeat the first row and column")
    p.add_argument("--labels", metavar="MAPFILE", help="lines of 'WORD NAME' renaming elements")

    p = sub.add_parser("series", parents=[common], help="Hilbert series of the invariant ring")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)

    p = sub.add_parser("survey", parents=[common], help="CSV summary of many presentations")
    p.add_argument("listfile")
    p.add_argument("--jobs", type=int, default=1)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "auslander": cmd_auslander,
    "invariants": cmd_invariants,
    "quiver": cmd_quiver,
    "series": cmd_series,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        if args.command == "survey":
            return cmd_survey(args, out, err)
        text = _read(args.file)
        pair = load_pair(text, args.max_cosets)
        COMMANDS[args.command](args, pair, text, out)
    except errors.McKayError as exc:
        err.write(f"error: {exc}\n")
        return exit_code_for(exc)
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    if getattr(args, "timing", False):
        out.write(f"elapsed_seconds: {time.perf_counter() - start:.3f}\n")
    return EXIT_OK


def main(argv=None) -> int:
    return run(argv)
