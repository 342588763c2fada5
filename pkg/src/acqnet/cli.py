"""Command-line entry point: ``acqnet <command> ...``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition
violation. Errors go to standard error as ``error: <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report
from .clubs import DEFAULT_NODE_CAP, maximal_two_clubs
from .detectors import structure_witnesses
from .errors import ParseError, PreconditionError
from .experiments import complement_diameter_census, diameter2_fraction, sabidussi_scan, write_csv
from .graph import Graph
from .span import girth, smallest_spanning_tree, span_2club
from .typology import classify, subclass_count

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _read_graph(path: str) -> Graph:
    if path == "-":
        return report.parse_edge_list(sys.stdin.read(), "<stdin>")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read file ({exc.__class__.__name__})", None, path) from exc
    return report.parse_edge_list(text, path)


def _cmd_classify(args, out) -> None:
    out.write(report.emit_report(classify(_read_graph(args.file))))


def _cmd_span(args, out) -> None:
    out.write(report.dumps(report.span_to_dict(span_2club(_read_graph(args.file)))))


def _cmd_girth(args, out) -> None:
    out.write(report.dumps(report.girth_to_dict(girth(_read_graph(args.file)))))


def _cmd_sst(args, out) -> None:
    g = _read_graph(args.file)
    result = smallest_spanning_tree(g, cap=args.cap)
    if args.dot:
        Path(args.dot).write_text(report.emit_dot(g, result.edges), encoding="utf-8")
    out.write(report.dumps(report.span_to_dict(result)))


def _cmd_detect(args, out) -> None:
    out.write(report.dumps(report.witnesses_to_dict(structure_witnesses(_read_graph(args.file)))))


def _cmd_clubs(args, out) -> None:
    g = _read_graph(args.file)
    clubs = maximal_two_clubs(g, min_size=args.min_size, node_cap=args.cap)
    out.write(report.dumps(report.clubs_to_list(clubs)))


def _emit_experiment(result, args, out) -> None:
    if args.csv:
        write_csv([result], out)
    else:
        out.write(report.dumps(result.to_dict()))


def _cmd_random(args, out) -> None:
    _emit_experiment(diameter2_fraction(args.n, args.p, args.trials, args.seed), args, out)


def _cmd_census(args, out) -> None:
    result = complement_diameter_census(
        args.n_max, mode=args.mode, trials=args.trials, seed=args.seed, p=args.p
    )
    _emit_experiment(result, args, out)


def _cmd_sabidussi(args, out) -> None:
    _emit_experiment(sabidussi_scan(args.n, args.trials, args.seed), args, out)


def _cmd_count(args, out) -> None:
    out.write(f"{subclass_count(args.d)}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="acqnet", description="Acquaintance-network typology tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def file_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="edge-list file, or - for standard input")
        p.set_defaults(func=func)
        return p

    file_cmd("classify", _cmd_classify, "full typology report as JSON")
    file_cmd("span", _cmd_span, "span of a diameter-2 graph with its smallest spanning tree")
    file_cmd("girth", _cmd_girth, "girth with a shortest cycle")
    p = file_cmd("sst", _cmd_sst, "smallest spanning tree of any connected graph")
    p.add_argument("--dot", metavar="OUT", help="also write DOT with the tree in bold")
    p.add_argument("--cap", type=int, default=9, help="exhaustive search cap (default 9)")
    file_cmd("detect", _cmd_detect, "structural witnesses as JSON")
    p = file_cmd("clubs", _cmd_clubs, "maximal 2-clubs")
    p.add_argument("--min-size", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP)

    p = sub.add_parser("random", help="share of random graphs with diameter <= 2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("census", help="diameter bands of graphs and complements")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("sabidussi", help="minimum-degree condition versus diameter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_sabidussi)

    p = sub.add_parser("count-subclasses", help="number of span-girth subclasses for a diameter")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_count)
    return parser


def run_cli(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"error: parse: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        err.write(f"error: precondition: {exc}\n")
        return EXIT_PRECONDITION
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
