"""
Command-line entry point: python -m src.cli <command> ...
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from src.blowup import blow_up
from src.chromatic import chromatic_polynomial
from src.errors import (
    BudgetExceededError,
    ChromaticError,
    ConfigError,
    GraphError,
    GraphParseError,
    InvariantViolation,
    UsageError,
)
from src.fractional import b_fold_chromatic_number, fractional_count, fractional_polynomial, frt_report
from src.generators import GraphKind, generate
from src.graph import Graph
from src.graph_io import GraphFormat, read_graph, serialize_graph
from src.oracle import enumerate_count
from src.selfcheck import SelfCheck

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4


class _Parser(argparse.ArgumentParser):
    """argparse reports usage problems by raising instead of exiting with 2"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _pair(text: str) -> List[int]:
    try:
        u, v = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected U,V, got {text!r}") from None
    return [u, v]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromatic", description="Exact ordinary and b-fold chromatic polynomials")
    parser.add_argument("--verbose", action="store_true", help="log progress at INFO level")

    graph_input = _Parser(add_help=False)
    graph_input.add_argument("file", help="graph file, '-' for stdin")
    graph_input.add_argument("--input-format", choices=["auto"] + [f.value for f in GraphFormat], default="auto")

    fold = _Parser(add_help=False)
    fold.add_argument("--b", type=_positive_int, default=1, help="fold (colours per vertex)")

    palette = _Parser(add_help=False)
    palette.add_argument("--lambda", dest="palette", type=_nonnegative_int, required=True, help="palette size")

    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    poly = commands.add_parser("poly", parents=[graph_input], help="chromatic polynomial")
    poly.add_argument("--format", choices=["json", "pretty"], default="json")

    frac = commands.add_parser("fracpoly", parents=[graph_input, fold], help="b-fold numerator and denominator")
    frac.add_argument("--format", choices=["json", "pretty"], default="json")

    commands.add_parser("count", parents=[graph_input, palette, fold], help="number of b-fold λ-colourings")

    oracle = commands.add_parser("oracle", parents=[graph_input, palette, fold], help="brute-force count")
    oracle.add_argument("--budget", type=_positive_int, default=None)

    blow = commands.add_parser("blowup", parents=[graph_input, fold], help="emit G^b")
    blow.add_argument("--format", choices=[f.value for f in GraphFormat], default=GraphFormat.EDGELIST.value)

    commands.add_parser("chromatic-number", parents=[graph_input, fold], help="b-fold chromatic number")

    demo = commands.add_parser("frt-demo", parents=[graph_input, palette, fold],
                               help="naive vs blown-up reduction recurrence on one pair")
    demo.add_argument("--edge", type=_pair, required=True, help="vertex pair U,V")
    demo.add_argument("--format", choices=["json", "pretty"], default="pretty")

    check = commands.add_parser("selfcheck", help="differential suite: formulas vs pipeline vs oracle")
    check.add_argument("--max-n", type=_positive_int, default=4)
    check.add_argument("--max-b", type=_positive_int, default=3)
    check.add_argument("--max-lambda", type=_nonnegative_int, default=8)
    check.add_argument("--budget", type=_positive_int, default=None)

    gen = commands.add_parser("generate", help="emit a generated graph")
    gen.add_argument("kind", choices=[k.value for k in GraphKind])
    gen.add_argument("args", nargs="+", help="N, or N P for random-graph, or part sizes for forest")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", choices=[f.value for f in GraphFormat], default=GraphFormat.EDGELIST.value)
    return parser


def _load(args) -> Graph:
    fmt = None if args.input_format == "auto" else GraphFormat(args.input_format)
    return read_graph(args.file, fmt)


def _cmd_poly(args) -> int:
    p = chromatic_polynomial(_load(args))
    print(json.dumps(p.to_json()) if args.format == "json" else p.pretty())
    return EXIT_OK


def _cmd_fracpoly(args) -> int:
    frac = fractional_polynomial(_load(args), args.b)
    if args.format == "json":
        print(json.dumps(frac.to_json()))
    else:
        print(f"({frac.numerator.pretty()}) / {frac.denominator}")
    return EXIT_OK


def _cmd_count(args) -> int:
    print(fractional_count(_load(args), args.palette, args.b))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    print(enumerate_count(_load(args), args.palette, args.b, args.budget))
    return EXIT_OK


def _cmd_blowup(args) -> int:
    sys.stdout.write(serialize_graph(blow_up(_load(args), args.b), GraphFormat(args.format)))
    return EXIT_OK


def _cmd_chromatic_number(args) -> int:
    print(b_fold_chromatic_number(_load(args), args.b))
    return EXIT_OK


def _cmd_frt_demo(args) -> int:
    report = frt_report(_load(args), tuple(args.edge), args.palette, args.b)
    if args.format == "json":
        print(json.dumps(report.to_json()))
        return EXIT_OK
    u, v = report.edge
    x, y = report.blowup_edge
    sign = "-" if report.mode.value == "deletion" else "+"
    surgery = "G-uv" if sign == "-" else "G+uv"
    print(f"mode: {report.mode.value} on pair ({u},{v}), blown pair ({x},{y}), λ={args.palette}, b={args.b}")
    print(f"  lhs             P(G)                = {report.lhs}")
    print(f"  naive rhs       P({surgery}) {sign} P(G/uv)  = {report.naive_rhs}")
    print(f"  generalized rhs on G^{args.b}, over (b!)^|V| = {report.generalized_rhs}")
    print(f"naive verdict: {'OK' if report.naive_holds else 'FAIL'}")
    print(f"generalized verdict: {'OK' if report.generalized_holds else 'FAIL'}")
    return EXIT_OK


def _cmd_selfcheck(args) -> int:
    suite = SelfCheck(max_n=args.max_n, max_b=args.max_b, max_lambda=args.max_lambda, budget=args.budget)
    suite.run()
    print(suite.report().to_string(index=False))
    if suite.all_passed:
        print("✅ All checks passed")
        return EXIT_OK
    failed = sum(r.failed for r in suite.results)
    print(f"❌ {failed} instance(s) failed")
    return EXIT_INVARIANT


def _cmd_generate(args) -> int:
    kind = GraphKind(args.kind)
    p = None
    try:
        if kind is GraphKind.RANDOM_GRAPH:
            if len(args.args) != 2:
                raise UsageError("random-graph takes N P")
            sizes = [int(args.args[0])]
            p = float(args.args[1])
        else:
            sizes = [int(a) for a in args.args]
    except ValueError:
        raise UsageError(f"bad generator arguments {args.args}") from None
    graph = generate(kind, sizes, p=p, seed=args.seed)
    sys.stdout.write(serialize_graph(graph, GraphFormat(args.format)))
    return EXIT_OK


_COMMANDS = {
    "poly": _cmd_poly,
    "fracpoly": _cmd_fracpoly,
    "count": _cmd_count,
    "oracle": _cmd_oracle,
    "blowup": _cmd_blowup,
    "chromatic-number": _cmd_chromatic_number,
    "frt-demo": _cmd_frt_demo,
    "selfcheck": _cmd_selfcheck,
    "generate": _cmd_generate,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one command and return its exit code"""
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return _COMMANDS[args.command](args)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except UsageError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphParseError, GraphError, ConfigError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as e:
        print(f"❌ internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except ChromaticError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
