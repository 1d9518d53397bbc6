"""
Command-line interface.

Usage:
    python -m src.cli construct --family "CGD(p^4)" --p 2 --out cgd16.txt
    python -m src.cli analyze --in cgd16.txt
    python -m src.cli classify-covers --p 11 --n 2 --strategy both
    python -m src.cli quotient --family "CGD1(p^2)" --p 5
    python -m src.cli census --p 11
    python -m src.cli verify --suite acceptance [--deep]

Exit codes: 0 success, 1 failed check, 2 usage or domain error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv
from pydantic import BaseModel

from .exceptions import ToolkitError
from .graphs import parse_edge_list
from .log import get_logger
from .reports import render_pretty, schema_documents, to_json
from .services import AnalysisService, VerificationService

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors are JSON documents on stderr."""

    def error(self, message: str):
        sys.stderr.write(json.dumps({"error": "UsageError", "detail": message}, sort_keys=True) + "\n")
        raise SystemExit(EXIT_USAGE)


def _add_family_args(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument('--family', required=required,
                        help='Family id, e.g. "CGD(p^4)" or an instance such as "CD(11)"')
    parser.add_argument('--p', type=int, help='Prime (or n for the cube families)')
    parser.add_argument('--ell', type=int, help='Order-5 unit override')
    parser.add_argument('--lambda', dest='lam', type=int, help='Square root of 5 override')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='pentagraph', description='Pentavalent symmetric graphs of order 2p^n')
    parser.add_argument('--pretty', action='store_true', help='Aligned text instead of JSON')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    construct = commands.add_parser('construct', help='Emit the edge list of a family member')
    _add_family_args(construct, required=True)
    construct.add_argument('--out', help='Write to FILE instead of stdout')

    analyze = commands.add_parser('analyze', help='Symmetry report of a graph')
    analyze.add_argument('--in', dest='infile', help='Edge-list FILE')
    _add_family_args(analyze, required=False)

    covers = commands.add_parser('classify-covers', help='Arc-transitive Z_p^n-covers of Dip_5')
    covers.add_argument('--p', type=int, required=True)
    covers.add_argument('--n', type=int, required=True)
    covers.add_argument('--strategy', choices=['brute', 'analytic', 'both'], default='brute')

    quotient = commands.add_parser('quotient', help='Normal quotients down to a basic graph')
    quotient.add_argument('--in', dest='infile', help='Edge-list FILE')
    _add_family_args(quotient, required=False)

    census = commands.add_parser('census', help='Pentavalent symmetric graphs of order 2p^2')
    census.add_argument('--p', type=int, required=True)

    verify = commands.add_parser('verify', help='Run the acceptance checks')
    verify.add_argument('--suite', choices=['acceptance'], default='acceptance')
    verify.add_argument('--deep', action='store_true', help='Include the large instances')

    schemas = commands.add_parser('schemas', help='Write the JSON Schemas of every report')
    schemas.add_argument('--out-dir', default='schemas')
    return parser


def _emit(report: BaseModel, pretty: bool) -> None:
    print(render_pretty(report) if pretty else to_json(report))


def _graph_source(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if bool(args.infile) == bool(args.family):
        parser.error('exactly one of --in and --family is required')


def _run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    analysis = AnalysisService()

    if args.command == 'construct':
        ng = analysis.named(args.family, args.p, ell=args.ell, lam=args.lam)
        text = ng.graph.to_edge_list_text()
        if args.out:
            Path(args.out).write_text(text, encoding='utf-8')
            logger.info(f"[+] Wrote {ng.name} to {args.out}")
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if args.command == 'analyze':
        _graph_source(parser, args)
        if args.infile:
            graph = parse_edge_list(Path(args.infile).read_text(encoding='utf-8'))
            report = analysis.analyze_graph(graph)
        else:
            report = analysis.analyze(args.family, args.p, ell=args.ell, lam=args.lam)
        _emit(report, args.pretty)
        return EXIT_OK

    if args.command == 'classify-covers':
        result = analysis.classify(args.p, args.n, args.strategy)
        _emit(result, args.pretty)
        return EXIT_CHECK_FAILED if result.strategies_agree is False else EXIT_OK

    if args.command == 'quotient':
        _graph_source(parser, args)
        if args.infile:
            chain = analysis.quotient_graph(parse_edge_list(Path(args.infile).read_text(encoding='utf-8')))
        else:
            chain = analysis.quotient(args.family, args.p, ell=args.ell, lam=args.lam)
        _emit(chain, args.pretty)
        return EXIT_OK

    if args.command == 'census':
        report = analysis.census(args.p)
        _emit(report, args.pretty)
        return EXIT_OK if report.pairwise_non_isomorphic else EXIT_CHECK_FAILED

    if args.command == 'verify':
        suite = VerificationService(analysis).run_suite(deep=args.deep)
        if args.pretty:
            for item in suite.items:
                status = "PASS" if item.passed else "FAIL"
                print(f"{status}  {item.item}  {item.name}")
                if not item.passed:
                    print(f"      expected {item.expected}")
                    print(f"      observed {item.observed}")
        else:
            print(to_json(suite))
        return EXIT_OK if suite.passed else EXIT_CHECK_FAILED

    if args.command == 'schemas':
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, schema in schema_documents().items():
            (out_dir / f"{name}.json").write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n",
                                                   encoding='utf-8')
        logger.info(f"[+] Wrote {len(schema_documents())} schemas to {out_dir}")
        return EXIT_OK

    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args, parser)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    except ToolkitError as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__, "detail": str(e)}, sort_keys=True) + "\n")
        logger.error(f"[-] {type(e).__name__}: {e}")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__, "detail": str(e)}, sort_keys=True) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
