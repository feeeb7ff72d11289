"""
Command-line entry point.

Exit codes: 0 when a run is clean, 1 when violations or per-graph errors were
found, 2 for usage and IO errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from critcolor import TOOL_NAME, __version__
from critcolor.core.budget import Budget
from critcolor.core.config import get_settings
from critcolor.core.errors import ColoringError, CorpusIOError, CritcolorError, HarnessError, Timeout
from critcolor.graph.formats import to_dimacs, to_edge_list, to_graph6
from critcolor.harness.corpus import Corpus, CorpusFormat, load_corpus
from critcolor.harness.enumeration import exhaustive_min_degree_scan
from critcolor.harness.generators import fixture_figure1
from critcolor.harness.report import Report
from critcolor.harness.verification import analyze, lemma1_scan, verify_statement
from critcolor.mozhan.partition import SearchMode
from critcolor.mozhan.walk import mozhan_walk
from critcolor.structure.statements import Statement

logger = logging.getLogger(TOOL_NAME)

EXIT_CLEAN = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

FIXTURES = {"figure1": fixture_figure1}


def _add_campaign_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", type=Path, help="write the JSON report here instead of stdout")
    parser.add_argument("--workers", type=int, help="worker processes (default: CRITCOLOR_WORKERS)")
    parser.add_argument("--budget-ms", type=int, help="per-graph budget in ms, 0 disables (default: CRITCOLOR_BUDGET_MS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL_NAME, description="Critical-graph colouring analysis")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("analyze", help="structure report and statement outcomes per graph")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--format", choices=[f.value for f in CorpusFormat], default=CorpusFormat.GRAPH6.value)
    p.add_argument("--strict", action="store_true", help="fail on the first malformed entry")
    _add_campaign_options(p)

    p = commands.add_parser("verify", help="check one statement over a corpus")
    p.add_argument("--statement", choices=[s.value for s in Statement], required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--corpus", type=Path)
    source.add_argument("--exhaustive-n", type=int)
    source.add_argument("--fixture", choices=sorted(FIXTURES))
    p.add_argument("--min-deg", type=int, help="minimum degree for --exhaustive-n")
    p.add_argument("--format", choices=[f.value for f in CorpusFormat], default=CorpusFormat.GRAPH6.value)
    p.add_argument("--strict", action="store_true", help="fail on the first malformed entry")
    _add_campaign_options(p)

    p = commands.add_parser("walk", help="run the swap walk and write its trace")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--format", choices=[f.value for f in CorpusFormat], default=CorpusFormat.GRAPH6.value)
    p.add_argument("--index", type=int, default=0, help="which corpus graph to walk on")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--max-steps", type=int)
    p.add_argument("--mode", choices=[m.value for m in SearchMode])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--promote-high", action="store_true", help="swap a high start vertex onto a low one first")
    p.add_argument("--trace", type=Path, help="write the trace here instead of stdout")
    p.add_argument("--budget-ms", type=int)

    p = commands.add_parser("lemma1", help="check minimal-colouring component shapes on seeded random instances")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_campaign_options(p)

    p = commands.add_parser("fixture", help="emit a built-in graph")
    p.add_argument("name", choices=sorted(FIXTURES))
    p.add_argument("--emit", choices=["graph6", "edges", "dimacs"], default="graph6")

    return parser


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text + "\n")
        return
    try:
        path.write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        raise CorpusIOError(f"cannot write {path}: {e}") from e
    logger.info(f"wrote {path}")


def _finish(report: Report, path: Optional[Path]) -> int:
    if path is None:
        _emit(report.to_json(), None)
    else:
        report.write(path)
        logger.info(f"wrote {path}")
    if not report.clean:
        logger.warning(
            f"{report.total_violations} violations, {len(report.error_records)} per-graph errors"
        )
        return EXIT_VIOLATIONS
    return EXIT_CLEAN


def _verify_corpus(args: argparse.Namespace) -> Corpus:
    if args.corpus is not None:
        return load_corpus(args.corpus, args.format, args.strict)
    if args.fixture is not None:
        return Corpus.from_graphs(args.fixture, [FIXTURES[args.fixture]()])
    if args.min_deg is None:
        raise argparse.ArgumentTypeError("--exhaustive-n needs --min-deg")
    return exhaustive_min_degree_scan(args.exhaustive_n, args.min_deg)


def run(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        corpus = load_corpus(args.input, args.format, args.strict)
        return _finish(analyze(corpus, args.budget_ms, args.workers), args.json)

    if args.command == "verify":
        corpus = _verify_corpus(args)
        report = verify_statement(corpus, Statement(args.statement), args.budget_ms, args.workers)
        return _finish(report, args.json)

    if args.command == "lemma1":
        report = lemma1_scan(args.samples, args.max_n, args.seed, args.budget_ms, args.workers)
        return _finish(report, args.json)

    if args.command == "walk":
        entries = list(load_corpus(args.input, args.format, strict=True))
        if not 0 <= args.index < len(entries):
            raise CorpusIOError(f"{args.input} has {len(entries)} graphs, no index {args.index}")
        budget_ms = get_settings().budget_ms if args.budget_ms is None else args.budget_ms
        trace = mozhan_walk(
            entries[args.index].graph,
            args.start,
            max_steps=args.max_steps,
            mode=SearchMode(args.mode) if args.mode else None,
            seed=args.seed,
            budget=Budget(budget_ms),
            promote_high=args.promote_high,
        )
        _emit(trace.to_json(), args.trace)
        return EXIT_CLEAN

    G = FIXTURES[args.name]()
    writers = {"graph6": to_graph6, "edges": to_edge_list, "dimacs": to_dimacs}
    _emit(writers[args.emit](G).rstrip("\n"), None)
    return EXIT_CLEAN


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=get_settings().log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return run(args)
    except argparse.ArgumentTypeError as e:
        parser.error(str(e))
    except (HarnessError, ColoringError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except Timeout as e:
        logger.error(f"budget exhausted: {e}")
        return EXIT_USAGE
    except CritcolorError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
