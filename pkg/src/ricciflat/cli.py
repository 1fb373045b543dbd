"""Command-line entry point: ``ricciflat {curvature,generate,classify,named}``.

Exit codes: 0 on success, 2 for usage and parse errors, 3 for domain errors
(disconnected input, curvature requested on an irregular graph, ...).
Diagnostics go to stderr; stdout only carries data.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from typing import Iterator, Sequence

from .classification import classify, search_two_pentagon_completions
from .curvature import curvature_report, idleness_report
from .exceptions import DomainError, RicciFlatError
from .generation import GenerationConfig, IngestStats, generate, generate_classes, ingest_graph6
from .graph import Graph
from .graph6 import emit_graph6, parse_graph6
from .named import named_graph

log = logging.getLogger("ricciflat")

EXIT_USAGE = 2
EXIT_DOMAIN = 3


class UsageError(RicciFlatError):
    pass


def _default_jobs() -> int:
    raw = os.environ.get("RICCI_SEED_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"RICCI_SEED_JOBS must be an integer, got {raw!r}") from None


def _rational(text: str) -> Fraction:
    try:
        if "." in text or "e" in text.lower():
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational 'a/b', got {text!r}") from None


def _size_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return [n for n in range(lo, hi + 1) if n % 2 == 0]


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _single_graph(args) -> Graph:
    if args.named:
        return named_graph(args.named)
    lines = [line for line in _read_lines(args.graph6) if line.strip()]
    if len(lines) != 1:
        raise UsageError(f"expected exactly one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


def cmd_curvature(args) -> int:
    g = _single_graph(args)
    report = idleness_report(g, args.idleness) if args.idleness is not None else curvature_report(g)
    if args.format == "json":
        for line in report.json_lines():
            print(line)
    else:
        print(report.table())
    return 0


def cmd_generate(args) -> int:
    if args.graph6 is not None:
        stats = IngestStats()
        config = GenerationConfig(args.n, args.girth) if args.n is not None else None
        kept = list(ingest_graph6(_read_lines(args.graph6), config, strict=args.strict, stats=stats))
        log.info("read=%d kept=%d rejected=%d errors=%d", stats.read, stats.kept, stats.rejected, len(stats.errors))
        for lineno, message in stats.errors:
            log.warning("line %d: %s", lineno, message)
        if args.count_only:
            counts: dict[int, int] = {}
            for g in kept:
                counts[g.n] = counts.get(g.n, 0) + 1
            for n in sorted(counts):
                print(f"{n} {counts[n]}")
        else:
            for g in kept:
                print(emit_graph6(g))
        return 0
    if args.n is None:
        raise UsageError("generate needs -n or --graph6")
    config = GenerationConfig(args.n, args.girth, prune_two_pentagon=args.prune_two_pentagon)
    if args.count_only:
        if args.prune_two_pentagon:
            print(sum(1 for _ in generate(config, jobs=args.jobs)))
        else:
            print(len(generate_classes(config, jobs=args.jobs)))
        return 0
    for g in generate(config, jobs=args.jobs):
        print(emit_graph6(g))
    return 0


def _classify_source(args) -> Iterator[Graph]:
    if args.search:
        yield from search_two_pentagon_completions(args.max_n, node_limit=args.node_limit)
    if args.generate:
        for n in args.generate:
            log.info("generating n=%d", n)
            yield from generate(GenerationConfig(n, args.girth), jobs=args.jobs)
    if args.graph6:
        stats = IngestStats()
        yield from ingest_graph6(_read_lines(args.graph6), strict=args.strict, stats=stats)
        log.info("read=%d kept=%d rejected=%d errors=%d", stats.read, stats.kept, stats.rejected, len(stats.errors))
    for name in args.named or ():
        yield named_graph(name)


def cmd_classify(args) -> int:
    if not (args.search or args.generate or args.graph6 or args.named):
        raise UsageError("classify needs --search, --generate, --graph6 or --named")
    result = classify(list(_classify_source(args)), jobs=args.jobs)
    if args.format == "json":
        print(result.to_json())
    elif args.format == "graph6":
        for line in result.graph6_lines():
            print(line)
    else:
        print(result.table())
    return 0


def cmd_named(args) -> int:
    print(emit_graph6(named_graph(args.name)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ricciflat", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    cur = sub.add_parser("curvature", help="per-edge curvature of one graph")
    src = cur.add_mutually_exclusive_group(required=True)
    src.add_argument("--named", metavar="NAME", help="fixture such as petersen or cycle:7")
    src.add_argument("--graph6", metavar="PATH", help="file with one graph6 line, or - for stdin")
    cur.add_argument("--idleness", type=_rational, metavar="a/b", help="report kappa_p at this idleness")
    cur.add_argument("--format", choices=("table", "json"), default="table")
    cur.set_defaults(func=cmd_curvature)

    gen = sub.add_parser("generate", help="connected cubic graphs with a girth floor")
    gen.add_argument("-n", type=int, help="even vertex count")
    gen.add_argument("--girth", type=int, default=5)
    gen.add_argument("--graph6", metavar="PATH", help="filter an external graph6 stream instead")
    gen.add_argument("--count-only", action="store_true", help="print class counts per n")
    gen.add_argument("--prune-two-pentagon", action="store_true", help="keep only branches that can be flat")
    gen.add_argument("--format", choices=("graph6",), default="graph6")
    gen.add_argument("--strict", action="store_true", help="abort on the first malformed line")
    gen.add_argument("--jobs", type=int, help="worker processes (default: $RICCI_SEED_JOBS or 1)")
    gen.set_defaults(func=cmd_generate)

    cls = sub.add_parser("classify", help="find the Ricci-flat graphs in a stream")
    cls.add_argument("--generate", type=_size_range, metavar="LO..HI", help="generate every even n in the range")
    cls.add_argument("--graph6", metavar="PATH", help="graph6 stream, or - for stdin")
    cls.add_argument("--named", action="append", metavar="NAME", help="add a fixture (repeatable)")
    cls.add_argument("--search", action="store_true", help="two-pentagon completion search")
    cls.add_argument("--max-n", type=int, default=20, help="largest order the search may reach")
    cls.add_argument("--node-limit", type=int, help="abort the search past this many nodes")
    cls.add_argument("--girth", type=int, default=5)
    cls.add_argument("--format", choices=("table", "json", "graph6"), default="table")
    cls.add_argument("--strict", action="store_true", help="abort on the first malformed line")
    cls.add_argument("--jobs", type=int, help="worker processes (default: $RICCI_SEED_JOBS or 1)")
    cls.set_defaults(func=cmd_classify)

    nam = sub.add_parser("named", help="print a fixture graph as graph6")
    nam.add_argument("name")
    nam.set_defaults(func=cmd_named)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if hasattr(args, "jobs") and args.jobs is None:
            args.jobs = _default_jobs()
        return args.func(args)
    except DomainError as exc:
        print(f"ricciflat: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except RicciFlatError as exc:
        print(f"ricciflat: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
