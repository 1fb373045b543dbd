"""Isomorph-free generation of connected cubic graphs with a girth floor.

Graphs are grown from a single vertex by :func:`ricciflat.partial.grow`,
which yields every connected cubic graph on ``n`` vertices (with girth at
least ``girth_min``) under one or more labelings.  Completed graphs are
reduced to one representative per isomorphism class by canonical form and
emitted in canonical-form order, so the output does not depend on the search
order or on the number of worker processes.

Sizes up to 16 vertices are quick; 18 and 20 work but take a long time in
pure Python.  For those, generate with nauty's ``geng -c -d3 -D3 -t -f n``
(adding girth filtering downstream) and feed the output through
:func:`ingest_graph6`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .canon import canonical_form
from .exceptions import MalformedGraph6, OddOrder, UnsupportedSize
from .graph import Graph, degree_profile, girth, is_connected, two_pentagon_condition
from .graph6 import parse_graph6
from .partial import PartialGraph, grow

__all__ = ["GenerationConfig", "generate", "generate_classes", "IngestStats", "ingest_graph6"]

log = logging.getLogger(__name__)

MAX_ORDER = 24
SPLIT_DEPTH = 12


@dataclass(frozen=True)
class GenerationConfig:
    """What to generate (or keep, when filtering an external stream).

    `prune_two_pentagon` additionally discards any partial graph holding a
    saturated edge that can no longer lie on two pentagons meeting only in
    that edge.  Every Ricci-flat cubic graph of girth at least 5 survives
    this pruning.
    """

    n: int
    girth_min: int = 5
    prune_two_pentagon: bool = False

    def __post_init__(self):
        if self.n % 2:
            raise OddOrder(f"cubic graphs have even order, got n={self.n}")
        if not 2 <= self.n <= MAX_ORDER:
            raise UnsupportedSize(f"n must lie in 2..{MAX_ORDER}, got {self.n}")
        if self.girth_min < 3:
            raise UnsupportedSize(f"girth_min must be at least 3, got {self.girth_min}")


def _check_for(config: GenerationConfig):
    if config.prune_two_pentagon:
        return PartialGraph.saturated_edges_ok
    return None


def _complete_forms(config: GenerationConfig, m: int, edges: list[tuple[int, int]]) -> set[bytes]:
    pg = PartialGraph(config.n, config.girth_min, m=m, edges=edges)
    forms: set[bytes] = set()

    def emit(state: PartialGraph) -> None:
        if state.m == config.n:
            forms.add(canonical_form(state.to_graph()))

    grow(pg, emit, check=_check_for(config))
    return forms


def _subtree_task(args) -> set[bytes]:
    config, m, edges = args
    return _complete_forms(config, m, edges)


def generate_classes(config: GenerationConfig, jobs: int = 1) -> list[bytes]:
    """Sorted canonical forms of all classes described by `config`."""
    if jobs <= 1:
        forms = _complete_forms(config, 1, [])
    else:
        frontier: list = []
        seed = PartialGraph(config.n, config.girth_min)
        forms = set()

        def emit(state: PartialGraph) -> None:
            if state.m == config.n:
                forms.add(canonical_form(state.to_graph()))

        grow(seed, emit, check=_check_for(config), split_depth=SPLIT_DEPTH, frontier=frontier)
        log.info("split search into %d subtrees", len(frontier))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            tasks = ((config, m, edges) for m, edges in frontier)
            for part in pool.map(_subtree_task, tasks, chunksize=4):
                forms |= part
    return sorted(forms)


def generate(config: GenerationConfig, jobs: int = 1) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class.

    Emits connected cubic graphs on ``config.n`` vertices with girth at least
    ``config.girth_min``, ordered by canonical form.  With
    ``prune_two_pentagon`` only graphs in which every edge satisfies the
    two-pentagon condition are produced.
    """
    for form in generate_classes(config, jobs=jobs):
        g = parse_graph6(form.decode("ascii"))
        if config.prune_two_pentagon and not all(two_pentagon_condition(g, e) for e in g.edges):
            continue
        yield g


@dataclass
class IngestStats:
    read: int = 0
    kept: int = 0
    rejected: int = 0
    errors: list[tuple[int, str]] = field(default_factory=list)
    reasons: dict[str, int] = field(default_factory=dict)

    def reject(self, reason: str) -> None:
        self.rejected += 1
        self.reasons[reason] = self.reasons.get(reason, 0) + 1


def _rejection(g: Graph, n: int | None, girth_min: int) -> str | None:
    if n is not None and g.n != n:
        return "order"
    if degree_profile(g)[2] != 3:
        return "not 3-regular"
    if not is_connected(g):
        return "disconnected"
    gg = girth(g)
    if gg is not None and gg < girth_min:
        return "girth"
    return None


def ingest_graph6(
    lines: Iterable[str],
    filters: GenerationConfig | None = None,
    strict: bool = False,
    stats: IngestStats | None = None,
) -> Iterator[Graph]:
    """Parse a graph6 stream (such as ``geng`` output) and keep matching graphs.

    With ``filters=None`` only the cubic/connectivity/girth-5 checks are
    applied and any even order is accepted.  Malformed lines raise
    :class:`MalformedGraph6` when `strict`, otherwise they are recorded in
    ``stats.errors`` and skipped.
    """
    stats = stats if stats is not None else IngestStats()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        stats.read += 1
        try:
            g = parse_graph6(line)
        except MalformedGraph6 as exc:
            if strict:
                raise MalformedGraph6(str(exc), line=lineno) from None
            stats.errors.append((lineno, str(exc)))
            continue
        if filters is None:
            reason = _rejection(g, None, 5)
        else:
            reason = _rejection(g, filters.n, filters.girth_min)
        if reason is not None:
            stats.reject(reason)
            continue
        stats.kept += 1
        yield g
