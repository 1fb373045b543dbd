"""Find the Ricci-flat graphs in a stream and check the local pentagon structure.

Two independent routes lead to the same list of flat cubic girth-5 graphs:

* :func:`classify` computes the curvature of every edge of every input graph
  (typically the output of :func:`ricciflat.generation.generate`);
* :func:`search_two_pentagon_completions` grows graphs outward from two
  pentagons sharing one edge and keeps only completions in which every edge
  lies on two such pentagons.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .canon import canonical_form, canonical_graph
from .curvature import curvature_report, kappa
from .exceptions import DomainError, GirthTooSmall, NotCubic
from .graph import Graph, degree_profile, girth, is_connected, require_connected, two_pentagon_condition
from .graph6 import emit_graph6
from .named import FLAT_FIXTURES, named_graph
from .partial import PartialGraph, grow

__all__ = [
    "FlatGraph",
    "ClassificationResult",
    "classify",
    "verify_lemma",
    "identify",
    "search_two_pentagon_completions",
    "SEED_EDGES",
]

log = logging.getLogger(__name__)

# Two pentagons x-x1-v-y1-y and x-x2-u-y2-y sharing only the edge xy, with
# x=0, y=1, x1=2, x2=3, y1=4, y2=5, v=6, u=7.
SEED_EDGES = ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (4, 6), (3, 7), (5, 7))
SEED_ORDER = 8


@lru_cache(maxsize=None)
def _fixture_forms() -> dict[bytes, str]:
    return {canonical_form(named_graph(name)): name for name in FLAT_FIXTURES}


def identify(g: Graph) -> str | None:
    """Name of the flat fixture isomorphic to `g`, if any."""
    return _fixture_forms().get(canonical_form(g))


def verify_lemma(g: Graph) -> list[tuple[int, int]]:
    """Edges of zero curvature that do not lie on two pentagons meeting only there.

    For connected cubic graphs of girth at least 5 this list should always
    be empty.
    """
    if degree_profile(g)[2] != 3:
        raise NotCubic(f"{g!r} is not 3-regular")
    require_connected(g)
    gg = girth(g)
    if gg is not None and gg < 5:
        raise GirthTooSmall(f"girth {gg} < 5")
    report = curvature_report(g)
    return [(r.u, r.v) for r in report.records if r.kappa == 0 and not two_pentagon_condition(g, (r.u, r.v))]


@dataclass(frozen=True)
class FlatGraph:
    form: bytes
    n: int
    name: str | None
    graph6: str
    girth: int | None

    def to_dict(self) -> dict:
        return {
            "canonical_form": self.form.decode("ascii"),
            "n": self.n,
            "name": self.name or "UNKNOWN",
            "graph6": self.graph6,
            "girth": self.girth,
        }


@dataclass
class ClassificationResult:
    inspected: int = 0
    flat: list[FlatGraph] = field(default_factory=list)
    lemma_violations: list[tuple[str, tuple[int, int]]] = field(default_factory=list)
    girth_violations: list[str] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)
    tally: dict[int, dict[str, int]] = field(default_factory=dict)

    def _count(self, n: int, key: str) -> None:
        row = self.tally.setdefault(n, {"inspected": 0, "flat": 0})
        row[key] += 1

    @property
    def flat_names(self) -> list[str]:
        return [f.name or "UNKNOWN" for f in self.flat]

    def to_json(self) -> str:
        doc = {
            "inspected": self.inspected,
            "flat": [f.to_dict() for f in self.flat],
            "lemma_violations": [{"graph6": s, "edge": list(e)} for s, e in self.lemma_violations],
            "girth_violations": self.girth_violations,
            "skipped": [{"graph6": s, "reason": r} for s, r in self.skipped],
            "tally": {str(n): row for n, row in sorted(self.tally.items())},
        }
        return json.dumps(doc, sort_keys=True)

    def table(self) -> str:
        lines = [f"{'n':>3}  {'inspected':>9}  {'flat':>4}"]
        for n, row in sorted(self.tally.items()):
            lines.append(f"{n:>3}  {row['inspected']:>9}  {row['flat']:>4}")
        lines.append(f"inspected={self.inspected} flat={len(self.flat)} "
                     f"lemma_violations={len(self.lemma_violations)} skipped={len(self.skipped)}")
        for f in self.flat:
            lines.append(f"flat: n={f.n:<3} girth={f.girth}  {f.name or 'UNKNOWN':<13} {f.graph6}")
        return "\n".join(lines)

    def graph6_lines(self) -> list[str]:
        return [f.graph6 for f in self.flat]


def _examine(g: Graph) -> dict:
    """Curvature, flatness and pentagon checks for one graph (runs in workers)."""
    code = emit_graph6(g)
    if not is_connected(g):
        return {"graph6": code, "skip": "disconnected", "n": g.n}
    if degree_profile(g)[2] is None:
        return {"graph6": code, "skip": "not regular", "n": g.n}
    try:
        report = curvature_report(g)
    except DomainError as exc:
        return {"graph6": code, "skip": str(exc), "n": g.n}
    out = {"graph6": code, "n": g.n, "flat": report.all_flat, "violations": []}
    gg = girth(g)
    cubic_girth5 = report.records and degree_profile(g)[2] == 3 and (gg is None or gg >= 5)
    if cubic_girth5:
        out["violations"] = [
            (r.u, r.v) for r in report.records if r.kappa == 0 and not two_pentagon_condition(g, (r.u, r.v))
        ]
    if report.all_flat:
        # Independent second pass through the general min-cost-flow solver.
        if any(kappa(g, u, v, method="flow") != 0 for u, v in g.edges):
            raise AssertionError(f"flow solver disagrees on flatness of {code}")
        out["form"] = canonical_form(g)
        out["canonical_graph6"] = emit_graph6(canonical_graph(g))
        out["girth"] = gg
        out["check_girth"] = bool(cubic_girth5)
    return out


def classify(graphs: Iterable[Graph], jobs: int = 1) -> ClassificationResult:
    """Curvature census of a stream of graphs.

    Graphs that are disconnected or irregular are recorded in ``skipped``;
    flat graphs are deduplicated by canonical form and matched against the
    named fixtures, with unmatched ones reported as ``UNKNOWN``.
    """
    result = ClassificationResult()
    seen: dict[bytes, FlatGraph] = {}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_examine, graphs, chunksize=8))
    else:
        outcomes = map(_examine, graphs)
    for item in outcomes:
        if "skip" in item:
            result.skipped.append((item["graph6"], item["skip"]))
            continue
        result.inspected += 1
        result._count(item["n"], "inspected")
        for edge in item["violations"]:
            result.lemma_violations.append((item["graph6"], edge))
        if not item["flat"]:
            continue
        if item["check_girth"] and item["girth"] != 5:
            result.girth_violations.append(item["graph6"])
        if item["form"] in seen:
            continue
        name = _fixture_forms().get(item["form"])
        entry = FlatGraph(item["form"], item["n"], name, item["canonical_graph6"], item["girth"])
        seen[item["form"]] = entry
        result.flat.append(entry)
        result._count(item["n"], "flat")
        log.info("flat graph on %d vertices: %s", item["n"], name or "UNKNOWN")
    result.flat.sort(key=lambda f: (f.n, f.form))
    return result


def search_two_pentagon_completions(max_n: int, node_limit: int | None = None) -> list[Graph]:
    """Cubic girth-5 graphs on at most `max_n` vertices with every edge on two pentagons.

    Grows outward from two pentagons that share exactly one edge.  A partial
    graph is abandoned as soon as an edge with saturated endpoints can no
    longer lie on two such pentagons, so completed graphs satisfy the
    condition on every edge.  Results are canonically labeled and sorted by
    ``(n, canonical form)``.

    Raises :class:`~ricciflat.exceptions.SearchBudgetExceeded` when more than
    `node_limit` search nodes are visited.
    """
    if max_n < 10:
        raise ValueError(f"max_n must be at least 10, got {max_n}")
    pg = PartialGraph(max_n, 5, m=SEED_ORDER, edges=SEED_EDGES)
    found: dict[bytes, Graph] = {}

    def emit(state: PartialGraph) -> None:
        g = state.to_graph()
        assert all(two_pentagon_condition(g, e) for e in g.edges)
        found.setdefault(canonical_form(g), g)

    nodes = grow(pg, emit, check=PartialGraph.saturated_edges_ok, node_limit=node_limit)
    log.info("two-pentagon search visited %d nodes", nodes)
    return [canonical_graph(found[k]) for k in sorted(found, key=lambda k: (len(k), k))]
