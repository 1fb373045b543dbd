"""Acceptance criteria, one marked group per criterion.

Each test carries a `criterion` marker; conftest.py folds the outcomes into a
single PASS/FAIL line per criterion at the end of the run.
"""

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import networkx as nx
import pytest

from oracles import bijection_kappa, naive_cubic_girth5_classes, to_nx, two_pentagons_oracle
from ricciflat.classification import classify, identify
from ricciflat.curvature import curvature_report, kappa, kappa_p
from ricciflat.generation import GenerationConfig, generate_classes
from ricciflat.graph import Graph, girth, two_pentagon_condition
from ricciflat.graph6 import emit_graph6, parse_graph6
from ricciflat.named import complete_bipartite_graph, complete_graph, cycle_graph, dodecahedron, named_graph
from ricciflat.transport import mu, w1, w1_uniform_regular

F = Fraction
criterion = pytest.mark.criterion


def cli(*argv):
    env = {k: v for k, v in os.environ.items() if k != "RICCI_SEED_JOBS"}
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "ricciflat", *argv], capture_output=True, text=True, env=env)
    return proc, time.perf_counter() - start


def connected_regular(rng, d, n):
    while True:
        h = nx.random_regular_graph(d, n, seed=rng.randrange(2**32))
        if nx.is_connected(h):
            return Graph(n, h.edges())


# 1 -------------------------------------------------------------------------

@criterion(1, "desk tier: classify --generate 10..14 finds Petersen and Triplex only")
def test_desk_tier_cli():
    proc, elapsed = cli("classify", "--generate", "10..14", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert {n: t["inspected"] for n, t in doc["tally"].items()} == {"10": 1, "12": 2, "14": 9}
    assert doc["inspected"] == 12
    assert [(f["name"], f["n"]) for f in doc["flat"]] == [("petersen", 10), ("triplex", 12)]
    assert elapsed < 60


@criterion(1, "desk tier: classify --generate 10..14 finds Petersen and Triplex only")
@pytest.mark.parametrize("n", [10, 12, 14])
def test_desk_tier_counts_match_naive_enumeration(n):
    assert len(generate_classes(GenerationConfig(n))) == len(naive_cubic_girth5_classes(n))


# 2 -------------------------------------------------------------------------

@criterion(2, "full tier: dodecahedron flat, search returns exactly the three graphs")
def test_dodecahedron_all_edges_zero():
    report = curvature_report(dodecahedron())
    assert len(report.records) == 30
    assert [r.kappa for r in report.records] == [F(0)] * 30
    assert report.all_flat


@criterion(2, "full tier: dodecahedron flat, search returns exactly the three graphs")
def test_search_cli():
    proc, elapsed = cli("classify", "--search", "--max-n", "20", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert [(f["name"], f["n"]) for f in doc["flat"]] == [("petersen", 10), ("triplex", 12), ("dodecahedron", 20)]
    assert doc["inspected"] == 3
    assert elapsed < 600


# 3 -------------------------------------------------------------------------

EXACT = [
    ("petersen", F(0)),
    ("triplex", F(0)),
    ("dodecahedron", F(0)),
    *((f"cycle:{n}", F(0)) for n in range(6, 13)),
    ("cycle:5", F(1, 2)),
    ("complete:4", F(4, 3)),
    ("kbip:3:3", F(2, 3)),
]


@criterion(3, "exact curvature values")
@pytest.mark.parametrize("name, expected", EXACT, ids=[name for name, _ in EXACT])
def test_exact_values(name, expected):
    g = named_graph(name)
    assert [r.kappa for r in curvature_report(g).records] == [expected] * len(g.edges)


@criterion(3, "exact curvature values")
@pytest.mark.parametrize("g", [cycle_graph(5), complete_graph(4), complete_bipartite_graph(3, 3)], ids=["C5", "K4", "K33"])
def test_derived_values_against_bijection_oracle(g):
    h = to_nx(g)
    for u, v in g.edges:
        assert kappa(g, u, v) == bijection_kappa(h, u, v)


# 4 -------------------------------------------------------------------------

@criterion(4, "lemma suite over all generated graphs with n <= 14")
def test_lemma_suite(generated):
    assert generate_classes(GenerationConfig(8)) == []
    graphs = [g for n in sorted(generated) for g in generated[n]]
    result = classify(graphs)
    assert result.inspected == 12
    assert result.lemma_violations == []
    assert result.girth_violations == []
    for g in graphs:
        h = to_nx(g)
        for r in curvature_report(g).records:
            if r.kappa == 0:
                assert two_pentagon_condition(g, (r.u, r.v))
                assert two_pentagons_oracle(h, r.u, r.v)
    for g in graphs:
        if curvature_report(g).all_flat:
            assert girth(g) == 5


# 5 -------------------------------------------------------------------------

def assert_marginals(plan, m1, m2):
    rows, cols = {}, {}
    for (s, t), mass in plan.items():
        assert mass >= 0
        rows[s] = rows.get(s, 0) + mass
        cols[t] = cols.get(t, 0) + mass
    assert {k: v for k, v in rows.items() if v} == m1
    assert {k: v for k, v in cols.items() if v} == m2


@criterion(5, "flow W1 equals assignment W1 on 1000+ random regular edges")
def test_flow_equals_assignment():
    rng = random.Random(20240601)
    checked = 0
    while checked < 1000:
        d = rng.randint(2, 4)
        n = rng.choice([k for k in range(d + 1, 17) if k * d % 2 == 0])
        g = connected_regular(rng, d, n)
        p = F(1, d + 1)
        for u, v in rng.sample(g.edges, min(len(g.edges), 8)):
            m1, m2 = mu(g, u, p), mu(g, v, p)
            value, plan = w1(g, m1, m2)
            assert value == w1_uniform_regular(g, u, v)
            assert_marginals(plan, m1, m2)
            checked += 1
    assert checked >= 1000


# 6 -------------------------------------------------------------------------

@criterion(6, "bounds and signs of curvature")
def test_kappa_p_bounds():
    rng = random.Random(6)
    for _ in range(1000):
        n = rng.randint(2, 12)
        while True:
            h = nx.gnp_random_graph(n, rng.uniform(0.2, 0.8), seed=rng.randrange(2**32))
            if nx.is_connected(h):
                break
        g = Graph(n, h.edges())
        u, v = rng.choice(g.edges)
        den = rng.randint(1, 12)
        p = F(rng.randint(0, den), den)
        assert -2 <= kappa_p(g, u, v, p) <= 1
        assert kappa_p(g, u, v, 1) == 0


@criterion(6, "bounds and signs of curvature")
def test_cubic_girth5_nonpositive(generated):
    graphs = [g for n in sorted(generated) for g in generated[n]] + [dodecahedron()]
    for g in graphs:
        assert all(kappa(g, u, v) <= 0 for u, v in g.edges)


# 7 -------------------------------------------------------------------------

@criterion(7, "graph6 fidelity")
def test_graph6_roundtrip(generated):
    for graphs in generated.values():
        for g in graphs:
            text = emit_graph6(g)
            assert parse_graph6(text) == g
            assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    for name in ("petersen", "triplex", "dodecahedron"):
        g = named_graph(name)
        assert parse_graph6(emit_graph6(g)) == g
        assert identify(parse_graph6(emit_graph6(g))) == name


@criterion(7, "graph6 fidelity")
@pytest.mark.parametrize("text, n", [("@", 1), ("A_", 2), ("Bw", 3)])
def test_graph6_fixtures(text, n):
    g = complete_graph(n)
    assert emit_graph6(g) == text
    assert parse_graph6(text) == g
