import json
import random
from fractions import Fraction

import pytest

from oracles import bijection_kappa, lp_w1, lazy_measure, to_nx
from ricciflat.curvature import curvature_report, format_rational, idleness_report, is_ricci_flat, kappa, kappa_p
from ricciflat.exceptions import DisconnectedGraph, NotAdjacent, NotRegular
from ricciflat.graph import Graph
from ricciflat.named import complete_bipartite_graph, complete_graph, cycle_graph, dodecahedron, petersen, triplex

F = Fraction


def test_format_rational():
    assert format_rational(F(0)) == "0/1"
    assert format_rational(F(-4, 6)) == "-2/3"
    assert format_rational(F(3)) == "3/1"


class TestKappaP:
    def test_full_idleness_is_zero(self):
        for g in (petersen(), cycle_graph(7), complete_graph(5)):
            assert all(kappa_p(g, u, v, 1) == 0 for u, v in g.edges)

    def test_k4_quarter(self):
        assert kappa_p(complete_graph(4), 0, 1, F(1, 4)) == 1

    def test_c5_zero_idleness_matches_lp(self):
        g = cycle_graph(5)
        h = to_nx(g)
        lp = lp_w1(h, lazy_measure(h, 0, F(0)), lazy_measure(h, 1, F(0)))
        assert kappa_p(g, 0, 1, 0) == 0 == 1 - round(lp)

    def test_symmetric(self):
        rng = random.Random(3)
        g = triplex()
        for u, v in g.edges:
            p = F(rng.randint(0, 12), 12)
            assert kappa_p(g, u, v, p) == kappa_p(g, v, u, p)

    def test_not_adjacent(self):
        with pytest.raises(NotAdjacent):
            kappa_p(cycle_graph(6), 0, 3, F(1, 2))

    def test_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedGraph):
            kappa_p(g, 0, 1, F(1, 2))


class TestKappa:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (petersen(), F(0)),
            (cycle_graph(6), F(0)),
            (complete_graph(4), F(4, 3)),
            (cycle_graph(5), F(1, 2)),
            (complete_bipartite_graph(3, 3), F(2, 3)),
        ],
        ids=["petersen", "C6", "K4", "C5", "K33"],
    )
    def test_values_match_bijection_oracle(self, g, expected):
        h = to_nx(g)
        for u, v in g.edges:
            assert kappa(g, u, v) == expected == bijection_kappa(h, u, v)

    def test_flow_route_agrees(self):
        for g in (petersen(), triplex(), cycle_graph(5), complete_graph(5), complete_bipartite_graph(4, 4)):
            for u, v in g.edges:
                assert kappa(g, u, v) == kappa(g, u, v, method="flow")

    def test_cubic_values_are_thirds(self):
        for g in (petersen(), triplex(), complete_graph(4), complete_bipartite_graph(3, 3)):
            for u, v in g.edges:
                assert (kappa(g, u, v) * 3).denominator == 1

    def test_not_regular(self):
        with pytest.raises(NotRegular):
            kappa(Graph(3, [(0, 1), (1, 2)]), 0, 1)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            kappa(cycle_graph(5), 0, 1, method="simplex")


class TestReports:
    def test_triplex_flat(self):
        report = curvature_report(triplex())
        assert len(report.records) == 18
        assert all(r.kappa == 0 for r in report.records)
        assert report.all_flat and is_ricci_flat(triplex())

    def test_dodecahedron_flat(self):
        report = curvature_report(dodecahedron())
        assert len(report.records) == 30
        assert report.all_flat

    def test_c5(self):
        report = curvature_report(cycle_graph(5))
        assert all(r.kappa == F(1, 2) and r.kappa_idle == F(1, 3) for r in report.records)
        assert not report.all_flat
        assert report.min_kappa == report.max_kappa == F(1, 2)

    def test_json_lines(self):
        lines = [json.loads(s) for s in curvature_report(cycle_graph(5)).json_lines()]
        assert lines[0] == {"u": 0, "v": 1, "kappa": "1/2", "kappa_idle": "1/3"}
        assert lines[-1]["summary"] is True and lines[-1]["all_flat"] is False
        assert len(lines) == 6

    def test_idleness_report_irregular(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        report = idleness_report(g, F(1, 2))
        h = to_nx(g)
        for r in report.records:
            lp = lp_w1(h, lazy_measure(h, r.u, F(1, 2)), lazy_measure(h, r.v, F(1, 2)))
            assert float(r.kappa_idle) == pytest.approx(1 - lp, abs=1e-9)
        rows = [json.loads(s) for s in report.json_lines()]
        assert "kappa_p" in rows[0] and rows[-1]["idleness"] == "1/2"

    def test_table(self):
        text = curvature_report(petersen()).table()
        assert text.splitlines()[-1] == "edges=15 min=0/1 max=0/1 all_flat=true"
        assert len(text.splitlines()) == 17

    def test_long_cycles_flat(self):
        for n in range(6, 13):
            assert curvature_report(cycle_graph(n)).all_flat
