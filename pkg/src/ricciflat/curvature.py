"""Ollivier-Ricci curvature at fixed idleness and the Lin-Lu-Yau curvature."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .exceptions import NotAdjacent, NotRegular
from .graph import Graph, degree_profile, require_connected
from .transport import as_fraction, mu, w1, w1_uniform_regular

__all__ = [
    "EdgeCurvature",
    "CurvatureReport",
    "format_rational",
    "kappa_p",
    "kappa",
    "curvature_report",
    "idleness_report",
    "is_ricci_flat",
]


def format_rational(q: Fraction) -> str:
    """Always ``num/den``, including ``0/1`` and integers."""
    return f"{q.numerator}/{q.denominator}"


def _check_edge(g: Graph, x: int, y: int) -> None:
    if not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
        raise NotAdjacent(f"vertices {x} and {y} are not adjacent")


def kappa_p(g: Graph, x: int, y: int, p) -> Fraction:
    """``1 - W1(mu_x^p, mu_y^p)`` on the edge ``xy``."""
    _check_edge(g, x, y)
    p = as_fraction(p)
    dist, _ = w1(g, mu(g, x, p), mu(g, y, p))
    return 1 - dist


def _regular_degree(g: Graph) -> int:
    d = degree_profile(g)[2]
    if d is None or d == 0:
        raise NotRegular(f"{g!r} is not regular; the limit curvature is only available for regular graphs")
    return d


def kappa(g: Graph, x: int, y: int, method: str = "assignment") -> Fraction:
    """Lin-Lu-Yau curvature of the edge ``xy`` of a regular graph.

    Uses ``kappa = (d+1)/d * kappa_{1/(d+1)}``.  ``method="assignment"``
    evaluates the transport by minimising over bijections of the closed balls;
    ``method="flow"`` runs the general min-cost-flow solver instead.
    """
    d = _regular_degree(g)
    _check_edge(g, x, y)
    require_connected(g)
    if method == "assignment":
        idle = 1 - w1_uniform_regular(g, x, y)
    elif method == "flow":
        idle = kappa_p(g, x, y, Fraction(1, d + 1))
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fraction(d + 1, d) * idle


@dataclass(frozen=True)
class EdgeCurvature:
    u: int
    v: int
    kappa_idle: Fraction
    kappa: Fraction | None = None


@dataclass
class CurvatureReport:
    """Per-edge curvatures of one graph.

    For regular graphs ``kappa_idle`` is the value at idleness ``1/(d+1)`` and
    ``kappa`` the limit curvature.  Reports built by :func:`idleness_report`
    carry only ``kappa_idle`` at the requested ``idleness``.
    """

    records: list[EdgeCurvature]
    idleness: Fraction
    limit: bool = True
    min_kappa: Fraction = field(init=False)
    max_kappa: Fraction = field(init=False)
    all_flat: bool = field(init=False)

    def __post_init__(self):
        values = self.values()
        self.min_kappa = min(values) if values else Fraction(0)
        self.max_kappa = max(values) if values else Fraction(0)
        self.all_flat = all(v == 0 for v in values)

    def values(self) -> list[Fraction]:
        return [r.kappa if self.limit else r.kappa_idle for r in self.records]

    def json_lines(self) -> Iterator[str]:
        key = "kappa" if self.limit else "kappa_p"
        for r in self.records:
            row = {"u": r.u, "v": r.v, key: format_rational(r.kappa if self.limit else r.kappa_idle)}
            if self.limit:
                row["kappa_idle"] = format_rational(r.kappa_idle)
            yield json.dumps(row)
        yield json.dumps(
            {
                "summary": True,
                "edges": len(self.records),
                "idleness": format_rational(self.idleness),
                "min_" + key: format_rational(self.min_kappa),
                "max_" + key: format_rational(self.max_kappa),
                "all_flat": self.all_flat,
            }
        )

    def table(self) -> str:
        key = "kappa" if self.limit else "kappa_p"
        rows = [("u", "v", f"kappa_p(p={format_rational(self.idleness)})", key if self.limit else "")]
        for r in self.records:
            rows.append(
                (str(r.u), str(r.v), format_rational(r.kappa_idle), format_rational(r.kappa) if self.limit else "")
            )
        if not self.limit:
            rows = [row[:3] for row in rows]
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
        lines.append(
            f"edges={len(self.records)} min={format_rational(self.min_kappa)} "
            f"max={format_rational(self.max_kappa)} all_flat={str(self.all_flat).lower()}"
        )
        return "\n".join(lines)


def curvature_report(g: Graph) -> CurvatureReport:
    """Limit curvature on every edge of a connected regular graph."""
    d = _regular_degree(g)
    require_connected(g)
    scale = Fraction(d + 1, d)
    records = []
    for u, v in g.edges:
        idle = 1 - w1_uniform_regular(g, u, v)
        records.append(EdgeCurvature(u, v, idle, scale * idle))
    return CurvatureReport(records, Fraction(1, d + 1))


def idleness_report(g: Graph, p) -> CurvatureReport:
    """``kappa_p`` on every edge of a connected graph (regularity not required)."""
    p = as_fraction(p)
    require_connected(g)
    records = [EdgeCurvature(u, v, kappa_p(g, u, v, p)) for u, v in g.edges]
    return CurvatureReport(records, p, limit=False)


def is_ricci_flat(g: Graph) -> bool:
    return curvature_report(g).all_flat
