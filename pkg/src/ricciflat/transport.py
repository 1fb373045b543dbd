"""Exact Wasserstein-1 transport between finitely supported vertex measures.

Masses are :class:`fractions.Fraction` throughout.  The transportation problem
is scaled to integers by the least common denominator of all masses and
solved as a min-cost flow by successive shortest augmenting paths, so the
returned value and plan are exact.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Dict, Tuple

from .exceptions import (
    DisconnectedGraph,
    IdlenessOutOfRange,
    InvalidMeasure,
    IsolatedVertex,
    NotAdjacent,
    NotRegular,
)
from .graph import Graph, bfs_distances, degree_profile, require_connected

__all__ = [
    "ProbMeasure",
    "TransportPlan",
    "as_fraction",
    "validate_measure",
    "mu",
    "min_cost_flow",
    "w1",
    "w1_uniform_regular",
    "plan_cost",
]

#: Sparse vertex -> mass map with strictly positive masses summing to 1.
ProbMeasure = Dict[int, Fraction]
#: Sparse (source, target) -> mass map.
TransportPlan = Dict[Tuple[int, int], Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted; pass a Fraction or 'a/b'")
    return Fraction(value)


def validate_measure(g: Graph, m: ProbMeasure) -> None:
    if not m:
        raise InvalidMeasure("empty measure")
    for v, mass in m.items():
        if not 0 <= v < g.n:
            raise InvalidMeasure(f"vertex {v} outside 0..{g.n - 1}")
        if not isinstance(mass, (int, Fraction)) or mass <= 0:
            raise InvalidMeasure(f"mass at {v} must be a positive rational, got {mass!r}")
    total = sum(m.values(), Fraction(0))
    if total != 1:
        raise InvalidMeasure(f"masses sum to {total}, not 1")


def mu(g: Graph, x: int, p) -> ProbMeasure:
    """Lazy random-walk measure: mass `p` at `x`, ``(1-p)/deg(x)`` on each neighbour."""
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise IdlenessOutOfRange(f"idleness must lie in [0, 1], got {p}")
    measure: ProbMeasure = {}
    if p > 0:
        measure[x] = p
    if p < 1:
        d = g.degree(x)
        if d == 0:
            raise IsolatedVertex(f"vertex {x} has no neighbours but idleness {p} < 1")
        share = (1 - p) / d
        for z in g.adj[x]:
            measure[z] = share
    return measure


def min_cost_flow(supply: list[int], demand: list[int], cost: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Balanced transportation problem with integer data.

    Parameters
    ----------
    supply, demand : list of int
        Nonnegative amounts with equal totals.
    cost : list of list of int
        ``cost[i][j]`` is the nonnegative unit cost of shipping from ``i`` to ``j``.

    Returns
    -------
    total : int
        Minimum total cost.
    flow : list of list of int
        An optimal shipment matrix.

    Successive shortest paths with Bellman-Ford on the residual network; each
    augmentation pushes the bottleneck amount, so the number of iterations does
    not depend on the magnitude of the amounts.
    """
    a, b = len(supply), len(demand)
    if sum(supply) != sum(demand):
        raise InvalidMeasure("supply and demand totals differ")
    # Nodes: 0 = source, 1..a = suppliers, a+1..a+b = consumers, a+b+1 = sink.
    src, sink = 0, a + b + 1
    size = a + b + 2
    # Residual arcs stored as [to, capacity, cost, index of reverse arc].
    arcs: list[list[list[int]]] = [[] for _ in range(size)]

    def add(u, v, cap, c):
        arcs[u].append([v, cap, c, len(arcs[v])])
        arcs[v].append([u, 0, -c, len(arcs[u]) - 1])

    total_supply = sum(supply)
    for i, s in enumerate(supply):
        add(src, 1 + i, s, 0)
    middle: list[list[int]] = [[0] * b for _ in range(a)]
    for i in range(a):
        for j in range(b):
            middle[i][j] = len(arcs[1 + i])
            add(1 + i, 1 + a + j, total_supply, cost[i][j])
    for j, t in enumerate(demand):
        add(1 + a + j, sink, t, 0)

    total_cost = 0
    remaining = total_supply
    while remaining > 0:
        dist: list[int | None] = [None] * size
        prev: list[tuple[int, int] | None] = [None] * size
        dist[src] = 0
        for _ in range(size - 1):
            changed = False
            for u in range(size):
                du = dist[u]
                if du is None:
                    continue
                for k, (v, cap, c, _) in enumerate(arcs[u]):
                    if cap > 0 and (dist[v] is None or du + c < dist[v]):
                        dist[v] = du + c
                        prev[v] = (u, k)
                        changed = True
            if not changed:
                break
        if dist[sink] is None:
            raise InvalidMeasure("transportation network has no feasible flow")
        push = remaining
        v = sink
        while v != src:
            u, k = prev[v]
            push = min(push, arcs[u][k][1])
            v = u
        v = sink
        while v != src:
            u, k = prev[v]
            arc = arcs[u][k]
            arc[1] -= push
            arcs[v][arc[3]][1] += push
            v = u
        total_cost += push * dist[sink]
        remaining -= push

    flow = [[total_supply - arcs[1 + i][middle[i][j]][1] for j in range(b)] for i in range(a)]
    return total_cost, flow


def _support_costs(g: Graph, sources: list[int], targets: list[int]) -> list[list[int]]:
    costs = []
    for s in sources:
        dist = bfs_distances(g, s)
        row = []
        for t in targets:
            if dist[t] is None:
                raise DisconnectedGraph(f"vertices {s} and {t} lie in different components")
            row.append(dist[t])
        costs.append(row)
    return costs


def plan_cost(g: Graph, plan: TransportPlan) -> Fraction:
    """``sum d(x, y) * plan[x, y]`` using hop distances in `g`."""
    total = Fraction(0)
    for (s, t), mass in plan.items():
        total += bfs_distances(g, s)[t] * mass
    return total


def w1(g: Graph, m1: ProbMeasure, m2: ProbMeasure) -> tuple[Fraction, TransportPlan]:
    """Exact W1 distance between `m1` and `m2` and one optimal transport plan.

    The plan is informational; among several optima whichever the solver
    reaches first is returned.
    """
    require_connected(g)
    validate_measure(g, m1)
    validate_measure(g, m2)
    sources = sorted(m1)
    targets = sorted(m2)
    scale = lcm(*(Fraction(m).denominator for m in (*m1.values(), *m2.values())))
    supply = [int(m1[s] * scale) for s in sources]
    demand = [int(m2[t] * scale) for t in targets]
    costs = _support_costs(g, sources, targets)
    total, flow = min_cost_flow(supply, demand, costs)
    plan: TransportPlan = {}
    for i, s in enumerate(sources):
        for j, t in enumerate(targets):
            if flow[i][j]:
                plan[s, t] = Fraction(flow[i][j], scale)
    return Fraction(total, scale), plan


def w1_uniform_regular(g: Graph, x: int, y: int) -> Fraction:
    """W1 between the uniform measures on the closed neighbourhoods of `x` and `y`.

    For a d-regular graph these are the lazy measures at idleness ``1/(d+1)``.
    Both measures are uniform with equal support size, so by Birkhoff's
    theorem some permutation plan is optimal and the minimum over bijections
    between the two balls is the exact distance.
    """
    d = degree_profile(g)[2]
    if d is None:
        raise NotRegular(f"{g!r} is not regular")
    if not g.has_edge(x, y):
        raise NotAdjacent(f"vertices {x} and {y} are not adjacent")
    require_connected(g)
    ball_x = [x, *g.adj[x]]
    ball_y = [y, *g.adj[y]]
    costs = _support_costs(g, ball_x, ball_y)
    k = len(ball_x)
    best = min(sum(costs[i][sigma[i]] for i in range(k)) for sigma in permutations(range(k)))
    return Fraction(best, d + 1)
