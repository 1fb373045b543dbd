"""Partially built cubic graphs and the backtracking routine that grows them.

Both the exhaustive generator and the two-pentagon completion search extend a
:class:`PartialGraph` the same way: the lowest-numbered vertex with a free slot
receives its next neighbour, which is either a higher-numbered existing vertex
(taken in increasing order) or a brand new vertex with the next free index.
Every connected cubic supergraph of the starting configuration is reached by
at least one branch.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .exceptions import SearchBudgetExceeded
from .graph import Graph

__all__ = ["PartialGraph", "grow"]

DEGREE = 3


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class PartialGraph:
    """Graph under construction with every degree at most 3.

    Attributes
    ----------
    capacity : int
        Largest vertex count the construction may reach.
    girth_min : int
        Edges closing a cycle shorter than this are never added.
    masks : list of int
        Neighbourhood bitmasks, one per potential vertex.
    deg : list of int
    m : int
        Number of vertices created so far (``0 .. m-1``).
    """

    def __init__(self, capacity: int, girth_min: int, m: int = 1, edges: Iterable[tuple[int, int]] = ()):
        self.capacity = capacity
        self.girth_min = girth_min
        self.masks = [0] * capacity
        self.deg = [0] * capacity
        self.m = m
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        self.masks[u] |= 1 << v
        self.masks[v] |= 1 << u
        self.deg[u] += 1
        self.deg[v] += 1

    def remove_edge(self, u: int, v: int) -> None:
        self.masks[u] ^= 1 << v
        self.masks[v] ^= 1 << u
        self.deg[u] -= 1
        self.deg[v] -= 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.m) for w in _bits(self.masks[u] >> (u + 1) << (u + 1))]

    def to_graph(self) -> Graph:
        return Graph(self.m, self.edges())

    def open_mask(self) -> int:
        mask = 0
        for u in range(self.m):
            if self.deg[u] < DEGREE:
                mask |= 1 << u
        return mask

    def lowest_open(self) -> int | None:
        for u in range(self.m):
            if self.deg[u] < DEGREE:
                return u
        return None

    def ball(self, v: int, radius: int) -> int:
        seen = front = 1 << v
        for _ in range(radius):
            reach = 0
            for u in _bits(front):
                reach |= self.masks[u]
            front = reach & ~seen
            seen |= reach
        return seen

    def can_join(self, v: int, w: int) -> bool:
        """Adding ``vw`` keeps degrees <= 3 and creates no cycle shorter than girth_min."""
        if self.deg[w] >= DEGREE or self.masks[v] >> w & 1:
            return False
        return not self.ball(v, self.girth_min - 2) >> w & 1

    def pentagon_feasible(self, x: int, y: int) -> bool:
        """Could the edge ``xy`` still end up on two 5-cycles meeting only in ``xy``?

        Only meaningful once ``x`` and ``y`` are saturated.  A pentagon
        ``x a c b y`` is counted as possible when each of its missing edges
        joins two vertices with free slots; a vertex not yet created stands in
        for ``c`` while fewer than `capacity` vertices exist.  The answer is
        exact once no vertex has a free slot.
        """
        masks, deg = self.masks, self.deg
        open_ = self.open_mask()
        room = self.m < self.capacity
        xa = [a for a in _bits(masks[x]) if a != y]
        yb = [b for b in _bits(masks[y]) if b != x]
        if len(xa) != 2 or len(yb) != 2:
            return False
        ends = (1 << x) | (1 << y)

        def middles(a, b):
            ca = masks[a] | (open_ if deg[a] < DEGREE else 0)
            cb = masks[b] | (open_ if deg[b] < DEGREE else 0)
            cands = ca & cb & ~(ends | (1 << a) | (1 << b))
            fresh = room and deg[a] < DEGREE and deg[b] < DEGREE
            return cands, fresh

        a1, a2 = xa
        for b1, b2 in (yb, yb[::-1]):
            if a1 == b1 or a2 == b2:
                continue
            c1, f1 = middles(a1, b1)
            c2, f2 = middles(a2, b2)
            c1 &= ~((1 << a2) | (1 << b2))
            c2 &= ~((1 << a1) | (1 << b1))
            if not (c1 or f1) or not (c2 or f2):
                continue
            if f1 or f2:
                return True
            # Both middles must be existing vertices; they need to differ.
            if c1 != c2 or c1 & (c1 - 1):
                return True
        return False

    def saturated_edges_ok(self) -> bool:
        deg = self.deg
        for u in range(self.m):
            if deg[u] < DEGREE:
                continue
            for w in _bits(self.masks[u] >> (u + 1) << (u + 1)):
                if deg[w] == DEGREE and not self.pentagon_feasible(u, w):
                    return False
        return True


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise SearchBudgetExceeded(f"search exceeded {self.limit} nodes")


def grow(
    pg: PartialGraph,
    emit: Callable[[PartialGraph], None],
    check: Callable[[PartialGraph], bool] | None = None,
    node_limit: int | None = None,
    split_depth: int | None = None,
    frontier: list | None = None,
) -> int:
    """Depth-first extension of `pg`; `emit` receives every state with no open vertex.

    With `split_depth`, states reached at that depth are appended to
    `frontier` as ``(m, edges)`` instead of being explored.  Returns the
    number of search nodes visited.
    """
    budget = _Budget(node_limit)

    def rec(depth: int) -> None:
        budget.tick()
        if split_depth is not None and depth == split_depth:
            frontier.append((pg.m, pg.edges()))
            return
        v = pg.lowest_open()
        if v is None:
            emit(pg)
            return
        start = max(v, pg.masks[v].bit_length() - 1) + 1
        for w in range(start, pg.m):
            if pg.can_join(v, w):
                pg.add_edge(v, w)
                if check is None or check(pg):
                    rec(depth + 1)
                pg.remove_edge(v, w)
        if pg.m < pg.capacity:
            w = pg.m
            pg.m += 1
            pg.add_edge(v, w)
            if check is None or check(pg):
                rec(depth + 1)
            pg.remove_edge(v, w)
            pg.m -= 1

    rec(0)
    return budget.nodes
