"""Finite simple undirected graphs and the structural queries built on them.

Vertices are the integers ``0 .. n-1``.  A :class:`Graph` is immutable once
constructed, so it can be shared freely between worker processes.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence, TextIO

from .exceptions import (
    DisconnectedGraph,
    DuplicateEdge,
    EdgeNotPresent,
    IndexOutOfRange,
    SelfLoop,
)

__all__ = [
    "Graph",
    "UNREACHABLE",
    "ACYCLIC",
    "from_edge_list",
    "bfs_distances",
    "is_connected",
    "require_connected",
    "girth",
    "degree_profile",
    "five_cycles_through_edge",
    "two_pentagon_condition",
    "read_edge_list",
    "write_edge_list",
]

#: Distance reported for vertices in a different component.
UNREACHABLE = None
#: Girth reported for forests.
ACYCLIC = None


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Attributes
    ----------
    n : int
        Number of vertices.
    adj : tuple of tuple of int
        Sorted neighbour list of every vertex.
    edges : tuple of (int, int)
        Every edge once, as ``(u, v)`` with ``u < v``, sorted.
    """

    __slots__ = ("n", "adj", "edges", "_masks")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise IndexOutOfRange(f"a graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise DuplicateEdge(f"edge ({min(u, v)}, {max(u, v)}) given twice")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(sorted(s)) for s in nbrs))
        object.__setattr__(
            self, "edges", tuple((u, v) for u in range(n) for v in self.adj[u] if u < v)
        )
        object.__setattr__(
            self, "_masks", tuple(sum(1 << w for w in row) for row in self.adj)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __reduce__(self):
        return (Graph, (self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``w`` set iff ``w`` is a neighbour)."""
        return self._masks

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise IndexOutOfRange("relabelling must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph`, rejecting self-loops, repeated edges and bad indices."""
    return Graph(n, pairs)


def _check_edge(g: Graph, edge: tuple[int, int]) -> tuple[int, int]:
    x, y = edge
    if not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
        raise EdgeNotPresent(f"({x}, {y}) is not an edge of {g!r}")
    return x, y


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop distances from `source`; :data:`UNREACHABLE` for other components."""
    if not 0 <= source < g.n:
        raise IndexOutOfRange(f"source {source} outside 0..{g.n - 1}")
    dist: list[int | None] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"{g!r} is not connected")


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or :data:`ACYCLIC` for a forest.

    Runs a BFS from every vertex; a non-tree edge ``(u, w)`` met during the
    search closes a walk of length ``d(u) + d(w) + 1`` through the root, and
    the minimum of these over all roots is exactly the girth.
    """
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def degree_profile(g: Graph) -> tuple[int, int, int | None]:
    """``(min degree, max degree, d)`` where ``d`` is None unless `g` is d-regular."""
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    return lo, hi, (lo if lo == hi else None)


def _normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    k = len(cycle)
    candidates = []
    for seq in (list(cycle), list(reversed(cycle))):
        for i in range(k):
            candidates.append(tuple(seq[i:] + seq[:i]))
    return min(candidates)


def _pentagons(g: Graph, x: int, y: int) -> Iterator[tuple[int, int, int, int, int]]:
    # Each 5-cycle through xy reads x, y, b, c, a with a ~ x, b ~ y, c ~ a, b.
    masks = g.masks
    for a in g.adj[x]:
        if a == y:
            continue
        for b in g.adj[y]:
            if b == x or b == a:
                continue
            common = masks[a] & masks[b] & ~((1 << x) | (1 << y))
            while common:
                low = common & -common
                c = low.bit_length() - 1
                common ^= low
                yield (x, y, b, c, a)


def five_cycles_through_edge(g: Graph, edge: tuple[int, int]) -> list[tuple[int, ...]]:
    """All 5-cycles containing `edge`, each normalised to its least rotation/reflection."""
    x, y = _check_edge(g, edge)
    return sorted({_normalize_cycle(p) for p in _pentagons(g, x, y)})


def two_pentagon_condition(g: Graph, edge: tuple[int, int]) -> bool:
    """True iff `edge` lies on two 5-cycles that share only the edge itself."""
    x, y = _check_edge(g, edge)
    found = [frozenset(p) for p in _pentagons(g, x, y)]
    ends = {x, y}
    return any(p & q == ends for p, q in combinations(found, 2))


def read_edge_list(stream: TextIO) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``."""
    rows = [line.split() for line in stream if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a line 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges, found {len(rows) - 1}")
    return Graph(n, ((int(u), int(v)) for u, v in rows[1:]))


def write_edge_list(g: Graph, stream: TextIO) -> None:
    stream.write(f"{g.n} {g.m}\n")
    for u, v in g.edges:
        stream.write(f"{u} {v}\n")
