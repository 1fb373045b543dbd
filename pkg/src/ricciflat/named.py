"""Named fixture graphs.

Labelings are fixed so that curvature reports are reproducible:

``petersen``
    Generalized Petersen graph GP(5, 2): outer 5-cycle on 0..4, spokes
    ``i -- 5+i``, inner pentagram ``5+i -- 5+(i+2)%5``.
``dodecahedron``
    GP(10, 2), same scheme with 10 outer vertices.
``triplex``
    The 12-cycle ``0 -- 1 -- ... -- 11 -- 0`` (vertex ``i`` is ``x_{i+1}``)
    plus the chords x1x7, x2x10, x3x8, x4x12, x5x9, x6x11.
``cycle:n``
    ``C_n`` on ``0 .. n-1`` in cyclic order.
``gp:n:k``
    Generalized Petersen graph GP(n, k).
``complete:n``, ``kbip:a:b``
    Complete and complete bipartite graphs, handy for curvature checks.
"""

from __future__ import annotations

from .exceptions import BadParameter, UnknownName
from .graph import Graph

__all__ = [
    "named_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "generalized_petersen",
    "petersen",
    "triplex",
    "dodecahedron",
    "FLAT_FIXTURES",
]

TRIPLEX_CHORDS = ((1, 7), (2, 10), (3, 8), (4, 12), (5, 9), (6, 11))

#: The three connected cubic girth-5 graphs with zero curvature on every edge.
FLAT_FIXTURES = ("petersen", "triplex", "dodecahedron")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"complete graph needs n >= 1, got {n}")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParameter(f"complete bipartite graph needs positive sides, got {a}, {b}")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def generalized_petersen(n: int, k: int) -> Graph:
    if n < 3 or not 1 <= k < n / 2:
        raise BadParameter(f"GP(n, k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}")
    pairs = []
    for i in range(n):
        pairs.append((i, (i + 1) % n))
        pairs.append((i, n + i))
        pairs.append((n + i, n + (i + k) % n))
    return Graph(2 * n, pairs)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def triplex() -> Graph:
    ring = [(i, (i + 1) % 12) for i in range(12)]
    chords = [(a - 1, b - 1) for a, b in TRIPLEX_CHORDS]
    return Graph(12, ring + chords)


def _int_args(name: str, parts: list[str], count: int) -> list[int]:
    if len(parts) != count:
        raise BadParameter(f"{name!r} expects {count} integer parameter(s)")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise BadParameter(f"non-integer parameter in {name!r}") from None


def named_graph(name: str) -> Graph:
    """Resolve a fixture name such as ``petersen`` or ``cycle:6`` to a graph."""
    head, *params = name.strip().lower().split(":")
    if head == "petersen" and not params:
        return petersen()
    if head in ("dodecahedron", "dodecahedral") and not params:
        return dodecahedron()
    if head == "triplex" and not params:
        return triplex()
    if head == "cycle":
        return cycle_graph(*_int_args(name, params, 1))
    if head == "gp":
        return generalized_petersen(*_int_args(name, params, 2))
    if head == "complete":
        return complete_graph(*_int_args(name, params, 1))
    if head == "kbip":
        return complete_bipartite_graph(*_int_args(name, params, 2))
    raise UnknownName(f"unknown graph name {name!r}")
