"""Canonical labeling by partition refinement and exhaustive individualization.

The canonical form of a graph is the graph6 string of the relabeled graph whose
upper-triangle adjacency bit string is least among all leaves of the
individualization-refinement tree.  Every step of the tree depends only on the
cell structure and neighbour counts, never on vertex names, so the set of leaf
encodings, and hence their minimum, is a graph invariant.  Automorphisms
discovered at equal leaves prune sibling branches in the same orbit.

This is meant for small graphs (a few dozen vertices), not as a general nauty
replacement.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph
from .graph6 import emit_graph6

__all__ = ["canonical_labeling", "canonical_form", "canonical_graph", "is_isomorphic"]


def _refine(cells: list[list[int]], masks: tuple[int, ...]) -> list[list[int]]:
    """Coarsest equitable refinement of the ordered partition `cells`.

    Splitters are taken from a FIFO queue and split cells are replaced in
    place by their pieces ordered by neighbour count, so the resulting cell
    order depends only on the structure of the graph.
    """
    n_cells = len(cells)
    n = sum(len(c) for c in cells)
    queue = deque(cells)
    live = {id(c) for c in cells}
    while queue and n_cells < n:
        splitter = queue.popleft()
        if id(splitter) not in live:
            continue
        smask = 0
        for v in splitter:
            smask |= 1 << v
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((masks[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            live.discard(id(cell))
            for count in sorted(groups):
                piece = groups[count]
                out.append(piece)
                live.add(id(piece))
                queue.append(piece)
            n_cells += len(groups) - 1
        cells = out
    return cells


def _encode(order: list[int], masks: tuple[int, ...]) -> int:
    """Upper-triangle bits of the graph relabeled so that ``order[i]`` becomes ``i``."""
    code = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            code = code << 1 | (mj >> order[i] & 1)
    return code


class _Search:
    def __init__(self, g: Graph):
        self.masks = g.masks
        self.n = g.n
        self.best_code: int | None = None
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def leaf(self, cells: list[list[int]]) -> None:
        order = [c[0] for c in cells]
        code = _encode(order, self.masks)
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_order = code, order
        elif code == self.best_code:
            # Two leaves with equal encodings differ by an automorphism.
            sigma = [0] * self.n
            for a, b in zip(self.best_order, order):
                sigma[a] = b
            self.autos.append(sigma)

    def orbits(self, cell: list[int], fixed: list[int]) -> dict[int, int]:
        """Map each vertex of `cell` to the least member of its orbit under the
        stored automorphisms that fix every vertex in `fixed`."""
        parent = {v: v for v in cell}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for sigma in self.autos:
            if any(sigma[f] != f for f in fixed):
                continue
            for v in cell:
                w = sigma[v]
                if w in parent:
                    rv, rw = find(v), find(w)
                    if rv != rw:
                        parent[max(rv, rw)] = min(rv, rw)
        return {v: find(v) for v in cell}

    def run(self, cells: list[list[int]], fixed: list[int]) -> None:
        cells = _refine(cells, self.masks)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self.leaf(cells)
            return
        cell = sorted(cells[target])
        done: list[int] = []
        for v in cell:
            if done and self.autos:
                orbit = self.orbits(cell, fixed)
                if orbit[v] in {orbit[w] for w in done}:
                    continue
            rest = [w for w in cells[target] if w != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1:], fixed + [v])
            done.append(v)


def _initial_cells(g: Graph) -> list[list[int]]:
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    return [by_degree[d] for d in sorted(by_degree)]


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` with ``g.relabel(perm)`` equal to the canonical graph."""
    search = _Search(g)
    search.run(_initial_cells(g), [])
    perm = [0] * g.n
    for new, old in enumerate(search.best_order):
        perm[old] = new
    return perm


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Byte string identifying the isomorphism class of `g`.

    Equal for two graphs exactly when they are isomorphic; byte-wise ordering
    gives a labeling-independent total order on classes of the same order.
    """
    return emit_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
