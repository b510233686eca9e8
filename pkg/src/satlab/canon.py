"""Canonical labeling by partition refinement plus backtracking.

The search follows the usual individualize-refine scheme. Leaves are compared
by their relabeled adjacency rows; the lexicographically largest one is the
canonical form. Automorphisms found when two leaves coincide prune the tree
in two ways: orbit pruning at each node, and jumping back to the node where the
current path left the first (or best) path.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, bits, to_graph6


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Every cell is split by each vertex's neighbor counts into all cells. Sub-cells
    are ordered by those counts, so the result depends only on the labeled
    structure, never on vertex names.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                for key in sorted(groups):
                    new_cells.append(groups[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _individualize(cells: list[list[int]], idx: int, v: int) -> list[list[int]]:
    cell = cells[idx]
    rest = [u for u in cell if u != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


class _Orbits:
    """Union-find over vertices."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.first_path: list[int] | None = None
        self.first_order: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.best_path: list[int] | None = None
        self.best_order: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None
        self.generators: list[list[int]] = []

    def _cert(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        out = []
        adj = self.adj
        for v in order:
            m = 0
            for u in bits(adj[v]):
                m |= 1 << pos[u]
            out.append(m)
        return tuple(out)

    def _add_automorphism(self, order_a: list[int], order_b: list[int]) -> None:
        gamma = [0] * len(order_a)
        for x, y in zip(order_a, order_b):
            gamma[x] = y
        self.generators.append(gamma)

    @staticmethod
    def _common_prefix(a: list[int], b: list[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def _leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        order = [c[0] for c in cells]
        cert = self._cert(order)
        if self.first_cert is None:
            self.first_path, self.first_order, self.first_cert = path, order, cert
            self.best_path, self.best_order, self.best_cert = path, order, cert
            return None
        if cert == self.first_cert:
            self._add_automorphism(self.first_order, order)
            return self._common_prefix(path, self.first_path)
        if cert == self.best_cert:
            self._add_automorphism(self.best_order, order)
            return self._common_prefix(path, self.best_path)
        if cert > self.best_cert:
            self.best_path, self.best_order, self.best_cert = path, order, cert
        return None

    def _orbits_fixing(self, path: list[int]) -> _Orbits:
        orb = _Orbits(self.g.n)
        for gamma in self.generators:
            if all(gamma[p] == p for p in path):
                for x, y in enumerate(gamma):
                    orb.union(x, y)
        return orb

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            return self._leaf(cells, path)
        depth = len(path)
        explored: list[int] = []
        seen_gens = -1
        orb = None
        for w in sorted(cells[target]):
            if explored:
                if seen_gens != len(self.generators):
                    orb = self._orbits_fixing(path)
                    seen_gens = len(self.generators)
                rw = orb.find(w)
                if any(orb.find(e) == rw for e in explored):
                    continue
            child = _refine(self.adj, _individualize(cells, target, w))
            back = self.run(child, path + [w])
            explored.append(w)
            if back is not None and back < depth:
                return back
        return None


def _initial_cells(g: Graph, colors: Sequence[int] | None) -> list[list[int]]:
    if colors is None:
        cells = [list(range(g.n))] if g.n else []
    else:
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            groups.setdefault(c, []).append(v)
        cells = [groups[c] for c in sorted(groups)]
    return _refine(g.adj, cells)


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None):
    """Return ``(order, certificate, generators)``.

    ``order[i]`` is the vertex placed at canonical position ``i``; ``colors``
    optionally fixes an ordered vertex coloring that isomorphisms must respect.
    ``generators`` are automorphisms found during the search (as images lists).
    """
    if g.n == 0:
        return [], (), []
    s = _Search(g)
    s.run(_initial_cells(g, colors), [])
    return s.best_order, s.best_cert, s.generators


def canonical_graph(g: Graph) -> Graph:
    order, _, _ = canonical_labeling(g)
    return g.relabel(order)


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: the graph6 code of the canonically relabeled graph."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def same_orbit(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``g`` maps ``u`` to ``v``."""
    if u == v:
        return True
    cu = [0] * g.n
    cu[u] = -1
    cv = [0] * g.n
    cv[v] = -1
    return canonical_labeling(g, cu)[1] == canonical_labeling(g, cv)[1]
