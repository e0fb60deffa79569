"""Degrees, distances, connectivity, super-lambda status, planarity."""

from __future__ import annotations

import math
from functools import cached_property, lru_cache
from itertools import combinations

from .flow import edge_disjoint_paths, vertex_disjoint_paths
from .graph import Graph, bits, components, is_connected, reach
from .planarity import is_planar

INFINITE = math.inf


def degree_stats(g: Graph) -> tuple[int, int]:
    degs = [row.bit_count() for row in g.adj]
    return min(degs), max(degs)


def eccentricity(g: Graph, v: int) -> float:
    adj = g.adj
    seen = 1 << v
    frontier = seen
    dist = 0
    while True:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        dist += 1
    return dist if seen == g.full else INFINITE


def diameter(g: Graph) -> float:
    """Largest distance between two vertices; ``INFINITE`` if disconnected."""
    if not is_connected(g):
        return INFINITE
    return max(eccentricity(g, v) for v in range(g.n))


def is_complete(g: Graph) -> bool:
    return all(row.bit_count() == g.n - 1 for row in g.adj)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G), with kappa(K_n) = n - 1 and 0 for disconnected graphs."""
    n = g.n
    if is_complete(g):
        return n - 1
    if not is_connected(g):
        return 0
    adj = g.adj
    best = min(row.bit_count() for row in adj)
    # Some vertex among the first kappa+1 lies outside a minimum separator,
    # and every vertex before it lies inside, so its partner has larger index.
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if adj[i] >> j & 1:
                continue
            k = vertex_disjoint_paths(adj, i, j, best)
            if k < best:
                best = k
        i += 1
    return best


def edge_connectivity(g: Graph) -> int:
    """lambda(G); 0 for disconnected graphs and for K_1."""
    if g.n == 1 or not is_connected(g):
        return 0
    adj = g.adj
    best = min(row.bit_count() for row in adj)
    for t in range(1, g.n):
        k = edge_disjoint_paths(adj, 1, 1 << t, best)
        if k < best:
            best = k
    return best


def _has_nontrivial_cut(g: Graph, size: int) -> bool:
    """Is there an edge cut of at most ``size`` edges with both sides of order >= 2?

    A side of such a cut in a connected graph with lambda = size is connected,
    so it contains an edge.  Vertex 0 may be assumed on the source side; the
    source side then holds an edge at 0 and the sink side some edge avoiding it.
    """
    adj = g.adj
    edges = g.edges()
    for s2 in bits(adj[0]):
        src = 1 | 1 << s2
        for a, b in edges:
            sink = 1 << a | 1 << b
            if sink & src:
                continue
            if edge_disjoint_paths(adj, src, sink, size + 1) <= size:
                return True
    return False


def super_lambda_definitional(g: Graph) -> bool:
    """Every minimum edge cut isolates a single vertex (and lambda = delta)."""
    if not is_connected(g):
        raise ValueError("super-lambda is only defined for connected graphs")
    lam = edge_connectivity(g)
    delta = min(row.bit_count() for row in g.adj)
    if lam != delta:
        return False
    if g.n < 4:
        return True
    return not _has_nontrivial_cut(g, lam)


def super_lambda_wang_li(g: Graph) -> bool:
    """Super-lambda test valid for connected graphs of diameter 2.

    Not super-lambda iff some clique of size delta consists of vertices of
    degree delta.  For delta = 1 such a "clique" is one leaf, whose cut is
    trivial, so the criterion is only applied for delta >= 2.
    """
    delta = min(row.bit_count() for row in g.adj)
    if delta <= 1:
        return True
    low = 0
    for v, row in enumerate(g.adj):
        if row.bit_count() == delta:
            low |= 1 << v
    return not _has_clique(g.adj, low, delta)


def _has_clique(adj: tuple[int, ...], cand: int, k: int) -> bool:
    if k == 0:
        return True
    if cand.bit_count() < k:
        return False
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if _has_clique(adj, cand & adj[v], k - 1):
            return True
    return False


def is_super_lambda(g: Graph) -> bool:
    if not is_connected(g):
        raise ValueError("super-lambda is only defined for connected graphs")
    if g.n >= 2 and diameter(g) == 2:
        return super_lambda_wang_li(g)
    return super_lambda_definitional(g)


def is_regular(g: Graph, r: int) -> bool:
    return all(row.bit_count() == r for row in g.adj)


def brute_force_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects G or leaves one vertex."""
    n = g.n
    full = g.full
    for k in range(n):
        for cut in combinations(range(n), k):
            mask = 0
            for v in cut:
                mask |= 1 << v
            rest = full & ~mask
            if rest.bit_count() <= 1:
                return k
            if reach(g, rest & -rest, rest) != rest:
                return k
    return n - 1


class StructureReport:
    """Lazily computed structural metrics of one graph."""

    def __init__(self, g: Graph):
        self.graph = g

    @cached_property
    def _degrees(self) -> tuple[int, int]:
        return degree_stats(self.graph)

    @property
    def min_degree(self) -> int:
        return self._degrees[0]

    @property
    def max_degree(self) -> int:
        return self._degrees[1]

    @cached_property
    def component_parts(self) -> list[int]:
        return components(self.graph)

    @cached_property
    def component_orders(self) -> list[int]:
        return sorted(p.bit_count() for p in self.component_parts)

    @property
    def connected(self) -> bool:
        return len(self.component_parts) == 1

    @cached_property
    def diameter(self) -> float:
        if not self.connected:
            return INFINITE
        return max(eccentricity(self.graph, v) for v in range(self.graph.n))

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.graph)

    @cached_property
    def lam(self) -> int:
        return edge_connectivity(self.graph)

    @cached_property
    def is_super_lambda(self) -> bool | None:
        """``None`` for disconnected graphs, where the notion is undefined."""
        if not self.connected:
            return None
        return is_super_lambda(self.graph)

    @cached_property
    def is_planar(self) -> bool:
        return is_planar(self.graph)

    @cached_property
    def is_regular_of(self) -> int | None:
        lo, hi = self._degrees
        return lo if lo == hi else None

    @cached_property
    def num_edges(self) -> int:
        return self.graph.num_edges()

    def is_tree(self) -> bool:
        return self.connected and self.num_edges == self.graph.n - 1

    def as_dict(self) -> dict:
        diam = self.diameter
        return {
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "diameter": None if diam == INFINITE else int(diam),
            "kappa": self.kappa,
            "lambda": self.lam,
            "super_lambda": self.is_super_lambda,
            "planar": self.is_planar,
            "regular_of": self.is_regular_of,
            "component_orders": self.component_orders,
        }


@lru_cache(maxsize=8192)
def structure(g: Graph) -> StructureReport:
    return StructureReport(g)
