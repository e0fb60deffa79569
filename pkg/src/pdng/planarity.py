"""Planarity by direct search for a Kuratowski subdivision.

After deleting vertices of degree at most one and smoothing degree-two
vertices (both preserve planarity), the reduced graph is searched for a
subdivision of K5 or K3,3: choose branch vertices, then route the required
internally disjoint paths by backtracking.  The search is exhaustive and
exponential in the worst case; it is meant for graphs of order at most 16.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, bits


def _reduce(adj: list[int]) -> tuple[list[int], int]:
    """Strip degree <= 1 vertices and smooth degree-2 vertices in place.

    Returns the adjacency list and the mask of surviving vertices.
    """
    alive = (1 << len(adj)) - 1
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            row = adj[v]
            d = row.bit_count()
            if d <= 1:
                for u in bits(row):
                    adj[u] &= ~(1 << v)
                adj[v] = 0
                alive &= ~(1 << v)
                changed = True
            elif d == 2:
                a = (row & -row).bit_length() - 1
                b = row.bit_length() - 1
                adj[a] = (adj[a] & ~(1 << v)) | (1 << b)
                adj[b] = (adj[b] & ~(1 << v)) | (1 << a)
                adj[v] = 0
                alive &= ~(1 << v)
                changed = True
    return adj, alive


def _route(adj: list[int], pairs: list[tuple[int, int]], free: int) -> bool:
    """Can every pair be joined by paths that are internally disjoint and use only ``free``?"""
    if not pairs:
        return True
    a, b = pairs[0]
    rest = pairs[1:]
    if adj[a] >> b & 1 and _route(adj, rest, free):
        return True

    def extend(v: int, avail: int) -> bool:
        # every simple a-b path whose interior is drawn from ``avail``
        for w in bits(adj[v] & avail):
            left = avail & ~(1 << w)
            if adj[w] >> b & 1 and _route(adj, rest, left):
                return True
            if extend(w, left):
                return True
        return False

    return extend(a, free)


def _has_k5(adj: list[int], alive: int) -> bool:
    heavy = [v for v in bits(alive) if adj[v].bit_count() >= 4]
    for branch in combinations(heavy, 5):
        pairs = list(combinations(branch, 2))
        mask = 0
        for v in branch:
            mask |= 1 << v
        if _route(adj, pairs, alive & ~mask):
            return True
    return False


def _has_k33(adj: list[int], alive: int) -> bool:
    cands = [v for v in bits(alive) if adj[v].bit_count() >= 3]
    for six in combinations(cands, 6):
        first, others = six[0], six[1:]
        mask = 0
        for v in six:
            mask |= 1 << v
        for pair in combinations(others, 2):
            side_a = (first,) + pair
            side_b = tuple(v for v in others if v not in pair)
            pairs = [(x, y) for x in side_a for y in side_b]
            if _route(adj, pairs, alive & ~mask):
                return True
    return False


def is_planar(g: Graph) -> bool:
    n = g.n
    if n <= 4:
        return True
    if g.num_edges() > 3 * n - 6:
        return False
    adj, alive = _reduce(list(g.adj))
    m = alive.bit_count()
    if m <= 4:
        return True
    edges = sum(adj[v].bit_count() for v in bits(alive)) // 2
    if edges > 3 * m - 6:
        return False
    return not (_has_k5(adj, alive) or _has_k33(adj, alive))
