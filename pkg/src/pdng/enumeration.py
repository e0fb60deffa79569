"""Canonical forms and isomorph-free enumeration of small graphs.

The canonical labelling maximises the graph6 adjacency word over all
labellings compatible with an equitable partition refined from the degree
partition.  The search branches by individualising vertices of the first
non-singleton cell; branches on twin vertices are skipped because the
transposition of two twins is an automorphism fixing the current partition.
"""

from __future__ import annotations

from collections.abc import Iterator

from .g6 import emit_graph6
from .graph import Graph, bits, relabel

MAX_ENUMERATION_ORDER = 8


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    changed = True
    while changed:
        changed = False
        for sp in cells:
            out = []
            for cell in cells:
                if not cell & (cell - 1):
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in bits(cell):
                    c = (adj[v] & sp).bit_count()
                    groups[c] = groups.get(c, 0) | (1 << v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[c] for c in sorted(groups))
            if changed:
                cells = out
                break
    return cells


def _word(adj: tuple[int, ...], order: list[int]) -> int:
    word = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            word = word << 1 | (row >> order[i] & 1)
    return word


def canonical_labeling(g: Graph) -> list[int]:
    """A permutation ``perm`` (old -> new) such that ``relabel(g, perm)`` is canonical."""
    adj = g.adj
    n = g.n
    by_degree: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        by_degree[d] = by_degree.get(d, 0) | (1 << v)
    start = [by_degree[d] for d in sorted(by_degree)]
    best_word = -1
    best_order: list[int] = []

    def search(cells: list[int]) -> None:
        nonlocal best_word, best_order
        cells = _refine(adj, cells)
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            w = _word(adj, order)
            if w > best_word:
                best_word, best_order = w, order
            return
        tried: list[int] = []
        for v in bits(cell):
            if any(adj[u] & ~(1 << v) == adj[v] & ~(1 << u) for u in tried):
                continue
            tried.append(v)
            search(cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1 :])

    search(start)
    perm = [0] * n
    for new, old in enumerate(best_order):
        perm[old] = new
    return perm


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Certificate equal for two graphs exactly when they are isomorphic."""
    return emit_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and canonical_form(g) == canonical_form(h)


def _extensions(h: Graph) -> Iterator[Graph]:
    """Graphs on one more vertex in which the new vertex has minimum degree."""
    m = h.n
    degs = [row.bit_count() for row in h.adj]
    for s in range(1 << m):
        d = s.bit_count()
        if any(degs[v] + (s >> v & 1) < d for v in range(m)):
            continue
        adj = [row | ((s >> v & 1) << m) for v, row in enumerate(h.adj)]
        adj.append(s)
        yield Graph._trusted(m + 1, tuple(adj))


def enumerate_all(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of order ``n``.

    Every graph arises from a smaller one by adding a vertex of minimum
    degree, so extending all classes of order n-1 that way and filtering by
    certificate reaches every class.  Output is sorted by certificate.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"built-in enumeration stops at order {MAX_ENUMERATION_ORDER}; "
            f"supply an external graph6 catalog (e.g. nauty's `geng -q {n}`) with --file"
        )
    level = [Graph._trusted(1, (0,))]
    for _ in range(2, n + 1):
        found: dict[bytes, Graph] = {}
        for h in level:
            for g in _extensions(h):
                c = canonical_graph(g)
                key = emit_graph6(c).encode("ascii")
                if key not in found:
                    found[key] = c
        level = [found[k] for k in sorted(found)]
    return level
