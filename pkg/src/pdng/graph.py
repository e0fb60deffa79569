"""Immutable simple graphs stored as per-vertex adjacency bitmasks.

Vertex sets are plain ``int`` bitmasks throughout the package: bit ``v`` is
set iff vertex ``v`` belongs to the set.  With at most 62 vertices a set
always fits in one machine word.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_ORDER = 62


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex set in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask.  Instances
    are hashable and compare equal iff they have the same order and the
    same labelled edge set.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} has a loop")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._hash = hash((n, adj))

    # construction helpers -------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee the invariants
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = hash((n, adj))
        return g

    # value semantics -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __reduce__(self):
        return Graph, (self.n, self.adj)

    # basic queries -----------------------------------------------------------

    @property
    def full(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def closed(self, v: int) -> int:
        """N[v] as a bitmask."""
        return self.adj[v] | (1 << v)


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated edges collapse to one."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S] = S together with every neighbour of a vertex of S."""
    out = s
    adj = g.adj
    for v in bits(s):
        out |= adj[v]
    return out


def reach(g: Graph, start: int, within: int | None = None) -> int:
    """Vertices reachable from the set ``start`` using only vertices of ``within``."""
    if within is None:
        within = g.full
    adj = g.adj
    seen = start & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[int]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    parts = []
    left = g.full
    while left:
        part = reach(g, left & -left, left)
        parts.append(part)
        left &= ~part
    return parts


def is_connected(g: Graph) -> bool:
    return reach(g, 1) == g.full


def induced_subgraph(g: Graph, w: int) -> Graph:
    """Subgraph induced by ``w``, relabelled in increasing original order."""
    if not w:
        raise ValueError("cannot induce on the empty vertex set")
    keep = list(bits(w))
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & w):
            row |= 1 << index[u]
        adj.append(row)
    return Graph._trusted(len(keep), tuple(adj))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph._trusted(g.n, tuple(adj))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    if not adj:
        raise ValueError("disjoint union of no graphs")
    if offset > MAX_ORDER:
        raise ValueError(f"union has order {offset} > {MAX_ORDER}")
    return Graph._trusted(offset, tuple(adj))
