"""Closures and exact minimisers for power domination, domination, zero forcing.

All minimisers search ascending set sizes, so the first set found is of
minimum size.  Within a size, subsets come in colexicographic order of their
vertex indices, which makes witnesses reproducible.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .graph import Graph, bits, closed_neighborhood, components, induced_subgraph


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: int
    subsets_examined: int

    @property
    def witness_list(self) -> list[int]:
        return list(bits(self.witness))


@dataclass(frozen=True)
class TwinsObstruction:
    """A set W, |W| >= 2, with no outside vertex adjacent to exactly one member.

    Every power dominating set meets ``required_hitting_set`` = W u N(W).
    """

    w: int
    required_hitting_set: int
    closed: bool


# closures --------------------------------------------------------------------


def _force(adj: tuple[int, ...], blue: int) -> int:
    """Apply the colour-change rule to a fixed point, scanning in index order."""
    while True:
        before = blue
        m = blue
        while m:
            low = m & -m
            m ^= low
            white = adj[low.bit_length() - 1] & ~blue
            if white and not white & (white - 1):
                blue |= white
        if blue == before:
            return blue


def zf_closure(g: Graph, b: int) -> int:
    """Vertices coloured blue when zero forcing starts from ``b``."""
    return _force(g.adj, b)


def pd_closure(g: Graph, s: int) -> int:
    """PD(S): observe N[S], then force while some observed vertex has one unobserved neighbour."""
    return _force(g.adj, closed_neighborhood(g, s))


def is_power_dominating(g: Graph, s: int) -> bool:
    return pd_closure(g, s) == g.full


def is_dominating(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.full


def is_zero_forcing(g: Graph, b: int) -> bool:
    return zf_closure(g, b) == g.full


# subset enumeration ------------------------------------------------------------


def colex_subsets(items: list[int], k: int) -> Iterator[int]:
    """k-subsets of ``items`` (as vertex bitmasks) in colexicographic order of positions."""
    if k == 0:
        yield 0
        return
    for last in range(k - 1, len(items)):
        top = 1 << items[last]
        for rest in colex_subsets(items[:last], k - 1):
            yield rest | top


def _colex_unions(items: list[int], masks: list[int], k: int) -> Iterator[tuple[int, int]]:
    """Like ``colex_subsets`` but also yields the union of ``masks`` over the subset."""
    if k == 0:
        yield 0, 0
        return
    for last in range(k - 1, len(items)):
        top = 1 << items[last]
        m = masks[last]
        for rest, cover in _colex_unions(items[:last], masks[:last], k - 1):
            yield rest | top, cover | m


# twin classes -----------------------------------------------------------------


def twin_classes(g: Graph, closed: bool) -> list[int]:
    """Maximal classes of vertices with equal closed (or open) neighbourhoods."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        key = g.adj[v] | (1 << v) if closed else g.adj[v]
        groups[key] = groups.get(key, 0) | (1 << v)
    return sorted(groups.values(), key=lambda m: m & -m)


def twins_obstructions(g: Graph) -> list[TwinsObstruction]:
    """Twin classes of size >= 2, each with the set every PD set must meet.

    An outside vertex adjacent to one twin is adjacent to all of them, so no
    outside vertex ever sees exactly one unobserved twin while two remain.
    """
    found = []
    for closed in (True, False):
        for w in twin_classes(g, closed):
            if w.bit_count() >= 2:
                found.append(TwinsObstruction(w, closed_neighborhood(g, w), closed))
    found.sort(key=lambda t: (t.w & -t.w, not t.closed))
    return found


# power domination ---------------------------------------------------------------


def _gamma_p_connected(g: Graph) -> tuple[int, int, int]:
    n = g.n
    if n <= 2:
        return 1, 1, 1
    adj = g.adj
    full = g.full
    # Closed twins have equal N[v], so swapping one for another leaves N[S]
    # and hence PD(S) unchanged: one representative per class suffices.
    reps = [c & -c for c in twin_classes(g, closed=True)]
    cand = [r.bit_length() - 1 for r in reps]
    closed_nb = [adj[v] | (1 << v) for v in cand]
    # Every PD set meets W u N(W) for each twin class W; the representative
    # set obtained by collapsing twins is still a PD set, so it meets it too.
    hits = [t.required_hitting_set for t in twins_obstructions(g)]
    examined = 0
    for k in range(1, len(cand) + 1):
        for s, dom in _colex_unions(cand, closed_nb, k):
            if any(not s & h for h in hits):
                continue
            examined += 1
            if dom == full or _force(adj, dom) == full:
                return k, s, examined
    raise AssertionError("the vertex set always power dominates")


def _by_components(g: Graph, solve) -> SolveResult:
    total = witness = examined = 0
    for part in components(g):
        sub = induced_subgraph(g, part)
        value, wit, ex = solve(sub)
        mapping = list(bits(part))
        total += value
        examined += ex
        for i in bits(wit):
            witness |= 1 << mapping[i]
    return SolveResult(total, witness, examined)


def gamma_p(g: Graph) -> SolveResult:
    """Power domination number with a minimum witness."""
    return _by_components(g, _gamma_p_connected)


def gamma_p_unpruned(g: Graph) -> SolveResult:
    """Plain ascending search over all vertex subsets; reference for the pruned solver."""
    full = g.full
    vertices = list(range(g.n))
    examined = 0
    for k in range(1, g.n + 1):
        for s in colex_subsets(vertices, k):
            examined += 1
            if pd_closure(g, s) == full:
                return SolveResult(k, s, examined)
    raise AssertionError("the vertex set always power dominates")


# domination ---------------------------------------------------------------------


def _greedy_dominating(g: Graph) -> int:
    full = g.full
    dom = chosen = 0
    while dom != full:
        best = max(range(g.n), key=lambda v: (g.closed(v) & ~dom).bit_count())
        chosen |= 1 << best
        dom |= g.closed(best)
    return chosen.bit_count()


def _gamma_connected(g: Graph) -> tuple[int, int, int]:
    n = g.n
    if n == 1:
        return 1, 1, 1
    adj = g.adj
    full = g.full
    # Each leaf must be dominated by itself or its neighbour, and the
    # neighbour's closed neighbourhood contains the leaf's: some minimum
    # dominating set contains every support vertex.  In K_2 keep the lower end.
    forced = 0
    for v in range(n):
        if adj[v].bit_count() == 1:
            u = adj[v].bit_length() - 1
            if adj[u].bit_count() == 1:
                forced |= 1 << min(u, v)
            else:
                forced |= 1 << u
    dom = closed_neighborhood(g, forced)
    cand = [v for v in range(n) if not forced >> v & 1 and (adj[v] | 1 << v) & ~dom]
    closed_nb = [adj[v] | (1 << v) for v in cand]
    f = forced.bit_count()
    upper = _greedy_dominating(g)
    delta_max = max(row.bit_count() for row in adj)
    lower = max(f, -(-n // (delta_max + 1)))
    examined = 0
    for k in range(max(lower - f, 0), upper - f + 1):
        for s, cover in _colex_unions(cand, closed_nb, k):
            examined += 1
            if dom | cover == full:
                return f + k, forced | s, examined
    raise AssertionError("greedy bound is attained by some set")


def gamma(g: Graph) -> SolveResult:
    """Domination number with a minimum witness."""
    return _by_components(g, _gamma_connected)


def gamma_unpruned(g: Graph) -> SolveResult:
    full = g.full
    examined = 0
    for k in range(1, g.n + 1):
        for s in colex_subsets(list(range(g.n)), k):
            examined += 1
            if closed_neighborhood(g, s) == full:
                return SolveResult(k, s, examined)
    raise AssertionError("the vertex set always dominates")


# zero forcing -------------------------------------------------------------------


def _zero_forcing_connected(g: Graph) -> tuple[int, int, int]:
    n = g.n
    if n == 1:
        return 1, 1, 1
    adj = g.adj
    full = g.full
    # The first force needs a blue vertex with all but one neighbour blue,
    # so at least min-degree vertices start blue.
    delta = min(row.bit_count() for row in adj)
    vertices = list(range(n))
    examined = 0
    for k in range(max(delta, 1), n + 1):
        for b in colex_subsets(vertices, k):
            examined += 1
            if _force(adj, b) == full:
                return k, b, examined
    raise AssertionError("the vertex set is always zero forcing")


def zero_forcing(g: Graph) -> SolveResult:
    """Zero forcing number with a minimum witness."""
    return _by_components(g, _zero_forcing_connected)


def zero_forcing_unpruned(g: Graph) -> SolveResult:
    full = g.full
    examined = 0
    for k in range(1, g.n + 1):
        for b in colex_subsets(list(range(g.n)), k):
            examined += 1
            if zf_closure(g, b) == full:
                return SolveResult(k, b, examined)
    raise AssertionError("the vertex set is always zero forcing")


SOLVERS = {"gp": gamma_p, "g": gamma, "z": zero_forcing}
