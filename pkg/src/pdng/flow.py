"""Unit-capacity maximum flow on small networks held as bitmask arc lists."""

from __future__ import annotations


def unit_max_flow(cap: list[int], sources: int, sinks: int, limit: int | None = None) -> int:
    """Number of arc-disjoint paths from the node set ``sources`` to ``sinks``.

    ``cap[x]`` is the bitmask of heads of unit-capacity arcs leaving ``x``.
    Antiparallel arcs are allowed (an undirected edge is two arcs); flow on
    one cancels flow on the other.  Stops early once ``limit`` paths exist.
    """
    nodes = len(cap)
    flow = [0] * nodes  # flow[x]: heads y with one unit on x->y
    back = [0] * nodes  # back[y]: tails x with one unit on x->y
    value = 0
    while limit is None or value < limit:
        parent = [-1] * nodes
        seen = sources
        frontier = sources
        hit = -1
        while frontier and hit < 0:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                x = low.bit_length() - 1
                out = ((cap[x] & ~flow[x]) | back[x]) & ~seen
                if not out:
                    continue
                seen |= out
                nxt |= out
                while out:
                    lo = out & -out
                    out ^= lo
                    parent[lo.bit_length() - 1] = x
                if nxt & sinks:
                    hit = (nxt & sinks & -(nxt & sinks)).bit_length() - 1
                    break
            frontier = nxt
        if hit < 0:
            break
        y = hit
        while not (sources >> y & 1):
            x = parent[y]
            if flow[y] >> x & 1:  # cancel opposite unit
                flow[y] &= ~(1 << x)
                back[x] &= ~(1 << y)
            else:
                flow[x] |= 1 << y
                back[y] |= 1 << x
            y = x
        value += 1
    return value


def vertex_disjoint_paths(adj: tuple[int, ...], s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t nonadjacent).

    Each vertex v is split into v_in = v and v_out = v + n joined by a unit arc;
    an edge uv becomes arcs u_out -> v_in and v_out -> u_in.
    """
    n = len(adj)
    cap = [0] * (2 * n)
    for v in range(n):
        cap[v] = 1 << (v + n)
        cap[v + n] = adj[v]
    # s leaves through s_out, t is reached at t_in; no flow re-enters s_in.
    cap[s] = 0
    return unit_max_flow(cap, 1 << (s + n), 1 << t, limit)


def edge_disjoint_paths(adj: tuple[int, ...], sources: int, sinks: int, limit: int | None = None) -> int:
    """Maximum number of edge-disjoint paths between two disjoint vertex sets."""
    return unit_max_flow(list(adj), sources, sinks, limit)
