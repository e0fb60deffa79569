"""Named graphs and families, with fixed vertex labellings.

Labelling conventions:

* path, cycle: consecutive vertices adjacent.
* complete_bipartite(p, q): sides ``0..p-1`` and ``p..p+q-1``.
* star(n) = K_{1,n-1} with centre 0.
* rK3: copy i on ``3i..3i+2``.
* comb G_k: spine vertex i is ``2i``, its leaf ``2i+1``.
* necklace N_r: copy i of K4-e on ``4i..4i+3`` with ``4i, 4i+1`` the missing
  edge; ``4i+1`` joins ``4(i+1) mod 4r``.
* T-family over H: base vertex v becomes ``3v``, its gadget pair ``3v+1, 3v+2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, bits, build, disjoint_union, is_connected, induced_subgraph


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "kpq"
    STAR = "star"
    DISJOINT_UNION = "union"
    R_K3 = "rk3"
    COMB = "comb"
    NECKLACE = "necklace"
    T_FAMILY = "tfamily"
    TWO_LEAVES = "twoleaves"
    PETERSEN = "petersen"
    EDGELESS = "edgeless"
    GRAPH6 = "g6"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...] = ()
    base: tuple[Graph, ...] = field(default=())
    edge_flags: tuple[bool, ...] = ()
    text: str = ""


def _need(ok: bool, msg: str) -> None:
    if not ok:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return build(n, [(i, j) for j in range(n) for i in range(j)])


def edgeless(n: int) -> Graph:
    _need(n >= 1, "edgeless graph needs n >= 1")
    return build(n, [])


def complete_bipartite(p: int, q: int) -> Graph:
    _need(p >= 1 and q >= 1, "complete bipartite graph needs p, q >= 1")
    return build(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(n: int) -> Graph:
    """K_{1,n-1}."""
    _need(n >= 1, "star needs n >= 1")
    return build(n, [(0, i) for i in range(1, n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build(10, outer + inner + spokes)


def r_k3(r: int) -> Graph:
    _need(r >= 1, "rK3 needs r >= 1")
    return disjoint_union([complete(3)] * r)


def comb(k: int) -> Graph:
    _need(k >= 1, "comb needs k >= 1")
    edges = [(2 * i, 2 * i + 1) for i in range(k)]
    edges += [(2 * i, 2 * i + 2) for i in range(k - 1)]
    return build(2 * k, edges)


def necklace(r: int) -> Graph:
    _need(r >= 2, "necklace needs r >= 2")
    edges = []
    for i in range(r):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d)]
        edges.append((b, 4 * ((i + 1) % r)))
    return build(4 * r, edges)


def t_family(base: Graph, edge_flags: tuple[bool, ...] | None = None) -> Graph:
    """Attach two pendant vertices to every vertex of ``base``; flagged pairs are joined."""
    h = base.n
    if edge_flags is None:
        edge_flags = (False,) * h
    _need(len(edge_flags) == h, f"need {h} gadget flags, got {len(edge_flags)}")
    _need(is_connected(base), "T-family base graph must be connected")
    edges = [(3 * u, 3 * v) for u, v in base.edges()]
    for v in range(h):
        edges += [(3 * v, 3 * v + 1), (3 * v, 3 * v + 2)]
        if edge_flags[v]:
            edges.append((3 * v + 1, 3 * v + 2))
    return build(3 * h, edges)


def two_leaves(tree: Graph) -> Graph:
    """Add two leaves to each vertex."""
    return t_family(tree)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Uniform edge-independent random graph, for fuzzing."""
    return build(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def generate(spec: FamilySpec) -> Graph:
    f, p = spec.family, spec.params

    def arity(k: int) -> None:
        _need(len(p) == k, f"{f.value} takes {k} integer parameter(s), got {len(p)}")

    if f is Family.PATH:
        arity(1)
        return path(p[0])
    if f is Family.CYCLE:
        arity(1)
        return cycle(p[0])
    if f is Family.COMPLETE:
        arity(1)
        return complete(p[0])
    if f is Family.EDGELESS:
        arity(1)
        return edgeless(p[0])
    if f is Family.COMPLETE_BIPARTITE:
        arity(2)
        return complete_bipartite(p[0], p[1])
    if f is Family.STAR:
        arity(1)
        return star(p[0])
    if f is Family.R_K3:
        arity(1)
        return r_k3(p[0])
    if f is Family.COMB:
        arity(1)
        return comb(p[0])
    if f is Family.NECKLACE:
        arity(1)
        return necklace(p[0])
    if f is Family.PETERSEN:
        arity(0)
        return petersen()
    if f is Family.DISJOINT_UNION:
        _need(len(spec.base) >= 1, "union needs at least one part")
        return disjoint_union(spec.base)
    if f is Family.T_FAMILY:
        _need(len(spec.base) == 1, "tfamily needs one base graph")
        return t_family(spec.base[0], spec.edge_flags or None)
    if f is Family.TWO_LEAVES:
        _need(len(spec.base) == 1, "twoleaves needs one base graph")
        return two_leaves(spec.base[0])
    if f is Family.GRAPH6:
        _need(len(spec.base) == 1, "g6 needs one graph")
        return spec.base[0]
    raise ValueError(f"unknown family {f}")


def parse_family(text: str) -> FamilySpec:
    """Parse the textual family form used on the command line.

    Examples: ``necklace:3``, ``comb:9``, ``rk3:4``, ``kpq:3:3``, ``petersen``,
    ``union:cycle:5+path:3``, ``tfamily:path:3:edges=010``, ``twoleaves:path:3``,
    ``g6:A_``.
    """
    from .g6 import parse_graph6

    text = text.strip()
    head, _, rest = text.partition(":")
    try:
        fam = Family(head.lower())
    except ValueError:
        names = ", ".join(m.value for m in Family)
        raise ValueError(f"unknown family {head!r}; expected one of {names}") from None
    if fam is Family.GRAPH6:
        return FamilySpec(fam, (), (parse_graph6(rest),), text=text)
    if fam is Family.DISJOINT_UNION:
        parts = tuple(generate(parse_family(part)) for part in rest.split("+"))
        return FamilySpec(fam, (), parts, text=text)
    if fam in (Family.T_FAMILY, Family.TWO_LEAVES):
        flags: tuple[bool, ...] = ()
        base_text = rest
        if ":edges=" in rest:
            base_text, _, bitstr = rest.rpartition(":edges=")
            _need(set(bitstr) <= {"0", "1"}, f"edges flags must be 0/1, got {bitstr!r}")
            flags = tuple(c == "1" for c in bitstr)
        _need(fam is Family.T_FAMILY or not flags, "twoleaves takes no edge flags")
        base = generate(parse_family(base_text))
        return FamilySpec(fam, (), (base,), flags, text=text)
    try:
        params = tuple(int(x) for x in rest.split(":")) if rest else ()
    except ValueError:
        raise ValueError(f"bad integer parameter in {text!r}") from None
    spec = FamilySpec(fam, params, text=text)
    generate(spec)  # validate eagerly
    return spec


def t_family_decomposition(g: Graph) -> list[tuple[int, int, int]] | None:
    """Triples (v, v', v'') exhibiting ``g`` as a T-family graph, or ``None``.

    For a base of order >= 2 the base vertices are exactly those of degree
    >= 3 and the gadget vertices those of degree <= 2, so the split is forced.
    Order 3 (base K1) admits P3 and K3.
    """
    n = g.n
    if n % 3:
        return None
    adj = g.adj
    if n == 3:
        if not is_connected(g):
            return None
        centre = max(range(3), key=lambda v: (adj[v].bit_count(), -v))
        a, b = (v for v in range(3) if v != centre)
        return [(centre, a, b)]
    base = [v for v in range(n) if adj[v].bit_count() >= 3]
    if 3 * len(base) != n:
        return None
    base_mask = 0
    for v in base:
        base_mask |= 1 << v
    triples = []
    for v in base:
        gadgets = adj[v] & ~base_mask
        if gadgets.bit_count() != 2:
            return None
        a, b = bits(gadgets)
        allowed = 1 << v | 1 << a | 1 << b
        for x in (a, b):
            if (adj[x] | 1 << x) & ~allowed:
                return None
        triples.append((v, a, b))
    if not is_connected(induced_subgraph(g, base_mask)):
        return None
    return triples


def is_in_t_family(g: Graph) -> bool:
    return t_family_decomposition(g) is not None
