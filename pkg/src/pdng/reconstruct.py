"""Existence and uniqueness searches for graphs that are only known by their properties.

Each target is a filter over a catalog of graphs: the built-in enumerator
for orders up to 8, and graph6 files for larger orders.  External catalogs
are looked up in ``$PDNG_DATA_DIR`` and then in the repository ``data/``
directory.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .enumeration import canonical_form, enumerate_all, is_isomorphic
from .g6 import emit_graph6, read_graphs
from .generators import complete_bipartite, petersen
from .graph import Graph, complement, is_connected
from .solvers import gamma, gamma_p, twins_obstructions
from .structure import diameter, is_planar

CATALOG_ORDER9 = "graph9.g6.gz"
CATALOG_CUBIC10 = "cubic10c.g6"


class MissingCatalog(FileNotFoundError):
    pass


def data_dir() -> Path:
    env = os.environ.get("PDNG_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2] / "data"


def catalog_path(name: str, override: str | Path | None = None) -> Path:
    path = Path(override) if override else data_dir() / name
    if not path.exists():
        hint = {
            CATALOG_ORDER9: "geng -q 9 | gzip > graph9.g6.gz",
            CATALOG_CUBIC10: "geng -q -c -d3 -D3 10 > cubic10c.g6",
        }.get(name, "an order-11 catalog, e.g. geng -q -c 11")
        raise MissingCatalog(
            f"graph6 catalog not found at {path}; generate it with nauty "
            f"({hint}) and set PDNG_DATA_DIR or pass --file"
        )
    return path


class Target(str, Enum):
    S4K3 = "S4K3"
    FIG2 = "FIG2"
    FIG3 = "FIG3"
    CUBIC_DIAM2 = "CUBIC_DIAM2"


@dataclass
class Match:
    graph: Graph
    certificate: bytes
    values: dict[str, object] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "graph6": emit_graph6(self.graph),
            "certificate": self.certificate.decode("ascii"),
            **self.values,
        }


@dataclass
class Reconstruction:
    target: Target
    matches: list[Match]
    scanned: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def _both_connected(g: Graph) -> bool:
    return is_connected(g) and is_connected(complement(g))


def _match(g: Graph, **values) -> Match:
    return Match(g, canonical_form(g), values)


def search_s4k3(graphs: Iterable[Graph]) -> Reconstruction:
    """Planar graphs of diameter 2 with domination number at least 3."""
    matches, scanned = [], 0
    for g in graphs:
        scanned += 1
        if diameter(g) != 2 or gamma(g).value < 3 or not is_planar(g):
            continue
        matches.append(_match(g, gamma=gamma(g).value, gamma_p=gamma_p(g).value))
    rec = Reconstruction(Target.S4K3, matches, scanned)
    if len(matches) != 1:
        rec.problems.append(f"expected exactly one graph, found {len(matches)}")
    for m in matches:
        if m.values["gamma"] != 3 or m.values["gamma_p"] != 2:
            rec.problems.append(f"{emit_graph6(m.graph)}: gamma={m.values['gamma']}, gamma_p={m.values['gamma_p']}")
    return rec


def search_cubic_diam2(graphs: Iterable[Graph]) -> Reconstruction:
    """Connected 3-regular graphs of diameter 2, with the complement's power domination number."""
    k33, pet = complete_bipartite(3, 3), petersen()
    matches, scanned = [], 0
    for g in graphs:
        scanned += 1
        if any(row.bit_count() != 3 for row in g.adj) or diameter(g) != 2:
            continue
        name = "K3,3" if is_isomorphic(g, k33) else "Petersen" if is_isomorphic(g, pet) else None
        matches.append(_match(g, n=g.n, gamma_p_bar=gamma_p(complement(g)).value, name=name))
    rec = Reconstruction(Target.CUBIC_DIAM2, matches, scanned)
    names = [m.values["name"] for m in matches]
    if len(matches) != 5:
        rec.problems.append(f"expected five graphs, found {len(matches)}")
    for want in ("K3,3", "Petersen"):
        if names.count(want) != 1:
            rec.problems.append(f"expected {want} exactly once, found {names.count(want)}")
    others = sorted(m.values["gamma_p_bar"] for m in matches if m.values["name"] != "K3,3")
    if others != [1, 1, 2, 2]:
        rec.problems.append(f"complement power domination numbers of the non-K3,3 graphs: {others}")
    return rec


def search_fig2(graphs: Iterable[Graph]) -> Reconstruction:
    """Order-8 graphs with both G and complement connected and sum 4."""
    matches, scanned = [], 0
    for g in graphs:
        scanned += 1
        if g.n != 8 or not _both_connected(g):
            continue
        p, pb = gamma_p(g).value, gamma_p(complement(g)).value
        if p + pb == 4:
            matches.append(_match(g, p=p, p_bar=pb))
    rec = Reconstruction(Target.FIG2, matches, scanned)
    if not matches:
        rec.problems.append("no order-8 graph with both sides connected and sum 4")
    return rec


def has_two_disjoint_twin_classes(g: Graph) -> bool:
    classes = [t.w for t in twins_obstructions(g)]
    return any(not a & b for i, a in enumerate(classes) for b in classes[i + 1 :])


def search_fig3(graphs: Iterable[Graph]) -> Reconstruction:
    """Order-11 graphs, both sides connected, p=3, p_bar=2, two disjoint twin classes."""
    matches, scanned = [], 0
    for g in graphs:
        scanned += 1
        if g.n != 11 or not _both_connected(g) or not has_two_disjoint_twin_classes(g):
            continue
        p = gamma_p(g).value
        if p != 3:
            continue
        pb = gamma_p(complement(g)).value
        if pb == 2:
            matches.append(_match(g, p=p, p_bar=pb))
    rec = Reconstruction(Target.FIG3, matches, scanned)
    if not matches:
        rec.problems.append("no matching order-11 graph in the supplied catalog")
    return rec


def _cubic_sources(cubic10: Path) -> Iterator[Graph]:
    for n in (6, 8):
        for g in enumerate_all(n):
            if is_connected(g) and all(row.bit_count() == 3 for row in g.adj):
                yield g
    for g in read_graphs(cubic10):
        if g.n != 10:
            raise ValueError(f"{cubic10}: expected order-10 graphs, found order {g.n}")
        if is_connected(g):
            yield g


def reconstruct(target: Target | str, source: str | Path | None = None) -> Reconstruction:
    """Run a reconstruction search; ``source`` overrides the default catalog."""
    target = Target(target)
    if target is Target.S4K3:
        return search_s4k3(read_graphs(catalog_path(CATALOG_ORDER9, source)))
    if target is Target.CUBIC_DIAM2:
        return search_cubic_diam2(_cubic_sources(catalog_path(CATALOG_CUBIC10, source)))
    if target is Target.FIG2:
        graphs = read_graphs(source) if source else enumerate_all(8)
        return search_fig2(graphs)
    if source is None:
        raise MissingCatalog("FIG3 needs an order-11 graph6 catalog: pass --file (e.g. from `geng -q -c 11`)")
    return search_fig3(read_graphs(catalog_path("order-11 catalog", source)))
