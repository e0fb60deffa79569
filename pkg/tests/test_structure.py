import itertools
import math

import networkx as nx
import pytest

from pdng.generators import complete, complete_bipartite, cycle, necklace, path, petersen, r_k3, star
from pdng.graph import build, complement, is_connected
from pdng.structure import (
    INFINITE,
    brute_force_vertex_connectivity,
    degree_stats,
    diameter,
    edge_connectivity,
    is_complete,
    is_planar,
    is_regular,
    is_super_lambda,
    structure,
    super_lambda_definitional,
    super_lambda_wang_li,
    vertex_connectivity,
)

from conftest import catalog


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_edge_connectivity(g):
    if g.n == 1 or not is_connected(g):
        return 0
    edges = g.edges()
    for k in range(len(edges) + 1):
        for cut in itertools.combinations(edges, k):
            h = build(g.n, [e for e in edges if e not in cut])
            if not is_connected(h):
                return k
    raise AssertionError


def brute_super_lambda(g):
    """Every minimum edge cut isolates a vertex (and lambda = delta)."""
    lam = brute_edge_connectivity(g)
    delta = degree_stats(g)[0]
    if lam != delta:
        return False
    edges = g.edges()
    for cut in itertools.combinations(edges, lam):
        h = build(g.n, [e for e in edges if e not in cut])
        from pdng.graph import components

        parts = components(h)
        if len(parts) > 1 and min(p.bit_count() for p in parts) >= 2:
            return False
    return True


def test_degree_stats_examples():
    assert degree_stats(complete(4)) == (3, 3)
    assert degree_stats(star(6)) == (1, 5)
    assert degree_stats(necklace(2)) == (3, 3)


def test_diameter_examples():
    assert diameter(complete(5)) == 1
    assert diameter(path(5)) == 4
    assert diameter(petersen()) == 2
    assert diameter(r_k3(2)) == INFINITE and math.isinf(diameter(r_k3(2)))


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete(6)) == 5
    assert vertex_connectivity(r_k3(2)) == 0
    assert vertex_connectivity(petersen()) == 3 == brute_force_vertex_connectivity(petersen())


def test_edge_connectivity_examples():
    assert edge_connectivity(cycle(5)) == 2
    assert edge_connectivity(path(6)) == 1
    k33 = complete_bipartite(3, 3)
    assert edge_connectivity(k33) == 3 == brute_edge_connectivity(k33)


def test_super_lambda_examples():
    assert is_super_lambda(complete(5))
    assert not is_super_lambda(cycle(6))
    assert not brute_super_lambda(cycle(6))
    assert not is_super_lambda(cycle(5))
    assert not super_lambda_wang_li(cycle(5))


def test_super_lambda_rejects_disconnected():
    with pytest.raises(ValueError):
        is_super_lambda(r_k3(2))


def test_planarity_examples():
    assert is_planar(complete(4))
    assert not is_planar(complete(5))
    assert not is_planar(petersen())
    assert not is_planar(complete_bipartite(3, 3))


def test_is_regular_examples():
    assert is_regular(cycle(7), 2)
    assert is_regular(necklace(3), 3)
    assert not is_regular(star(4), 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_vertex_connectivity_matches_brute_force(n):
    for g in catalog(n):
        assert vertex_connectivity(g) == brute_force_vertex_connectivity(g)


@pytest.mark.parametrize("n", range(1, 7))
def test_edge_connectivity_matches_brute_force(n):
    for g in catalog(n):
        assert edge_connectivity(g) == brute_edge_connectivity(g)


@pytest.mark.parametrize("n", range(1, 8))
def test_connectivity_matches_networkx(n):
    for g in catalog(n):
        if n >= 2 and is_connected(g) and not is_complete(g):
            h = to_nx(g)
            assert vertex_connectivity(g) == nx.node_connectivity(h)
            assert edge_connectivity(g) == nx.edge_connectivity(h)


@pytest.mark.parametrize("n", range(2, 7))
def test_definitional_super_lambda_matches_brute_force(n):
    for g in catalog(n):
        if is_connected(g):
            assert super_lambda_definitional(g) == brute_super_lambda(g), g


@pytest.mark.parametrize("n", range(3, 9))
def test_wang_li_matches_definition_on_diameter_two(n):
    for g in catalog(n):
        if diameter(g) == 2:
            assert super_lambda_wang_li(g) == super_lambda_definitional(g)


@pytest.mark.parametrize("n", range(1, 9))
def test_planarity_matches_networkx(n):
    for g in catalog(n):
        for h in (g, complement(g)):
            assert is_planar(h) == nx.check_planarity(to_nx(h))[0]


@pytest.mark.parametrize("n", range(1, 9))
def test_structure_invariants(n):
    for g in catalog(n):
        s = structure(g)
        assert s.kappa <= s.lam <= s.min_degree
        assert (s.diameter == INFINITE) == (len(s.component_parts) > 1)
        if n >= 2:
            assert (s.diameter == 1) == is_complete(g)
        if g.num_edges() > 3 * n - 6 and n >= 3:
            assert not s.is_planar
        if s.is_super_lambda:
            assert s.lam == s.min_degree


def test_super_lambda_does_not_force_maximal_vertex_connectivity():
    # a diameter-2 graph that is super-lambda although kappa < lambda = delta
    from pdng.g6 import parse_graph6

    g = parse_graph6("EQ~o")
    s = structure(g)
    assert s.diameter == 2
    assert s.is_super_lambda and super_lambda_definitional(g)
    assert (s.kappa, s.lam, s.min_degree) == (2, 3, 3)


def test_wang_li_needs_min_degree_two():
    # stars are super-lambda: the only minimum edge cuts isolate a leaf
    for n in range(3, 8):
        assert is_super_lambda(star(n))
        assert brute_super_lambda(star(n))


def test_report_as_dict():
    d = structure(petersen()).as_dict()
    assert d == {
        "min_degree": 3,
        "max_degree": 3,
        "diameter": 2,
        "kappa": 3,
        "lambda": 3,
        "super_lambda": True,
        "planar": False,
        "regular_of": 3,
        "component_orders": [10],
    }
