import itertools

import pytest

from pdng.enumeration import is_isomorphic
from pdng.generators import (
    Family,
    FamilySpec,
    comb,
    complete,
    complete_bipartite,
    cycle,
    generate,
    is_in_t_family,
    necklace,
    parse_family,
    path,
    petersen,
    r_k3,
    star,
    t_family,
    t_family_decomposition,
    two_leaves,
)
from pdng.graph import complement, components, is_connected
from pdng.solvers import gamma_p
from pdng.structure import diameter

from conftest import catalog


def test_necklace_example():
    g = generate(FamilySpec(Family.NECKLACE, (2,)))
    assert g.n == 8 and all(r.bit_count() == 3 for r in g.adj) and is_connected(g)


def test_comb_example():
    g = generate(FamilySpec(Family.COMB, (9,)))
    assert g.n == 18 and sum(r.bit_count() == 1 for r in g.adj) == 9


def test_rk3_example():
    g = r_k3(2)
    assert (g.n, g.num_edges(), len(components(g))) == (6, 6, 2)


def test_t_family_example():
    g = t_family(path(2), (False, False))
    assert g.n == 6 and gamma_p(g).value == 2


def test_named_graphs():
    assert complete_bipartite(3, 3).num_edges() == 9
    s = star(6)
    assert min(r.bit_count() for r in s.adj) == 1 and max(r.bit_count() for r in s.adj) == 5
    p = petersen()
    assert (p.n, p.num_edges(), diameter(p)) == (10, 15, 2)
    assert all(r.bit_count() == 3 for r in p.adj)


@pytest.mark.parametrize(
    "bad",
    [
        FamilySpec(Family.NECKLACE, (1,)),
        FamilySpec(Family.R_K3, (0,)),
        FamilySpec(Family.PATH, (0,)),
        FamilySpec(Family.COMPLETE_BIPARTITE, (0, 3)),
        FamilySpec(Family.CYCLE, (2,)),
        FamilySpec(Family.PATH, (1, 2)),
    ],
)
def test_invalid_parameters(bad):
    with pytest.raises(ValueError):
        generate(bad)


def test_t_family_rejects_disconnected_base():
    with pytest.raises(ValueError):
        t_family(r_k3(2))


def test_recognizer_examples():
    assert is_in_t_family(two_leaves(path(3)))
    assert not is_in_t_family(complete_bipartite(3, 3))
    assert not is_in_t_family(cycle(9))


def test_decomposition_witness():
    g = t_family(cycle(4), (True, False, True, False))
    triples = t_family_decomposition(g)
    assert triples == [(3 * v, 3 * v + 1, 3 * v + 2) for v in range(4)]


@pytest.mark.parametrize("r", range(2, 6))
def test_necklace_values(r):
    g = necklace(r)
    assert g.n == 4 * r and is_connected(g)
    assert gamma_p(g).value == r
    assert gamma_p(complement(g)).value == 2


@pytest.mark.parametrize("s", range(1, 5))
def test_comb_values(s):
    g = comb(3 * s)
    assert gamma_p(g).value == s
    assert gamma_p(complement(g)).value == 1
    if 3 * s >= 3:
        assert is_connected(complement(g))


@pytest.mark.parametrize("r", range(2, 6))
def test_rk3_values(r):
    g = r_k3(r)
    assert gamma_p(g).value + gamma_p(complement(g)).value == r + 2 == g.n // 3 + 2


@pytest.mark.parametrize("h", range(2, 5))
def test_t_family_values(h):
    for base in catalog(h):
        if not is_connected(base):
            continue
        for flags in itertools.product((False, True), repeat=h):
            g = t_family(base, flags)
            assert g.n == 3 * h
            assert gamma_p(g).value == h
            assert is_connected(complement(g))
            assert gamma_p(complement(g)).value == 1
            assert is_in_t_family(g)


@pytest.mark.parametrize("n", [3, 6])
def test_recognizer_matches_construction(n):
    built = [t_family(b, f) for b in catalog(n // 3) if is_connected(b)
             for f in itertools.product((False, True), repeat=n // 3)]
    for g in catalog(n):
        assert is_in_t_family(g) == any(is_isomorphic(g, h) for h in built)


def test_parse_family_forms():
    assert generate(parse_family("necklace:3")) == necklace(3)
    assert generate(parse_family("comb:9")) == comb(9)
    assert generate(parse_family("rk3:4")) == r_k3(4)
    assert generate(parse_family("kpq:3:3")) == complete_bipartite(3, 3)
    assert generate(parse_family("petersen")) == petersen()
    assert generate(parse_family("tfamily:path:3:edges=000")) == t_family(path(3))
    assert generate(parse_family("tfamily:path:3:edges=010")) == t_family(path(3), (False, True, False))
    assert generate(parse_family("twoleaves:path:3")) == two_leaves(path(3))
    assert generate(parse_family("g6:A_")) == complete(2)
    u = generate(parse_family("union:cycle:5+path:3"))
    assert u.n == 8 and [p.bit_count() for p in components(u)] == [5, 3]


@pytest.mark.parametrize("text", ["nope:3", "path:x", "necklace:1", "tfamily:path:3:edges=01", "g6:A~"])
def test_parse_family_errors(text):
    with pytest.raises(ValueError):
        generate(parse_family(text))
