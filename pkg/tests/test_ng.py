import json
from fractions import Fraction

import pytest

from pdng.enumeration import enumerate_all, is_isomorphic
from pdng.generators import complete, complete_bipartite, necklace, path, r_k3, star, t_family
from pdng.graph import build
from pdng.ng import (
    CONNECTED_EXCEPTIONAL_N,
    SUM_EXCEPTIONAL_N,
    Hyp,
    find_extremal,
    ng_report,
    parse_criterion,
)

from conftest import catalog


def checks_by_id(r):
    return {c.theorem_id: c for c in r.checks}


def test_path_attains_lower_bound():
    r = ng_report(path(6))
    assert (r.p, r.p_bar, r.sum_p) == (1, 1, 2)


def test_complete_attains_upper_bound():
    r = ng_report(complete(5))
    assert (r.p, r.p_bar, r.sum_p) == (1, 5, 6)


def test_two_triangles():
    assert ng_report(r_k3(2)).sum_p == 4 == 6 // 3 + 2


def test_star_k17():
    r = ng_report(star(8))
    c = checks_by_id(r)
    assert (r.p, r.p_bar, r.sum_p, r.prod_p) == (1, 2, 3, 2)
    assert c["1.sum_upper"].hypothesis_ok and c["1.sum_upper"].holds
    # diam(K1,7) = 2 and its complement is disconnected
    assert Hyp.DIAM_GBAR_GE3 in r.flags and Hyp.DIAM_G_GE3 not in r.flags
    # K1,7 is a tree on 8 vertices other than K1,3 and K1,4, so the tree bound applies
    assert c["15.tree_prod"].hypothesis_ok
    assert c["15.tree_prod"].bound == 2 and c["15.tree_prod"].observed == 2 and c["15.tree_prod"].holds


@pytest.mark.parametrize("n", [4, 5])
def test_small_stars_are_excluded_from_tree_bound(n):
    r = ng_report(star(n))
    assert Hyp.TREE_NOT_SMALL_STAR not in r.flags
    assert checks_by_id(r)["15.tree_prod"].tag == "not-applicable"


def test_necklace_three_is_tight_for_cubic_bounds():
    r = ng_report(necklace(3))
    c = checks_by_id(r)
    assert Hyp.CUBIC_NO_K33_COMPONENT in r.flags
    assert (c["14.p"].observed, c["14.p"].bound) == (3, 3)
    assert (c["14.pbar"].observed, c["14.pbar"].bound) == (2, 2)
    assert (c["14.sum"].observed, c["14.sum"].bound) == (5, 5)
    assert (c["14.prod"].observed, c["14.prod"].bound) == (6, 6)
    assert all(c[k].hypothesis_ok and c[k].holds for k in ("14.p", "14.pbar", "14.sum", "14.prod"))


def test_k33_entry_10():
    r = ng_report(complete_bipartite(3, 3))
    c = checks_by_id(r)["10.sum"]
    assert c.hypothesis_ok and c.observed == 4 == c.bound
    assert Hyp.CUBIC_NO_K33_COMPONENT not in r.flags


def test_rk3_four_tight_for_entry_10():
    r = ng_report(r_k3(4))
    c = checks_by_id(r)["10.sum"]
    assert r.sum_p == 6 and c.hypothesis_ok and c.bound == 6


def test_exceptional_sets():
    assert SUM_EXCEPTIONAL_N == {13, 14, 16, 17, 20}
    assert CONNECTED_EXCEPTIONAL_N == {12, 13, 14, 15, 16, 17, 18, 20, 21, 24}


def test_entry_12_uses_exact_rationals():
    g = build(4, [(1, 2), (2, 3), (1, 3)])  # K1 + K3: n1 = 1, n2 = 0
    r = ng_report(g)
    c = checks_by_id(r)
    assert c["12.sum"].bound == 1 + Fraction(6, 3)
    assert c["12.prod"].bound == Fraction(6, 3)
    g = build(5, [(0, 1), (2, 3), (3, 4), (2, 4)])  # K2 + K3: n2 = 1
    c = checks_by_id(ng_report(g))
    assert c["12.prod"].bound == Fraction(6, 3)
    g = build(4, [(0, 1), (1, 2), (0, 2)])  # K3 + K1
    assert r.as_dict()["checks"][0].keys() == {"id", "applicable", "bound", "observed", "holds"}


def test_entry_12_rational_serialization():
    g = build(5, [(1, 2), (2, 3), (3, 4)])  # K1 + P4: bound (5 + 2)/3
    d = ng_report(g).as_dict()
    bounds = {c["id"]: c["bound"] for c in d["checks"]}
    assert bounds["12.prod"] == "7/3"
    assert bounds["12.sum"] == "10/3"


def test_entry_12_fails_for_k2():
    # K2 has n2 = 1 but the complement 2K1 needs both vertices: sum 3 > 1 + 3/3
    r = ng_report(complete(2))
    assert (r.p, r.p_bar) == (1, 2)
    assert 1 + Fraction(2 + 1, 3) < r.sum_p
    assert not checks_by_id(r)["12.sum"].hypothesis_ok  # the catalog requires n >= 3


def test_entry_5_is_a_disjunction():
    # find a graph where the first disjunct fails but the check holds
    seen = False
    for g in catalog(7):
        r = ng_report(g)
        c = checks_by_id(r)["5.kappa_or_two"]
        if c.hypothesis_ok and c.observed > c.bound:
            assert c.holds and r.p_bar <= 2
            seen = True
    assert seen


def test_not_applicable_tag():
    r = ng_report(path(6))
    c = checks_by_id(r)["14.p"]
    assert not c.hypothesis_ok and c.holds and c.tag == "not-applicable"
    assert checks_by_id(r)["1.sum_lower"].tag == "verified"


def test_optional_parameters():
    from pdng.graph import complement
    from pdng.solvers import gamma_unpruned, zero_forcing_unpruned

    r = ng_report(path(5), ("gp", "g", "z"))
    pbar = complement(path(5))
    assert (r.g, r.z) == (2, 1)
    assert (r.g_bar, r.z_bar) == (gamma_unpruned(pbar).value, zero_forcing_unpruned(pbar).value) == (2, 2)
    ids = {c.theorem_id for c in r.checks}
    assert "16.sum_lower" in ids and "17.sum_upper" in ids
    assert "16.sum_lower" not in {c.theorem_id for c in ng_report(path(5)).checks}
    with pytest.raises(ValueError):
        ng_report(path(5), ("chi",))


def test_json_schema():
    d = json.loads(ng_report(necklace(2), ("gp", "g")).to_json())
    assert list(d)[:6] == ["n", "graph6", "p", "p_bar", "sum", "prod"]
    assert {"g", "g_bar", "flags", "checks"} <= d.keys() and "z" not in d
    assert d["flags"] == sorted(d["flags"])


def test_t_family_extremal_characterization():
    g = t_family(path(3), (True, False, True))
    c = checks_by_id(ng_report(g))
    assert c["8.extremal"].hypothesis_ok and c["8.extremal"].observed == 0


def test_find_extremal_order_6():
    crit = parse_criterion("sum=4", [Hyp.ALL_COMPONENTS_GE3])
    found = [r.graph for r in find_extremal((ng_report(g) for g in enumerate_all(6)), crit)]
    assert any(is_isomorphic(g, r_k3(2)) for g in found)
    assert any(is_isomorphic(g, complete_bipartite(3, 3)) for g in found)
    assert max(ng_report(g).sum_p for g in enumerate_all(6) if Hyp.ALL_COMPONENTS_GE3 in ng_report(g).flags) == 4


def test_find_extremal_connected_order_8():
    crit = parse_criterion("sum=4", [Hyp.BOTH_CONNECTED])
    found = list(find_extremal((ng_report(g) for g in catalog(8)), crit))
    assert found and all(Hyp.BOTH_CONNECTED in r.flags and r.sum_p == 4 for r in found)
    assert crit == crit and parse_criterion("sum=bound11").requires == {Hyp.BOTH_CONNECTED}


def test_find_extremal_product_above_n_is_empty():
    assert list(find_extremal((ng_report(g) for g in enumerate_all(5)), parse_criterion("prod>n"))) == []


def test_find_extremal_keeps_input_order():
    reports = [ng_report(g) for g in catalog(5)]
    found = list(find_extremal(reports, parse_criterion("p=1")))
    idx = [reports.index(r) for r in found]
    assert idx == sorted(idx)


def test_criterion_parse_errors():
    for text in ("sum", "foo=1", "sum=x"):
        with pytest.raises(ValueError):
            parse_criterion(text)


@pytest.mark.parametrize("n", range(1, 8))
def test_red_alert_invariant(n):
    for g in catalog(n):
        r = ng_report(g, ("gp", "g", "z"))
        assert r.violations() == [], (r.graph6, r.violations())
        assert r.sum_p == r.p + r.p_bar and r.prod_p == r.p * r.p_bar
