"""Nordhaus-Gaddum sums and products, hypothesis flags, and the bound catalog.

Each catalog entry becomes one or more ``TheoremCheck`` records (one per
inequality; entries that apply to both G and its complement get a ``_bar``
twin).  A check whose hypothesis fails is kept, tagged not-applicable, and
counts as holding.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .g6 import emit_graph6
from .generators import is_in_t_family
from .graph import Graph, complement, induced_subgraph
from .solvers import SolveResult, gamma, gamma_p, zero_forcing
from .structure import StructureReport, structure


# n excluded from the floor(n/3)+2 bound (they get floor(n/3)+3 instead)
SUM_EXCEPTIONAL_N = frozenset({13, 14, 16, 17, 20})
# n for which the ceil(n/3)+1 bound for connected pairs makes no claim
CONNECTED_EXCEPTIONAL_N = frozenset({12, 13, 14, 15, 16, 17, 18, 20, 21, 24})


class Hyp(str, Enum):
    ALL_COMPONENTS_GE3 = "all-components-ge3"
    BOTH_CONNECTED = "both-connected"
    DIAM_G_GE3 = "diam-g-ge3"
    DIAM_GBAR_GE3 = "diam-gbar-ge3"
    DIAM_BOTH_2 = "diam-both-2"
    KAPPA_G_LE3 = "kappa-g-le3"
    KAPPA_GBAR_LE3 = "kappa-gbar-le3"
    PLANAR_G = "planar-g"
    PLANAR_GBAR = "planar-gbar"
    NOT_SUPER_LAMBDA_G = "not-super-lambda-g"
    NOT_SUPER_LAMBDA_GBAR = "not-super-lambda-gbar"
    CUBIC_NO_K33_COMPONENT = "cubic-no-k33-component"
    HAS_SMALL_COMPONENTS = "has-small-components"
    NO_ISOLATED_EITHER = "no-isolated-either"
    TREE_NOT_SMALL_STAR = "tree-not-small-star"


@dataclass(frozen=True)
class TheoremCheck:
    theorem_id: str
    hypothesis_ok: bool
    bound: int | Fraction | None
    observed: int | None
    holds: bool

    @property
    def tag(self) -> str:
        if not self.hypothesis_ok:
            return "not-applicable"
        return "verified" if self.holds else "VIOLATED"

    @property
    def entry(self) -> int:
        return int(self.theorem_id.split(".")[0])

    def as_dict(self) -> dict:
        return {
            "id": self.theorem_id,
            "applicable": self.hypothesis_ok,
            "bound": _jsonable(self.bound),
            "observed": self.observed,
            "holds": self.holds,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


@dataclass
class NGReport:
    graph: Graph
    n: int
    p: int
    p_bar: int
    g: int | None = None
    g_bar: int | None = None
    z: int | None = None
    z_bar: int | None = None
    small_components: tuple[int, int] = (0, 0)
    flags: frozenset[Hyp] = frozenset()
    checks: list[TheoremCheck] = field(default_factory=list)
    witnesses: dict[str, int] = field(default_factory=dict)

    @property
    def sum_p(self) -> int:
        return self.p + self.p_bar

    @property
    def prod_p(self) -> int:
        return self.p * self.p_bar

    @property
    def graph6(self) -> str:
        return emit_graph6(self.graph)

    def violations(self) -> list[TheoremCheck]:
        return [c for c in self.checks if c.hypothesis_ok and not c.holds]

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "graph6": self.graph6,
            "p": self.p,
            "p_bar": self.p_bar,
            "sum": self.sum_p,
            "prod": self.prod_p,
        }
        for key in ("g", "g_bar", "z", "z_bar"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        out["flags"] = sorted(f.value for f in self.flags)
        out["checks"] = [c.as_dict() for c in self.checks]
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))


def small_component_counts(s: StructureReport) -> tuple[int, int]:
    orders = s.component_orders
    return orders.count(1), orders.count(2)


def _cubic_without_k33(g: Graph, s: StructureReport) -> bool:
    if s.is_regular_of != 3:
        return False
    for part in s.component_parts:
        if part.bit_count() == 6 and induced_subgraph(g, part).num_edges() == 9:
            sub = induced_subgraph(g, part)
            if _is_k33(sub):
                return False
    return True


def _is_k33(g: Graph) -> bool:
    # a cubic 6-vertex graph is K3,3 iff it is triangle-free
    adj = g.adj
    return all(not (adj[u] & adj[v]) for u, v in g.edges())


def _tree_not_small_star(s: StructureReport) -> bool:
    n = s.graph.n
    if n < 4 or not s.is_tree():
        return False
    is_star = s.max_degree == n - 1
    return not (is_star and n in (4, 5))


def hypothesis_flags(g: Graph, gbar: Graph, s: StructureReport, sb: StructureReport) -> frozenset[Hyp]:
    flags = set()
    if min(s.component_orders) >= 3 and min(sb.component_orders) >= 3:
        flags.add(Hyp.ALL_COMPONENTS_GE3)
    if s.connected and sb.connected:
        flags.add(Hyp.BOTH_CONNECTED)
    if s.diameter >= 3:
        flags.add(Hyp.DIAM_G_GE3)
    if sb.diameter >= 3:
        flags.add(Hyp.DIAM_GBAR_GE3)
    if s.diameter == 2 and sb.diameter == 2:
        flags.add(Hyp.DIAM_BOTH_2)
    if s.kappa <= 3:
        flags.add(Hyp.KAPPA_G_LE3)
    if sb.kappa <= 3:
        flags.add(Hyp.KAPPA_GBAR_LE3)
    if s.is_planar:
        flags.add(Hyp.PLANAR_G)
    if sb.is_planar:
        flags.add(Hyp.PLANAR_GBAR)
    if s.is_super_lambda is False:
        flags.add(Hyp.NOT_SUPER_LAMBDA_G)
    if sb.is_super_lambda is False:
        flags.add(Hyp.NOT_SUPER_LAMBDA_GBAR)
    if _cubic_without_k33(g, s):
        flags.add(Hyp.CUBIC_NO_K33_COMPONENT)
    if any(small_component_counts(s)):
        flags.add(Hyp.HAS_SMALL_COMPONENTS)
    if s.min_degree >= 1 and sb.min_degree >= 1:
        flags.add(Hyp.NO_ISOLATED_EITHER)
    if _tree_not_small_star(s):
        flags.add(Hyp.TREE_NOT_SMALL_STAR)
    return frozenset(flags)


class _Catalog:
    """Accumulates checks; ``le``/``ge`` record one inequality each."""

    def __init__(self) -> None:
        self.checks: list[TheoremCheck] = []

    def le(self, cid: str, hyp: bool, observed, bound) -> None:
        self.checks.append(TheoremCheck(cid, bool(hyp), bound, observed, (not hyp) or observed <= bound))

    def ge(self, cid: str, hyp: bool, observed, bound) -> None:
        self.checks.append(TheoremCheck(cid, bool(hyp), bound, observed, (not hyp) or observed >= bound))

    def either(self, cid: str, hyp: bool, observed, bound, alternative: bool) -> None:
        """``observed <= bound`` OR ``alternative``, evaluated as one disjunction."""
        ok = observed <= bound or alternative
        self.checks.append(TheoremCheck(cid, bool(hyp), bound, observed, (not hyp) or ok))


def _components_in_t_or_k33(g: Graph, s: StructureReport) -> int:
    """Number of components that are neither in the T-family nor K3,3."""
    bad = 0
    for part in s.component_parts:
        sub = induced_subgraph(g, part)
        if not (is_in_t_family(sub) or (sub.n == 6 and sub.num_edges() == 9 and _is_k33(sub))):
            bad += 1
    return bad


def evaluate_checks(r: NGReport, s: StructureReport, sb: StructureReport) -> list[TheoremCheck]:
    """The full bound catalog for one (G, complement) pair."""
    n = r.n
    p, pb = r.p, r.p_bar
    tot, prod = p + pb, p * pb
    F = r.flags
    g, gbar = r.graph, complement(r.graph)
    c = _Catalog()
    third, quarter = n // 3, n // 4

    # 0: kappa <= lambda <= delta
    for side, st in (("", s), ("_bar", sb)):
        c.le(f"0.kappa_le_lambda{side}", True, st.kappa, st.lam)
        c.le(f"0.lambda_le_delta{side}", True, st.lam, st.min_degree)
        if st.is_super_lambda:
            c.le(f"0.super_lambda_max_edge_conn{side}", True, st.min_degree, st.lam)

    # 1: Nordhaus-Gaddum bounds over all graphs
    c.ge("1.sum_lower", True, tot, 2)
    c.le("1.sum_upper", True, tot, n + 1)
    c.ge("1.prod_lower", True, prod, 1)
    c.le("1.prod_upper", True, prod, n)

    # 2: p <= floor(n / pbar), and symmetrically
    c.le("2.floor_ratio", True, p, n // pb)
    c.le("2.floor_ratio_bar", True, pb, n // p)

    # 3: neither side has isolated vertices
    no_iso = Hyp.NO_ISOLATED_EITHER in F
    c.le("3.pbar_le_delta", no_iso, pb, s.min_degree)
    c.le("3.p_le_delta_bar", no_iso, p, sb.min_degree)
    c.le("3.delta1_pbar", no_iso and s.min_degree == 1, pb, 1)
    c.le("3.delta1_p", no_iso and sb.min_degree == 1, p, 1)

    # 4: diam >= 3 dominates the complement with two vertices
    c.le("4.diam3", Hyp.DIAM_G_GE3 in F, pb, 2)
    c.le("4.diam3_bar", Hyp.DIAM_GBAR_GE3 in F, p, 2)
    if r.g is not None:
        c.le("4.diam3_gamma", Hyp.DIAM_G_GE3 in F, r.g_bar, 2)
        c.le("4.diam3_gamma_bar", Hyp.DIAM_GBAR_GE3 in F, r.g, 2)

    # 5: diam 2 -> p <= kappa - 1 or pbar <= 2
    c.either("5.kappa_or_two", s.diameter == 2 and sb.min_degree >= 1, p, s.kappa - 1, pb <= 2)
    c.either("5.kappa_or_two_bar", sb.diameter == 2 and s.min_degree >= 1, pb, sb.kappa - 1, p <= 2)

    # 6: planar with diameter 2
    c.le("6.planar_diam2", Hyp.PLANAR_G in F and s.diameter == 2, p, 2)
    c.le("6.planar_diam2_bar", Hyp.PLANAR_GBAR in F and sb.diameter == 2, pb, 2)

    # 7: diameter 2 and not super-lambda
    c.le("7.not_super_lambda", Hyp.NOT_SUPER_LAMBDA_G in F and s.diameter == 2, p, 2)
    c.le("7.not_super_lambda_bar", Hyp.NOT_SUPER_LAMBDA_GBAR in F and sb.diameter == 2, pb, 2)

    # 8: all components of order >= 3 -> p <= floor(n/3); equality forces T u {K3,3}
    ge3 = min(s.component_orders) >= 3
    ge3_bar = min(sb.component_orders) >= 3
    c.le("8.third", ge3, p, third)
    c.le("8.third_bar", ge3_bar, pb, third)
    c.le("8.extremal", ge3 and 3 * p == n, _components_in_t_or_k33(g, s) if ge3 and 3 * p == n else 0, 0)
    c.le(
        "8.extremal_bar",
        ge3_bar and 3 * pb == n,
        _components_in_t_or_k33(gbar, sb) if ge3_bar and 3 * pb == n else 0,
        0,
    )

    # 9: all components >= 3 on both sides plus one of four conditions
    all3 = Hyp.ALL_COMPONENTS_GE3 in F
    cond = (
        {Hyp.DIAM_G_GE3, Hyp.DIAM_GBAR_GE3, Hyp.PLANAR_G, Hyp.PLANAR_GBAR}
        | {Hyp.KAPPA_G_LE3, Hyp.KAPPA_GBAR_LE3, Hyp.NOT_SUPER_LAMBDA_G, Hyp.NOT_SUPER_LAMBDA_GBAR}
    ) & F
    hyp9 = all3 and bool(cond)
    c.le("9.min_le2", hyp9, min(p, pb), 2)
    c.le("9.sum", hyp9, tot, third + 2)
    c.le("9.prod", hyp9, prod, 2 * third)

    # 10: all components >= 3 on both sides
    c.le("10.sum", all3, tot, third + (3 if n in SUM_EXCEPTIONAL_N else 2))

    # 11: both connected
    both = Hyp.BOTH_CONNECTED in F
    c.le("11.sum", both and n not in CONNECTED_EXCEPTIONAL_N, tot, -(-n // 3) + 1)

    # 12: isolated vertices / K2 components (rational bound); needs n >= 3
    for side, st in (("", s), ("_bar", sb)):
        n1, n2 = small_component_counts(st)
        hyp12 = (n1 or n2) and n >= 3
        c.le(f"12.sum{side}", hyp12, tot, 1 + Fraction(n + 2 * n1 + n2, 3))
        c.le(f"12.prod{side}", hyp12, prod, Fraction(n + 2 * n1 + n2, 3))

    # 13: both diameters 2 plus planarity / kappa <= 3 / not super-lambda
    hyp13 = Hyp.DIAM_BOTH_2 in F and bool(
        {Hyp.PLANAR_G, Hyp.PLANAR_GBAR, Hyp.KAPPA_G_LE3, Hyp.KAPPA_GBAR_LE3}
        & F
        | {Hyp.NOT_SUPER_LAMBDA_G, Hyp.NOT_SUPER_LAMBDA_GBAR} & F
    )
    big = n >= 24
    c.le("13.sum", hyp13, tot, quarter + (2 if big else 3))
    c.le("13.prod", hyp13, prod, 2 * quarter + (0 if big else 2))

    # 14: 3-regular without K3,3 components
    for side, g_side, (pp, qq), st in (("", g, (p, pb), s), ("_bar", gbar, (pb, p), sb)):
        hyp14 = n >= 6 and _cubic_without_k33(g_side, st)
        c.le(f"14.p{side}", hyp14, pp, quarter)
        c.le(f"14.pbar{side}", hyp14, qq, 2)
        c.le(f"14.sum{side}", hyp14, tot, quarter + 2)
        c.le(f"14.prod{side}", hyp14, prod, 2 * quarter)

    # 15: trees other than K1,3 and K1,4
    c.le("15.tree_prod", Hyp.TREE_NOT_SMALL_STAR in F, prod, third)
    c.le("15.tree_prod_bar", _tree_not_small_star(sb), prod, third)

    # 16: domination suite
    if r.g is not None:
        gs, gp_ = r.g + r.g_bar, r.g * r.g_bar
        n2 = n >= 2
        c.ge("16.sum_lower", n2, gs, 3)
        c.le("16.sum_upper", n2, gs, n + 1)
        c.ge("16.prod_lower", n2, gp_, 2)
        c.le("16.prod_upper", n2, gp_, n)
        c.le("16.gp_le_g", True, p, r.g)
        c.le("16.gp_le_g_bar", True, pb, r.g_bar)
        c.le("16.gbar_le_delta_plus1", True, r.g_bar, s.min_degree + 1)
        c.le("16.g_le_delta_bar_plus1", True, r.g, sb.min_degree + 1)
        c.le("16.min_degree1", no_iso, gs, n // 2 + 2)
        c.le("16.min_degree7", s.min_degree >= 7 and sb.min_degree >= 7, gs, third + 2)
        c.le("16.diam2_kappa", s.diameter == 2, r.g, s.kappa)
        c.le("16.diam2_kappa_bar", sb.diameter == 2, r.g_bar, sb.kappa)
        c.le("16.diam2_quarter", s.diameter == 2, r.g, quarter + (0 if big else 1))
        c.le("16.diam2_quarter_bar", sb.diameter == 2, r.g_bar, quarter + (0 if big else 1))

    # 17: zero forcing suite
    if r.z is not None:
        zs, zp = r.z + r.z_bar, r.z * r.z_bar
        n2 = n >= 2
        c.ge("17.sum_lower", n2, zs, n - 2)
        c.le("17.sum_upper", n2, zs, 2 * n - 1)
        c.ge("17.prod_lower", n2, zp, n - 3)
        c.le("17.prod_upper", n2, zp, n * n - n)
        c.le("17.gp_le_z", True, p, r.z)
        c.le("17.gp_le_z_bar", True, pb, r.z_bar)

    return c.checks


PARAMS = ("gp", "g", "z")


def ng_report(g: Graph, params: Iterable[str] = ("gp",), checks: bool = True) -> NGReport:
    """Parameters of G and its complement, hypothesis flags, and all checks.

    ``gp`` is always computed; ``g`` and ``z`` only on request.
    """
    params = set(params) | {"gp"}
    unknown = params - set(PARAMS)
    if unknown:
        raise ValueError(f"unknown parameter(s): {sorted(unknown)}")
    gbar = complement(g)
    rp, rpb = gamma_p(g), gamma_p(gbar)
    r = NGReport(g, g.n, rp.value, rpb.value)
    r.witnesses = {"gp": rp.witness, "gp_bar": rpb.witness}
    if "g" in params:
        a, b = gamma(g), gamma(gbar)
        r.g, r.g_bar = a.value, b.value
        r.witnesses.update(g=a.witness, g_bar=b.witness)
    if "z" in params:
        a, b = zero_forcing(g), zero_forcing(gbar)
        r.z, r.z_bar = a.value, b.value
        r.witnesses.update(z=a.witness, z_bar=b.witness)
    s, sb = structure(g), structure(gbar)
    r.small_components = small_component_counts(s)
    if checks:
        r.flags = hypothesis_flags(g, gbar, s, sb)
        r.checks = evaluate_checks(r, s, sb)
    return r


# extremal searches -----------------------------------------------------------


@dataclass(frozen=True)
class Criterion:
    """A predicate on reports plus the hypothesis flags it presupposes."""

    name: str
    test: Callable[[NGReport], bool]
    requires: frozenset[Hyp] = frozenset()

    def __call__(self, r: NGReport) -> bool:
        return self.requires <= r.flags and self.test(r)


def sum_bound_10(n: int) -> int:
    return n // 3 + (3 if n in SUM_EXCEPTIONAL_N else 2)


def sum_bound_11(n: int) -> int:
    return -(-n // 3) + 1


def parse_criterion(text: str, requires: Iterable[Hyp] = ()) -> Criterion:
    """Criteria: ``sum=4``, ``sum=bound10``, ``sum=bound11``, ``prod>2n3``,
    ``prod>n``, and conjunctions such as ``p=3,p_bar=2``.

    ``sum=bound10`` presupposes all-components-ge3, ``sum=bound11``
    both-connected, and ``prod>2n3`` all-components-ge3.
    """
    req = set(requires)
    tests: list[Callable[[NGReport], bool]] = []
    for term in text.split(","):
        term = term.strip()
        if term == "sum=bound10":
            req.add(Hyp.ALL_COMPONENTS_GE3)
            tests.append(lambda r: r.sum_p == sum_bound_10(r.n))
        elif term == "sum=bound11":
            req.add(Hyp.BOTH_CONNECTED)
            tests.append(lambda r: r.n not in CONNECTED_EXCEPTIONAL_N and r.sum_p == sum_bound_11(r.n))
        elif term == "prod>2n3":
            req.add(Hyp.ALL_COMPONENTS_GE3)
            tests.append(lambda r: r.prod_p > 2 * (r.n // 3))
        elif term == "prod>n":
            tests.append(lambda r: r.prod_p > r.n)
        elif "=" in term:
            key, _, val = term.partition("=")
            key = {"sum": "sum_p", "prod": "prod_p", "pbar": "p_bar"}.get(key.strip(), key.strip())
            if key not in ("sum_p", "prod_p", "p", "p_bar", "g", "g_bar", "z", "z_bar", "n"):
                raise ValueError(f"unknown criterion key in {term!r}")
            try:
                want = int(val)
            except ValueError:
                raise ValueError(f"criterion value must be an integer in {term!r}") from None
            tests.append(lambda r, key=key, want=want: getattr(r, key) == want)
        else:
            raise ValueError(f"cannot parse criterion term {term!r}")
    return Criterion(text, lambda r: all(t(r) for t in tests), frozenset(req))


def find_extremal(
    reports: Iterable[NGReport], criterion: Criterion
) -> Iterator[NGReport]:
    """Reports meeting ``criterion``, in input order."""
    for r in reports:
        if criterion(r):
            yield r


__all__ = [
    "Hyp",
    "TheoremCheck",
    "NGReport",
    "SolveResult",
    "ng_report",
    "evaluate_checks",
    "hypothesis_flags",
    "find_extremal",
    "parse_criterion",
    "Criterion",
]
