import json

import pytest

from graceful_ladders.bounds import best_lower_bound, extreme_color_set, known_chi_g
from graceful_ladders.coloring import VertexColoring, is_graceful, reflect
from graceful_ladders.graphs import Family, FamilySpec, build_family, cycle, from_edges, path
from graceful_ladders.solver import (
    CapReached,
    Certificate,
    SearchConfig,
    SearchInconclusive,
    VertexOrder,
    certify_infeasibility,
    find_graceful_coloring,
    graceful_chromatic_number,
    iter_graceful_colorings,
    replay_certificate,
    search,
)
from oracles import brute_force_chi_g, brute_force_feasible, naive_graceful

SMALL = [(f, n) for f in Family for n in range(f.min_n, 7)
         if (2 * n if f.two_rail else n) <= 12]


def chi(code, n, cfg=None):
    return graceful_chromatic_number(build_family(code, n), cfg).chi_g


# -- single-k feasibility ---------------------------------------------------

def test_feasibility_examples():
    assert find_graceful_coloring(cycle(5), 4) is None
    assert search(cycle(5), 4).completed
    l3 = build_family("L", 3)
    assert find_graceful_coloring(l3, 4) is None
    f = find_graceful_coloring(l3, 5)
    assert f is not None and is_graceful(l3, f).graceful
    p2 = find_graceful_coloring(path(2), 2)
    assert sorted(p2.colors.values()) == [1, 2]


def test_witnesses_are_graceful_under_reflection():
    for code, n in SMALL:
        rep = graceful_chromatic_number(build_family(code, n))
        g = build_family(code, n)
        assert is_graceful(g, rep.witness).graceful
        assert is_graceful(g, reflect(rep.witness)).graceful
        assert naive_graceful(g.edges, rep.witness.colors)


# -- chromatic number ------------------------------------------------------

def test_chromatic_number_examples():
    assert chi("CL", 8) == 5
    assert chi("TL", 4) == 6
    assert chi("L", 3) == 5


# values the solver established below the proven ranges; brute force agrees
PINNED = {
    ("SL", 2): 3, ("SL", 3): 4, ("OL", 2): 2, ("OL", 3): 4, ("TL", 2): 4,
    ("DL", 2): 5, ("DL", 3): 6, ("DL", 4): 7, ("OTL", 3): 5, ("OTL", 4): 6,
    ("ODL", 6): 8, ("CL", 3): 6, ("P", 4): 3,
}


@pytest.mark.parametrize("code,n", sorted(PINNED))
def test_regression_values(code, n):
    assert chi(code, n) == PINNED[(code, n)]


def test_slanting_three_pinned_by_exhaustion():
    g = build_family("SL", 3)
    rep = graceful_chromatic_number(g)
    assert rep.chi_g == 4 and rep.lower_bound == 4 and rep.infeasible_ks == []
    # the degree bound is tight here; brute force confirms 3 colors fail
    assert not brute_force_feasible(g.vertices, g.edges, 3)
    # no palette of 4 is wasted: 5 and 6 are feasible as well
    assert find_graceful_coloring(g, 5) and find_graceful_coloring(g, 6)


BRUTE = [("P", n) for n in range(2, 8)] + [("C", n) for n in range(3, 8)] + [
    ("L", 2), ("L", 3), ("L", 4), ("OL", 3), ("OL", 4), ("SL", 2), ("SL", 3), ("SL", 4),
    ("TL", 2), ("TL", 3), ("OTL", 3), ("DL", 2), ("DL", 3), ("CL", 3), ("CL", 4),
]


@pytest.mark.parametrize("code,n", BRUTE)
def test_agrees_with_brute_force(code, n):
    g = build_family(code, n)
    assert chi(code, n) == brute_force_chi_g(g.vertices, g.edges, k_max=9)


def test_paths_need_four_colors():
    # a graceful 4-coloring of every longer path: 1 2 4 1 2 4 ...
    for n in range(5, 30):
        g = path(n)
        f = VertexColoring(4, {v: (1, 2, 4)[i % 3] for i, v in enumerate(g.vertices)})
        assert is_graceful(g, f).graceful
    for n in range(5, 9):
        g = path(n)
        assert not brute_force_feasible(g.vertices, g.edges, 3)
        assert chi("P", n) == 4


def test_cycles_match_known_values():
    for n in range(4, 9):
        assert chi("C", n) == known_chi_g(FamilySpec("C", n)).chi_g


def test_edgeless_and_disconnected():
    g = from_edges([], vertices=["a"])
    assert graceful_chromatic_number(g).chi_g == 2
    assert chi("OL", 2) == 2


def test_report_records_every_exhausted_k():
    rep = graceful_chromatic_number(build_family("TL", 5))
    assert rep.lower_bound == best_lower_bound(build_family("TL", 5)) == 5
    assert [r.k for r in rep.infeasible_ks] == [5, 6]
    assert all(r.completed for r in rep.infeasible_ks)
    assert [c.k for c in rep.certificates] == [5, 6]
    assert not rep.inconclusive
    doc = rep.to_json()
    assert "elapsed" not in doc and "elapsed" in rep.to_json(timing=True)


def test_cap_reached_carries_certificates():
    with pytest.raises(CapReached) as err:
        graceful_chromatic_number(build_family("TL", 5), SearchConfig(k_max_cap=6))
    assert [c.k for c in err.value.certificates] == [5, 6]


# -- budgets --------------------------------------------------------------

def test_node_budget_is_inconclusive():
    g = build_family("DL", 7)
    res = search(g, 8, SearchConfig(node_budget=50))
    assert res.status == "inconclusive" and not res.completed
    with pytest.raises(SearchInconclusive):
        find_graceful_coloring(g, 8, SearchConfig(node_budget=50))
    with pytest.raises(SearchInconclusive):
        certify_infeasibility(g, 8, SearchConfig(node_budget=50))


def test_budget_makes_report_an_upper_bound():
    # k=5 exhausts in 19 nodes, k=6 needs 121, k=7 finds a witness in 12
    rep = graceful_chromatic_number(build_family("TL", 5), SearchConfig(node_budget=50))
    assert rep.inconclusive and rep.chi_g == 7
    assert [(r.k, r.completed) for r in rep.infeasible_ks] == [(5, True), (6, False)]
    assert [c.k for c in rep.certificates] == [5]
    assert rep.to_json()["upper_bound_only"] is True


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(k_max_cap=1)
    with pytest.raises(ValueError):
        SearchConfig(node_budget=0)
    with pytest.raises(ValueError):
        SearchConfig(time_budget=-1)


# -- certificates ----------------------------------------------------------

@pytest.mark.parametrize("code,n,k", [("TL", 3, 5), ("DL", 5, 7), ("P", 3, 2), ("L", 3, 4), ("C", 5, 4)])
def test_certificates_replay(code, n, k):
    g = build_family(code, n)
    cert = certify_infeasibility(g, k)
    assert cert.completed and cert.k == k
    assert replay_certificate(g, cert)
    again = Certificate.from_json(json.loads(json.dumps(cert.to_json())))
    assert again == cert and again.content_hash == cert.content_hash


def test_certificate_tamper_and_mismatch():
    g = build_family("TL", 3)
    doc = certify_infeasibility(g, 5).to_json()
    bad = dict(doc, nodes_expanded=doc["nodes_expanded"] + 1)
    with pytest.raises(ValueError, match="hash"):
        Certificate.from_json(bad)
    cert = Certificate.from_json(doc)
    assert not replay_certificate(build_family("TL", 4), cert)


def test_certify_feasible_raises():
    with pytest.raises(ValueError):
        certify_infeasibility(build_family("L", 3), 5)


# -- pruning and configuration --------------------------------------------

@pytest.mark.parametrize("code,n", SMALL)
def test_pruning_variants_agree(code, n):
    g = build_family(code, n)
    base = graceful_chromatic_number(g).chi_g
    variants = [
        SearchConfig().without_pruning(),
        SearchConfig(prune_per_vertex_degree=False),
        SearchConfig(forward_checking=False),
        SearchConfig(vertex_order=VertexOrder.DEGREE_DESCENDING),
    ]
    for cfg in variants:
        assert graceful_chromatic_number(g, cfg).chi_g == base


@pytest.mark.parametrize("code,n", SMALL)
def test_extreme_rule_holds_at_every_vertex(code, n):
    # enumerate without the rule, then check it held anyway
    g = build_family(code, n)
    k = chi(code, n)
    cfg = SearchConfig(prune_extreme_colors=False, symmetry_reflection=False)
    ks = (k, k + 1) if g.order <= 8 else (k,)
    allowed = {}
    for kk in ks:
        count = 0
        for f in iter_graceful_colorings(g, kk, cfg):
            count += 1
            for v, c in f.colors.items():
                d = g.degree(v)
                if (kk, d) not in allowed:
                    allowed[kk, d] = extreme_color_set(kk, d)
                assert c in allowed[kk, d], (g.name, v, f.colors)
        assert count > 0


def test_enumeration_counts_pair_up_under_reflection():
    g = build_family("L", 4)
    full = list(iter_graceful_colorings(g, 5, SearchConfig(symmetry_reflection=False)))
    half = list(iter_graceful_colorings(g, 5, SearchConfig()))
    keys = {tuple(sorted((str(v), c) for v, c in f.colors.items())) for f in full}
    assert len(keys) == len(full)
    assert {tuple(sorted((str(v), c) for v, c in reflect(f).colors.items())) for f in full} == keys
    # first vertex colors <= ceil(k/2); the middle color is its own mirror
    assert len(half) >= len(full) // 2


def test_parallel_matches_single():
    for code, n in [("TL", 5), ("CL", 6), ("DL", 5)]:
        g = build_family(code, n)
        one = graceful_chromatic_number(g)
        two = graceful_chromatic_number(g, SearchConfig(jobs=2))
        assert two.chi_g == one.chi_g
        assert [(r.k, r.completed) for r in two.infeasible_ks] == [(r.k, r.completed) for r in one.infeasible_ks]
        assert two.mode == "parallel" and is_graceful(g, two.witness).graceful


def test_single_worker_is_deterministic():
    g = build_family("CL", 7)
    a = graceful_chromatic_number(g).to_json()
    b = graceful_chromatic_number(g).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_monotone_along_subgraphs(n):
    values = {code: chi(code, n) for code in ("L", "TL", "DL")}
    if n >= 3:
        values["CL"] = chi("CL", n)
        assert values["L"] <= values["CL"]
    values["OL"] = chi("OL", n)
    assert values["OL"] <= values["L"] <= values["TL"] <= values["DL"]
