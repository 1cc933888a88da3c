import pytest
from hypothesis import given, strategies as st

from graceful_ladders.graphs import (
    Family,
    FamilySpec,
    Graph,
    Vertex,
    build_family,
    cartesian_product,
    cycle,
    from_edges,
    is_regular,
    max_degree,
    path,
    strong_product,
)
from oracles import ladder_edges_by_hand

EDGE_COUNT = {
    "L": lambda n: 3 * n - 2,
    "OL": lambda n: 3 * n - 4,
    "SL": lambda n: 3 * n - 3,
    "TL": lambda n: 4 * n - 3,
    "OTL": lambda n: 4 * n - 5,
    "DL": lambda n: 5 * n - 4,
    "ODL": lambda n: 5 * n - 6,
    "CL": lambda n: 3 * n,
    "P": lambda n: n - 1,
    "C": lambda n: n,
}


def names(g):
    return {frozenset(str(v) for v in e) for e in g.edges}


@pytest.mark.parametrize("code", sorted(EDGE_COUNT))
def test_counts_match_closed_forms(code):
    fam = Family.from_code(code)
    for n in range(fam.min_n, 65):
        g = build_family(fam, n)
        assert g.order == (2 * n if fam.two_rail else n)
        assert g.size == EDGE_COUNT[code](n), (code, n)


@pytest.mark.parametrize("code", ["L", "OL", "SL", "TL", "OTL", "DL", "ODL", "CL"])
def test_edge_sets_match_definitions(code):
    fam = Family.from_code(code)
    for n in range(fam.min_n, 12):
        assert names(build_family(fam, n)) == ladder_edges_by_hand(code, n)


def test_examples():
    l2 = build_family("L", 2)
    assert (l2.order, l2.size) == (4, 4)
    assert (build_family("L", 3).order, build_family("L", 3).size) == (6, 7)
    assert (build_family("DL", 5).order, build_family("DL", 5).size) == (10, 21)
    cl4 = build_family("CL", 4)
    assert (cl4.order, cl4.size, is_regular(cl4)) == (8, 12, 3)


def test_l2_is_c4():
    # L_2 is the 4-cycle x1 x2 y2 y1
    l2 = build_family("L", 2)
    assert all(l2.degree(v) == 2 for v in l2.vertices)
    expected = {frozenset(p) for p in [("x1", "x2"), ("x2", "y2"), ("y2", "y1"), ("y1", "x1")]}
    assert names(l2) == expected


def test_vertex_order_is_interleaved():
    g = build_family("TL", 3)
    assert [str(v) for v in g.vertices] == ["x1", "y1", "x2", "y2", "x3", "y3"]
    assert [str(v) for v in path(3).vertices] == ["x1", "x2", "x3"]


def test_minimum_n_enforced():
    with pytest.raises(ValueError, match="n ≥ 2 required"):
        build_family("SL", 1)
    with pytest.raises(ValueError, match="n ≥ 3"):
        build_family("CL", 2)
    with pytest.raises(ValueError):
        build_family("C", 2)
    assert build_family("CL", 3).size == 9
    assert build_family("P", 1).order == 1


def test_degree_helpers():
    assert max_degree(build_family("TL", 5)) == 4
    assert is_regular(build_family("CL", 6)) == 3
    assert is_regular(build_family("L", 4)) is None
    # interior DL vertex: two rail neighbours, its rung partner and two diagonals
    dl = build_family("DL", 6)
    assert dl.degree(Vertex("x", 3)) == 5
    assert max_degree(dl) == 5


def test_cartesian_products_are_literal_ladders():
    assert cartesian_product(path(4), path(2)) == build_family("L", 4)
    assert cartesian_product(cycle(5), path(2)) == build_family("CL", 5)
    p1 = cartesian_product(path(1), path(2))
    assert (p1.order, p1.size) == (2, 1)
    assert set(p1.vertices) == {Vertex("x", 1), Vertex("y", 1)}


def test_strong_products():
    assert strong_product(path(6), path(2)) == build_family("DL", 6)
    k4 = strong_product(path(2), path(2))
    assert (k4.order, k4.size) == (4, 6)
    p1 = strong_product(path(1), path(2))
    assert (p1.order, p1.size) == (2, 1)


def test_product_with_general_factor_keeps_pairs():
    g = cartesian_product(path(2), path(3))
    assert g.order == 6 and g.size == 7
    assert (Vertex("x", 1), Vertex("x", 2)) in g


@pytest.mark.parametrize("n", range(2, 33))
def test_product_identities(n):
    assert cartesian_product(path(n), path(2)) == build_family("L", n)
    assert strong_product(path(n), path(2)) == build_family("DL", n)
    if n >= 3:
        assert cartesian_product(cycle(n), path(2)) == build_family("CL", n)


@pytest.mark.parametrize("n", range(3, 33))
def test_subgraph_chains(n):
    e = {code: build_family(code, n).edge_set() for code in ("OL", "L", "CL", "TL", "DL")}
    assert e["OL"] < e["L"] < e["CL"]
    assert e["L"] < e["TL"] < e["DL"]


@pytest.mark.parametrize("code", sorted(EDGE_COUNT))
def test_structural_invariants(code):
    fam = Family.from_code(code)
    for n in range(fam.min_n, 20):
        g = build_family(fam, n)
        adj = g.neighbor_indices
        for i, nb in enumerate(adj):
            assert i not in nb
            assert all(i in adj[j] for j in nb)
        # OL_2 has no rungs at all: two disjoint rails
        if (code, n) != ("OL", 2):
            assert g.is_connected(), (code, n)


def test_open_ladder_2_is_disconnected():
    assert not build_family("OL", 2).is_connected()


def test_graph_rejects_bad_input():
    with pytest.raises(ValueError, match="self-loop"):
        from_edges([("a", "a")])
    with pytest.raises(ValueError, match="parallel"):
        from_edges([("a", "b"), ("b", "a")])
    with pytest.raises(ValueError, match="not a vertex"):
        Graph(("a",), (("a", "b"),))
    with pytest.raises(ValueError, match="duplicate"):
        Graph(("a", "a"), ())


def test_family_spec_accepts_codes():
    spec = FamilySpec("otl", 5)
    assert spec.family is Family.OPEN_TRIANGULAR_LADDER
    assert spec.label == "O(TL_5)"
    with pytest.raises(ValueError, match="unknown family"):
        FamilySpec("XX", 3)


@given(st.integers(2, 40), st.sampled_from(["L", "TL", "DL", "CL", "SL"]))
def test_remove_edge_drops_exactly_one(n, code):
    if code == "CL" and n < 3:
        n = 3
    g = build_family(code, n)
    u, v = g.edges[len(g.edges) // 2]
    h = g.remove_edge(u, v)
    assert h.size == g.size - 1 and not h.has_edge(u, v)
