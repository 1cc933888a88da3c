import pytest

from graceful_ladders.bounds import (
    NoGracefulColoring,
    best_lower_bound,
    extreme_color_set,
    known_chi_g,
    lb_max_degree,
    lb_regular,
)
from graceful_ladders.graphs import Family, FamilySpec, build_family, cycle, path


def test_max_degree_bound():
    assert lb_max_degree(build_family("TL", 5)) == 5
    assert lb_max_degree(path(2)) == 2
    # interior DL vertices have degree 5
    assert lb_max_degree(build_family("DL", 6)) == 6


def test_regular_bound():
    assert lb_regular(build_family("CL", 7)) == 5
    assert lb_regular(cycle(6)) == 4
    assert lb_regular(build_family("L", 4)) is None
    assert lb_regular(path(2)) is None


def test_best_lower_bound():
    assert best_lower_bound(build_family("CL", 5)) == 5
    assert best_lower_bound(build_family("L", 5)) == 4


def test_known_values():
    assert known_chi_g(FamilySpec("C", 5)).chi_g == 5
    assert known_chi_g(FamilySpec("DL", 7)).chi_g == 9
    assert known_chi_g(FamilySpec("SL", 3)) is None
    assert known_chi_g(FamilySpec("L", 2)).chi_g == 4
    assert known_chi_g(FamilySpec("CL", 12)).chi_g == 5
    assert known_chi_g(FamilySpec("CL", 14)).chi_g == 6
    assert known_chi_g(FamilySpec("DL", 4)) is None


def test_extreme_color_set_examples():
    assert extreme_color_set(5, 4) == {1, 5}
    assert extreme_color_set(7, 4) == {1, 2, 3, 5, 6, 7}
    assert extreme_color_set(8, 6) == {1, 2, 7, 8}
    assert extreme_color_set(6, 2) == set(range(1, 7))


def test_extreme_color_set_rejects_small_palette():
    with pytest.raises(NoGracefulColoring):
        extreme_color_set(4, 4)


@pytest.mark.parametrize("k", range(2, 12))
def test_extreme_color_set_by_counting(k):
    # from color c only max(c-1, k-c) distinct positive distances exist
    for d in range(0, k):
        expect = {c for c in range(1, k + 1) if max(c - 1, k - c) >= d}
        assert extreme_color_set(k, d) == expect


@pytest.mark.parametrize("fam", list(Family))
def test_known_values_respect_lower_bounds(fam):
    for n in range(fam.min_n, 40):
        kv = known_chi_g(FamilySpec(fam, n))
        if kv is not None:
            assert kv.chi_g >= best_lower_bound(build_family(fam, n)), (fam, n)
