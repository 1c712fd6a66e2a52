"""Splitting subsets, points, located subsets, and cuts."""

import pytest
from fractions import Fraction

from formtop.core import subsets
from formtop.located import (is_splitting, is_splitting_brute, is_point,
                             is_located, classify_subset,
                             enumerate_located, enumerate_points,
                             enumerate_located_points, enumerate_cuts,
                             located_to_cut, cut_to_located, cut_check,
                             cut_is_located_point, bounded_located_check)
from formtop.fixtures import (fixture, dl3, bool4, tri,
                              upper_reals_oracle, rational_located)


COUNTS = {
    # name: (located, points, located points, cuts)
    "chain2": (3, 2, 2, 3),
    "chain2s": (3, 2, 2, 3),
    "tri": (7, 2, 2, 7),
    "dl3": (3, 2, 2, 3),
    "bool4": (4, 2, 2, 4),
    "pomega3": (20, 8, 8, 20),
}


def test_enumeration_counts():
    for name, (loc, pts, lpts, cuts) in COUNTS.items():
        site = fixture(name)
        assert len(enumerate_located(site)) == loc
        assert len(enumerate_points(site)) == pts
        assert len(enumerate_located_points(site)) == lpts
        assert len(enumerate_cuts(site)) == cuts


def test_splitting_fast_path_matches_brute():
    for name in ("chain2", "tri", "dl3", "bool4"):
        site = fixture(name)
        for V in subsets(site.base):
            assert is_splitting(site, V) == is_splitting_brute(site, V)


def test_located_points_are_points_and_located():
    site = bool4()
    for V in enumerate_located_points(site):
        assert is_point(site, V) and is_located(site, V)
        c = classify_subset(site, V)
        assert c["splitting"] and c["point"] and c["located"]


def test_tri_splitting_subsets_mostly_fail_filtering():
    # the triangle fixture: all 7 splitting subsets are located, but
    # only two of them are filtering, hence points
    site = tri()
    split = [V for V in subsets(site.base) if is_splitting(site, V)]
    assert len(split) == 7
    assert len(enumerate_located(site)) == 7
    assert len(enumerate_points(site)) == 2


def test_cut_roundtrips():
    for name in COUNTS:
        site = fixture(name)
        for V in enumerate_located(site):
            cut = located_to_cut(site, V)
            ok, why = cut_check(site, cut)
            assert ok, why
            assert cut_to_located(site, cut) == V
        for cut in enumerate_cuts(site):
            assert located_to_cut(site, cut_to_located(site, cut)) == cut


def test_cut_of_point_is_located_point():
    site = dl3()
    for V in enumerate_located_points(site):
        assert cut_is_located_point(site, located_to_cut(site, V))


def test_located_to_cut_rejects_non_splitting():
    site = tri()
    bad = next(V for V in subsets(site.base)
               if not is_splitting(site, V))
    with pytest.raises(ValueError):
        located_to_cut(site, bad)


def test_bounded_located_on_upper_reals():
    u = upper_reals_oracle()
    V = rational_located(Fraction(1, 2))
    grid = [Fraction(k, 4) for k in range(-2, 6)]
    tests = [(b, a) for a in grid for b in u.wb_stage(a, 4)]
    rep = bounded_located_check(u, V, tests=tests, rounded_tests=grid,
                                depth=5)
    assert rep["passed"] and rep["evidence_only"]
