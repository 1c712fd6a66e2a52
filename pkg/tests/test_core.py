"""Saturation engine, way-below, and classification on finite sites."""

from hypothesis import given, settings, strategies as st

from formtop.core import (FiniteSite, brute_force_way_below, canon,
                          enumerate_saturated, subsets, fin)
from formtop.fixtures import FIXTURES, fixture, dl3, bool4, chain2


# ---------------------------------------------------------------------------
# random finite sites for property tests

@st.composite
def sites(draw, max_elems=4):
    n = draw(st.integers(1, max_elems))
    base = [f"x{i}" for i in range(n)]
    le = [(a, b) for a in base for b in base
          if a != b and draw(st.booleans())]
    axioms = []
    for _ in range(draw(st.integers(0, 3))):
        head = base[draw(st.integers(0, n - 1))]
        cov = frozenset(b for b in base if draw(st.booleans()))
        axioms.append((head, cov))
    return FiniteSite(base, le, axioms, name="h")


@settings(max_examples=60, deadline=None)
@given(sites(), st.data())
def test_saturation_is_closure_operator(site, data):
    U = frozenset(a for a in site.base if data.draw(st.booleans()))
    V = U | frozenset(a for a in site.base if data.draw(st.booleans()))
    sU, sV = site.saturate(U), site.saturate(V)
    assert U <= sU                       # extensive
    assert sU <= sV                      # monotone
    assert site.saturate(sU) == sU       # idempotent


@settings(max_examples=40, deadline=None)
@given(sites())
def test_localize_meet_law(site):
    loc = site.localize()
    for U in subsets(site.base):
        for V in subsets(site.base):
            assert loc.saturate(loc.down(U, V)) == \
                loc.saturate(U) & loc.saturate(V)


@settings(max_examples=40, deadline=None)
@given(sites())
def test_way_below_matches_brute_force(site):
    for a in site.base:
        for b in site.base:
            assert site.way_below(a, b) == \
                brute_force_way_below(site, a, b)


# ---------------------------------------------------------------------------
# deterministic checks on the fixtures

def test_saturated_counts():
    expect = {"chain2": 3, "chain2s": 3, "tri": 7, "dl3": 3,
              "bool4": 4, "pomega3": 20}
    for name, want in expect.items():
        assert len(enumerate_saturated(fixture(name))) == want


def test_way_below_reflexive_on_finitary_fixtures():
    for name in FIXTURES:
        site = fixture(name)
        if site.classify()["finitary"]:
            assert all(site.way_below(a, a) for a in site.base)


def test_way_below_via_saturation_collapse():
    # a << b on a finite base collapses to a in sat({b})
    for name in ("dl3", "bool4", "tri"):
        site = fixture(name)
        for a in site.base:
            for b in site.base:
                assert site.way_below(a, b) == \
                    (a in site.saturate({b}))


def test_interpolation():
    site = bool4()
    A = site.interpolate({"p"}, {"1"})
    assert site.way_below_set({"p"}, A)


def test_classification_flags():
    assert dl3().classify()["stably_locally_compact"]
    assert not dl3().classify()["regular"]
    b = bool4().classify()
    assert b["regular"] and b["spectral"] and b["stone"]
    c = chain2().classify()
    assert c["compact"] and not c["regular"]


def test_cover_engine_basics():
    site = dl3()
    assert site.covers("0", [])            # generating axiom 0 <| {}
    assert site.covers("m", ["1"])         # preorder rule
    assert not site.covers("1", ["m"])
    assert site.saturate(["m"]) == fin("0", "m")


def test_canon_and_subsets():
    assert canon(["b", "a", "a"]) == ("a", "b")
    assert len(subsets("ab")) == 4


def test_star_and_well_inside():
    site = bool4()
    # p and q are complementary in the Boolean fixture
    assert "q" in site.star_elt("p")
    assert site.well_inside("p", "p")
    site2 = chain2()
    assert site2.well_inside(1, 1)
    assert not site2.well_inside(0, 0)
