"""Patch, Lawson, Vietoris, lower powerlocale, Scott, and de Groot
constructions, with their correspondence and duality checks."""

import pytest

from formtop.core import enumerate_saturated, subsets, fin
from formtop.theory import g_r, g_l, enumerate_models
from formtop.located import enumerate_located, enumerate_located_points
from formtop.fixtures import (fixture, chain2, chain2_spectral, tri, dl3,
                              bool4)
from formtop.construct import (patch_theory, lawson_theory,
                               vietoris_theory, lower_theory, patch,
                               lawson, sigma_L,
                               degroot, fjoin, fjoin_literal,
                               scott_open_filters, scott_dual_check,
                               little_fact_check, left_unit_check,
                               model_translations,
                               model_of_located, enumerate_rl_models,
                               canonical_maps, extend_perfect,
                               synthetic_wb, star_family)
from formtop.located import is_splitting


# ---------------------------------------------------------------------------
# theory shapes (frozen expansion counts)

def test_theory_stats_frozen():
    assert patch_theory(bool4()).stats()["axioms"] == 395
    assert patch_theory(bool4()).stats()["generators"] == 20
    assert lawson_theory(bool4()).stats()["axioms"] == 384
    assert vietoris_theory(bool4()).stats()["axioms"] == 499


def test_patch_requires_stably_locally_compact():
    # every fixture here is stably locally compact; a non-regular site
    # is still fine for patch but not for vietoris
    with pytest.raises(ValueError):
        vietoris_theory(dl3())


# ---------------------------------------------------------------------------
# patch and lawson model correspondences

def test_patch_models_are_located_point_encodings():
    for site in (chain2(), dl3(), bool4()):
        th = patch_theory(site)
        models = set(enumerate_rl_models(site, th))
        encodings = {model_of_located(site, V)
                     for V in enumerate_located_points(site)}
        assert models == encodings


def test_lawson_site_counts():
    assert len(lawson(dl3()).models) == 3
    assert len(patch(bool4()).models) == 2


def test_patch_is_boolean_on_spectral_fixture():
    P = patch(bool4(), lazy=True)
    for a in bool4().base:
        meet = frozenset({g_r(a), g_l((a,))})
        assert P.covers_set([meet], [])
        assert P.top_covers([frozenset({g_r(a)}),
                             frozenset({g_l((a,))})])


def test_little_fact():
    rep = little_fact_check(dl3())
    assert rep["passed"] and rep["failures"] == 0


# ---------------------------------------------------------------------------
# vietoris and the translations

def test_vietoris_models_equal_translated_located():
    site = bool4()
    tr = model_translations(site)
    raw = set(enumerate_models(vietoris_theory(site)))
    translated = {tr["loc_to_V"](V) for V in enumerate_located(site)}
    assert raw == translated and len(raw) == 4


def test_translations_mutually_inverse():
    site = bool4()
    tr = model_translations(site)
    for V in enumerate_located(site):
        assert tr["V_to_loc"](tr["loc_to_V"](V)) == V
        mL = model_of_located(site, V)
        assert tr["V_to_L"](tr["L_to_V"](mL)) == mL


# ---------------------------------------------------------------------------
# lower powerlocale

def test_lower_models_are_splitting_subsets():
    expect = {"chain2": 3, "tri": 7, "bool4": 4}
    for name, want in expect.items():
        site = fixture(name)
        models = enumerate_models(lower_theory(site))
        decoded = {frozenset(g[1] for g in m) for m in models}
        split = {frozenset(V) for V in subsets(site.base)
                 if is_splitting(site, V)}
        assert decoded == split and len(models) == want


def test_sigma_L_is_perfect():
    s = sigma_L(dl3())
    assert s.perfect


# ---------------------------------------------------------------------------
# scott site, filter joins, de Groot dual

def test_fjoin_matches_literal_witness_recursion():
    site = bool4()
    fams = [fam for k in (0, 1, 2)
            for fam in __import__("itertools").combinations(
                subsets(site.base), k)]
    for fam in fams:
        assert fjoin(site, list(fam)) == \
            fjoin_literal(site, list(fam)), fam


def test_scott_open_filters_trivialize_to_principal():
    sats = enumerate_saturated(bool4())
    brute = scott_open_filters(sats, bound=12)
    principal = scott_open_filters(sats, bound=0)
    assert len(brute) == len(principal) == len(sats)


def test_degroot_counts():
    for site in (chain2_spectral(), dl3()):
        _, dsite = degroot(site)
        assert len(enumerate_located_points(site)) == \
            len(enumerate_located_points(dsite))
        assert len(scott_open_filters(enumerate_saturated(site))) == \
            len(enumerate_saturated(dsite))


def test_scott_dual_paths():
    full = scott_dual_check(chain2())
    assert full["passed"] and full["mode"] == "full-frame"
    filt = scott_dual_check(tri())
    assert filt["passed"] and filt["mode"] == "filter-count"
    assert filt["counts"] == (15, 15)


# ---------------------------------------------------------------------------
# canonical maps, extension, monad

def test_canonical_maps_perfect():
    maps = canonical_maps(dl3())
    assert set(maps) == {"eps_P", "eps_L", "eps_d", "sigma_L"}
    assert all(m.perfect for m in maps.values())


def test_extend_perfect_identity_roundtrip():
    site = bool4()
    from formtop.theory import SiteMap
    ident = SiteMap(site, site, lambda a: frozenset({a}), name="id")
    ident.perfect = True
    rt, rep = extend_perfect(ident)
    assert rep["passed"]


def test_extend_perfect_rejects_non_regular_source():
    site = dl3()
    from formtop.theory import SiteMap
    ident = SiteMap(site, site, lambda a: frozenset({a}), name="id")
    ident.perfect = True
    with pytest.raises(ValueError):
        extend_perfect(ident)


def test_monad_left_unit():
    rep = left_unit_check(bool4())
    assert rep["passed"]


def test_star_family():
    VV = [fin("a", "b")]
    assert star_family(VV) == {fin(), fin("a"), fin("b"), fin("a", "b")} \
        or fin() in star_family([])


def test_synthetic_wb_base_cases():
    site = bool4()
    assert synthetic_wb(site, "lawson", fin()) is not None
