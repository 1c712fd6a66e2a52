"""Geometric theories, model enumeration, presented and model-backed
sites; the two cover semantics are cross-validated against each other."""

from formtop.theory import (g_plain, g_l, g_r, axiom, simple_theory,
                            model_check, enumerate_models, present,
                            ModelBackedSite, SiteMap)
from formtop.core import subsets
from formtop.fixtures import chain2, dl3, bool4
from formtop.construct import (lawson_theory, model_of_located,
                               enumerate_rl_models)
from formtop.located import enumerate_located


def test_simple_theory_models():
    a, b = g_plain("a"), g_plain("b")
    th = simple_theory([a, b], [([a], [[b]])], "t")
    models = enumerate_models(th)
    assert frozenset() in models
    assert frozenset([b]) in models
    assert frozenset([a, b]) in models
    assert frozenset([a]) not in models
    assert len(models) == 3
    assert model_check(th, frozenset([a, b]))
    assert not model_check(th, frozenset([a]))


def test_empty_disjunction_is_falsum():
    a = g_plain("a")
    th = simple_theory([a], [([a], [])], "t")
    assert enumerate_models(th) == [frozenset()]


def test_presented_vs_model_backed_covers():
    """The materialized presentation and the semantic (model-backed)
    presentation answer the same cover queries."""
    site = chain2()
    th = lawson_theory(site)
    pres = present(th)
    mb = ModelBackedSite(th, enumerate_rl_models(site, th))
    singles = [frozenset({g}) for g in th.generators]
    queries = [(C, [D]) for C in singles for D in singles] + \
        [(C, [D, E]) for C in singles
         for D in singles for E in singles] + \
        [(frozenset(), [D]) for D in singles]
    for C, UU in queries:
        assert pres.covers(C, UU) == mb.covers_set([C], UU), (C, UU)


def test_model_backed_way_below_and_top():
    site = dl3()
    th = lawson_theory(site)
    mb = ModelBackedSite(th, enumerate_rl_models(site, th))
    assert mb.top_covers([frozenset({g_l(())})])      # L1
    # D: no model contains r(a) and l({a})
    assert mb.covers_set([frozenset({g_r("m"), g_l(("m",))})], [])


def test_lawson_models_are_located_encodings():
    for site in (chain2(), dl3(), bool4()):
        th = lawson_theory(site)
        models = set(enumerate_rl_models(site, th))
        encodings = {model_of_located(site, V)
                     for V in enumerate_located(site)}
        assert models == encodings


def test_rl_models_match_raw_backtracking():
    for site in (chain2(), dl3()):
        th = lawson_theory(site)
        assert set(enumerate_rl_models(site, th)) == \
            set(enumerate_models(th))


def test_site_map_identity():
    site = dl3()
    ident = SiteMap(site, site, lambda a: frozenset({a}), name="id")
    for a in site.base:
        assert ident.preimage(a) == frozenset({a})
