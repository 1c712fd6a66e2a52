"""The lattice of inductively generated subtopologies and its perfect
part against the patch."""

import pytest

from formtop.core import subsets
from formtop.fixtures import chain2_spectral, dl3, bool4
from formtop.subtop import (SubTopology, closed_sub, open_sub, kfit,
                            sub_meet, sub_join, sub_leq, sub_cover_eq,
                            is_perfect_sub, psub_site,
                            psub_patch_iso, enumerate_subcovers,
                            perfect_sub_generation_check)


def test_closed_open_are_subtopologies():
    site = dl3()
    for U in subsets(site.base):
        c = closed_sub(site, U)
        o = open_sub(site, frozenset(U))
        assert sub_leq(c, SubTopology(site))   # parent is the least
        assert sub_leq(o, SubTopology(site))


def test_closed_sub_quotients_the_complement():
    site = dl3()
    c = closed_sub(site, {"m"})           # close off m: m <| empty
    assert c.site().covers("m", [])
    assert not site.covers("m", [])


def test_lattice_laws_on_dl3():
    site = dl3()
    subs = [closed_sub(site, U) for U in subsets(site.base)] + \
        [kfit(site, A) for A in subsets(site.base)]
    top_ = sub_meet([], parent=site)
    for s in subs:
        assert sub_leq(s, top_)
        # meet and join are idempotent up to cover equality
        assert sub_cover_eq(sub_meet([s, s], parent=site), s)
        assert sub_cover_eq(sub_join(s, s), s)
    # commutativity of join up to cover equality
    a, b = subs[1], subs[-1]
    assert sub_cover_eq(sub_join(a, b), sub_join(b, a))


def test_closed_join_of_complementary_pair():
    # p meet q is covered by the bottom, so joining their closed parts
    # adds nothing: Closed(p) v Closed(q) = Closed(0) = parent
    site = bool4()
    j = sub_join(closed_sub(site, {"p"}), closed_sub(site, {"q"}))
    assert sub_cover_eq(j, closed_sub(site, {"0"}))
    assert sub_cover_eq(j, SubTopology(site))


def test_kfit_of_empty_is_least():
    site = dl3()
    k = kfit(site, frozenset())
    for a in site.base:
        assert k.site().covers(a, [])


def test_is_perfect_sub_on_finite_sites():
    site = dl3()
    assert is_perfect_sub(closed_sub(site, {"m"}))


def test_psub_site_shape():
    site = chain2_spectral()
    ps = psub_site(site)
    assert len(ps.base) == len(site.base) * len(subsets(site.base))
    assert hasattr(ps, "generators")


def test_psub_patch_iso():
    for site in (chain2_spectral(), dl3()):
        rep = psub_patch_iso(site)
        assert rep["passed"]
        assert all(e["ok"] for e in rep["patch_generators"])
        assert all(e["ok"] for e in rep["psub_generators"])


def test_every_subcover_generated_by_closed_kfit_meets():
    rep = perfect_sub_generation_check(chain2_spectral())
    assert rep["passed"] and not rep["missing"]


def test_subcover_enumeration_bounds():
    site = chain2_spectral()
    tables = enumerate_subcovers(site)
    assert len(tables) >= 2     # at least parent and the degenerate one
    with pytest.raises(ValueError):
        enumerate_subcovers(bool4(), bound=2)
