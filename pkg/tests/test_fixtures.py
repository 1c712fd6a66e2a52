"""Fixture corpus: posets, Birkhoff duality, spectral sites, oracles."""

import pytest
from fractions import Fraction

from formtop.fixtures import (FIXTURES, fixture, all_posets, chain_poset,
                              antichain_poset, birkhoff, spectral_site,
                              prime_filters, cantor_oracle,
                              upper_reals_oracle, rational_located,
                              full_spread, stream_point)


def test_fixture_lookup():
    for name in FIXTURES:
        site = fixture(name)
        assert site.name == name
    with pytest.raises(ValueError):
        fixture("nope")


def test_all_posets_counts():
    # labeled posets deduplicated by their relation
    assert len(all_posets(1)) == 1
    assert len(all_posets(2)) == 3
    assert len(all_posets(3)) == 19
    assert len(all_posets(4)) == 219


def test_birkhoff_duality_roundtrip():
    # prime filters of the downset lattice recover the poset size
    for n in (1, 2, 3):
        for P in all_posets(n):
            D = birkhoff(P)
            assert len(prime_filters(D)) == len(P)
    # the downset lattice of an n-chain is an (n+1)-chain
    assert len(birkhoff(chain_poset(3)).carrier) == 4
    assert len(birkhoff(antichain_poset(2)).carrier) == 4


def test_spectral_sites_are_spectral():
    for P in all_posets(2):
        flags = spectral_site(birkhoff(P)).classify()
        assert flags["spectral"]


def test_fixture_classifications():
    assert fixture("bool4").classify()["stone"]
    assert fixture("chain2s").classify()["spectral"]
    assert not fixture("tri").classify()["spectral"]
    assert fixture("pomega3").classify()["stably_locally_compact"]


def test_cantor_oracle():
    c = cantor_oracle()
    assert c.le("01", "0")
    assert not c.le("0", "01")
    assert c.cover_fin("0", ["00", "01"])
    assert not c.cover_fin("0", ["00"])
    spread = full_spread()
    assert spread("0110")
    pt = stream_point(lambda i: 0)
    assert pt("000") and not pt("001")


def test_upper_reals_oracle():
    u = upper_reals_oracle()
    assert u.le(Fraction(0), Fraction(1))
    assert u.cover_fin(Fraction(0), [Fraction(1, 12)])
    V = rational_located(Fraction(1, 2))
    assert V(Fraction(1)) and not V(Fraction(0))
