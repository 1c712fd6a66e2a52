"""The lower powerlocale (models = splitting subsets), the Scott
topology of the saturated-subset lattice, and the de Groot dual — with
the duality: the Scott topology is the de Groot dual of the lower
powerlocale, and patch is dual-invariant."""

from formtop import (chain2, tri, dl3, chain2_spectral, lower_theory,
                     scott_site, degroot, scott_open_filters,
                     scott_dual_check, enumerate_models,
                     enumerate_saturated, enumerate_located_points,
                     is_splitting)
from formtop.core import subsets

# lower powerlocale: models decode to the splitting subsets
for site in (chain2(), tri()):
    models = enumerate_models(lower_theory(site))
    split = [V for V in subsets(site.base) if is_splitting(site, V)]
    print(f"lower({site.name}): {len(models)} models = "
          f"{len(split)} splitting subsets")

# scott site: base = finite subsets of the base, covers from the
# saturation lattice
sc = scott_site(tri())
print(f"scott(tri): base {len(sc.base)}, "
      f"saturated {len(enumerate_saturated(sc))}")

# de Groot dual of a spectral site: same patch points
for site in (chain2_spectral(), dl3()):
    _, dsite = degroot(site)
    pts, dpts = enumerate_located_points(site), \
        enumerate_located_points(dsite)
    filters = scott_open_filters(enumerate_saturated(site))
    print(f"{site.name}: points {len(pts)} = dual points {len(dpts)}; "
          f"scott-open filters {len(filters)} = "
          f"dual saturated {len(enumerate_saturated(dsite))}")

# the duality theorem, checked two ways
print("scott-as-dual on chain2:", scott_dual_check(chain2()))
print("scott-as-dual on tri:   ", scott_dual_check(tri()))
