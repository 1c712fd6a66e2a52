"""Splitting subsets are the suplattice-level points; located subsets
additionally decide every way-below pair, and they correspond
bijectively to cuts (a Dedekind-style pair of a rounded ideal and its
upper part)."""

from formtop import (bool4, tri, enumerate_located, enumerate_points,
                     enumerate_located_points, enumerate_cuts,
                     located_to_cut, cut_to_located, classify_subset)

site = bool4()
print(f"{site.name}: located subsets")
for V in enumerate_located(site):
    print("  ", sorted(V), classify_subset(site, V))

# the two located points are the two atoms' principal filters
print("located points:", [sorted(V)
                          for V in enumerate_located_points(site)])

# cuts biject with located subsets
for V in enumerate_located(site):
    cut = located_to_cut(site, V)
    assert cut_to_located(site, cut) == V
    print(f"  V={sorted(V)}  L={sorted(cut.L)}  U={sorted(cut.U)}")
assert len(enumerate_cuts(site)) == len(enumerate_located(site))

# the triangle fixture has 7 splitting subsets but only 2 points:
# splitting does not imply filtering
t = tri()
print(f"{t.name}: {len(enumerate_located(t))} located subsets, "
      f"{len(enumerate_points(t))} points")
