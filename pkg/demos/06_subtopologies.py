"""Inductively generated subtopologies form a lattice; the joins of
closed parts with compactly-fitted parts generate all of them, and the
resulting frame of perfect subtopologies is isomorphic to the patch."""

from formtop import (dl3, closed_sub, open_sub, kfit, psub_site,
                     psub_patch_iso)
from formtop.subtop import (sub_join, sub_meet, sub_cover_eq,
                            perfect_sub_generation_check)
from formtop.fixtures import chain2_spectral

site = dl3()

# the closed part of {m} makes m covered by nothing
c = closed_sub(site, {"m"})
print("closed({m}) covers m by []:", c.covers("m", []))

# the open part of {m} localizes to the open
o = open_sub(site, frozenset({"m"}))
print("open({m}) extra axioms:", list(o.extra))

# kfit(A): the largest subtopology where A stays a compact fitted hull
k = kfit(site, frozenset({"m"}))
print("kfit({m}) extra axioms:", len(k.extra))

# joins and meets up to cover equality
j = sub_join(c, k)
print("closed v kfit == parent:",
      sub_cover_eq(j, sub_meet([], parent=site)))

# every inductively generated subtopology cover is a meet of the
# closed-kfit generators (checked by full closure-operator enumeration)
rep = perfect_sub_generation_check(chain2_spectral())
print("generation check on chain2s:", rep["passed"])

# the perfect-subtopology site against the patch
ps = psub_site(site)
print(f"psub base: {len(ps.base)} pairs (a, A)")
iso = psub_patch_iso(site)
print("psub = patch up to cover equality:", iso["passed"])
