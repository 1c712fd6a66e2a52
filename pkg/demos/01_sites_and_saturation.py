"""A finite site is a base of opens, a preorder, and generating cover
axioms; the cover relation a <| U is the least fixpoint closing them
under reflexivity and the preorder rule.  This walk-through builds the
three-element lattice fixture and inspects saturation, way-below, and
the classification flags."""

from formtop import FiniteSite, dl3, bool4, brute_force_way_below

site = dl3()
print(f"base of {site.name}: {site.base}")
print("axioms:", site.axioms)

# saturate {m}: the bottom is covered by the empty family, so it joins
print("sat({m}) =", sorted(site.saturate({"m"})))

# way-below collapses on a finite base: a << b iff a in sat({b});
# the quantifier-chasing brute force agrees
for a in site.base:
    for b in site.base:
        fast = site.way_below(a, b)
        assert fast == brute_force_way_below(site, a, b)
        if fast:
            print(f"  {a} << {b}")

# classification from the definitions: dl3 is stably locally compact
# but not regular (no complement for m); bool4 is Stone
print("dl3:", {k: v for k, v in site.classify().items() if v})
print("bool4:", {k: v for k, v in bool4().classify().items() if v})

# a custom site: two points glued over a shared top
custom = FiniteSite(["t", "u", "v"], [("u", "t"), ("v", "t")],
                    [("t", frozenset({"u", "v"}))], name="glued")
print("custom sat({t}) =", sorted(custom.saturate({"t"})))
