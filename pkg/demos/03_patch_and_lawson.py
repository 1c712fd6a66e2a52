"""The patch of a stably locally compact site is presented by a
geometric theory over r/l generators; its models are exactly the
encodings of the located points.  Dropping the point axioms gives the
Lawson theory, whose models are the located subsets."""

from formtop import (dl3, bool4, patch_theory, lawson_theory,
                     model_of_located, enumerate_rl_models,
                     enumerate_located, enumerate_located_points, patch,
                     model_check)
from formtop.theory import g_r, g_l

site = dl3()
th = patch_theory(site)
print("patch theory of dl3:", th.stats())

models = enumerate_rl_models(site, th)
encodings = [model_of_located(site, V)
             for V in enumerate_located_points(site)]
assert set(models) == set(encodings)
print(f"models = located-point encodings: {len(models)} of each")

# flipping any single generator destroys modelhood
m = models[0]
for g in th.generators[:5]:
    assert not model_check(th, m ^ {g})
print("single-generator perturbations all fail the model check")

# the Lawson theory keeps the located subsets that are not points
law = lawson_theory(site)
print(f"lawson models on dl3: {len(enumerate_rl_models(site, law))} "
      f"(located subsets: {len(enumerate_located(site))})")

# on the Boolean fixture the patch is Stone: every r(a) is complemented
P = patch(bool4(), lazy=True)
for a in bool4().base:
    assert P.covers_set([frozenset({g_r(a), g_l((a,))})], [])
    assert P.top_covers([frozenset({g_r(a)}), frozenset({g_l((a,))})])
print("bool4 patch: every r(a) complemented by l({a})")
