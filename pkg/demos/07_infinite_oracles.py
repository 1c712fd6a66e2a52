"""Infinite sites are reached through bounded-evidence oracles: the
upper reals over the rationals and Cantor space over finite binary
strings.  Nothing here is a proof — each report is labeled
evidence-only over the tested witnesses."""

from fractions import Fraction

from formtop import (upper_reals_oracle, cantor_oracle, rational_located,
                     full_spread, stream_point, bounded_located_check)

ureal = upper_reals_oracle()
V = rational_located(Fraction(1, 3))
grid = [Fraction(k, 12) for k in range(-6, 13)]
tests = [(b, a) for a in grid for b in ureal.wb_stage(a, 5)]
rep = bounded_located_check(ureal, V, tests=tests, rounded_tests=grid,
                            depth=5)
print(f"upper reals, V = (1/3, oo): {len(rep['tests'])} witnesses, "
      f"passed={rep['passed']}, evidence_only={rep['evidence_only']}")

cantor = cantor_oracle()
strings = ["", "0", "1", "00", "01", "10", "11"]
covers = [(s, [s + "0", s + "1"]) for s in strings]

for name, member in (("full spread", full_spread()),
                     ("alternating stream", stream_point(lambda i: i % 2))):
    rep = bounded_located_check(cantor, member, cover_tests=covers)
    print(f"cantor, {name}: passed={rep['passed']}")

# the oracles answer sound bounded queries only
print("cover query: '' <| {'0','1'}:", cantor.cover_fin("", ["0", "1"]))
print("way-below stage at 0 (depth 2):",
      [str(q) for q in ureal.wb_stage(Fraction(0), 2)][:4], "...")
