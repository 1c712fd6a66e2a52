"""The verification suites: exhaustive desk-scale checks of the structure
theorems, runnable one by one or all together.

Each suite function returns a report dict with a boolean ``passed`` and
enough detail to see what was checked; ``run`` executes a selection and
prints one line per suite.  All checks are exact (no tolerances); suite 12
is evidence-only by nature (bounded queries against infinite sites) and is
flagged as such in its report.
"""

import random
from fractions import Fraction

from .core import FiniteSite, brute_force_way_below, enumerate_saturated
from .fixtures import (FIXTURES, fixture, all_posets, birkhoff,
                       spectral_site, bool4, dl3, pomega3, chain2, tri,
                       chain2_spectral, cantor_oracle, upper_reals_oracle,
                       rational_located, full_spread, stream_point)
from .located import (enumerate_located, enumerate_located_points,
                      enumerate_cuts, located_to_cut, cut_to_located,
                      bounded_located_check)
from .theory import g_r, g_l, model_check, enumerate_models, present
from .construct import (patch_theory, lawson_theory, vietoris_theory,
                        model_of_located, enumerate_rl_models, degroot,
                        scott_open_filters, scott_dual_check,
                        little_fact_check, left_unit_check,
                        model_translations)
from .subtop import psub_patch_iso


def _fixture_sites(max_base=None):
    out = [fixture(n) for n in sorted(FIXTURES)]
    if max_base is not None:
        out = [s for s in out if len(s.base) <= max_base]
    return out


def _report(num, name, passed, **detail):
    return {"criterion": num, "name": name, "passed": bool(passed),
            **detail}


# ---------------------------------------------------------------------------
# 1. way-below oracle equivalence

def _random_site(rng, max_elems=5):
    n = rng.randint(1, max_elems)
    base = [f"x{i}" for i in range(n)]
    le = [(a, b) for a in base for b in base
          if a != b and rng.random() < 0.3]
    axioms = []
    for _ in range(rng.randint(0, 3)):
        head = rng.choice(base)
        cov = frozenset(b for b in base if rng.random() < 0.4)
        axioms.append((head, cov))
    return FiniteSite(base, le, axioms, name="random")


def suite_way_below(max_base=None, n_random=200, seed=1789):
    """Fast way-below against the quantifier-chasing brute force."""
    rng = random.Random(seed)
    sites = _fixture_sites(max_base) + \
        [_random_site(rng) for _ in range(n_random)]
    pairs = mismatches = 0
    for site in sites:
        bound = max(6, len(site.base))
        for a in site.base:
            for b in site.base:
                pairs += 1
                if site.way_below(a, b) != \
                        brute_force_way_below(site, a, b, bound=bound):
                    mismatches += 1
    return _report(1, "way-below oracle equivalence",
                   mismatches == 0, sites=len(sites), pairs=pairs,
                   mismatches=mismatches)


# ---------------------------------------------------------------------------
# 2. cut bijection

def suite_cuts(max_base=None):
    """Located subsets <-> cuts: roundtrips are identities, counts agree."""
    cap = 5 if max_base is None else min(5, max_base)
    detail, ok = {}, True
    for site in _fixture_sites(cap):
        loc = enumerate_located(site)
        cuts = enumerate_cuts(site)
        round1 = all(cut_to_located(site, located_to_cut(site, V)) == V
                     for V in loc)
        round2 = all(located_to_cut(site, cut_to_located(site, c)) == c
                     for c in cuts)
        good = round1 and round2 and len(loc) == len(cuts)
        detail[site.name] = {"located": len(loc), "cuts": len(cuts),
                             "roundtrips": round1 and round2}
        ok = ok and good
    return _report(2, "cut bijection", ok, sites=detail)


# ---------------------------------------------------------------------------
# 3. patch model correspondence

def _perturb_pass(theory, models, gens):
    """Every single-generator flip of a model fails the model check."""
    bad = 0
    for m in models:
        for g in gens:
            if model_check(theory, m ^ {g}):
                bad += 1
    return bad


def suite_patch_models(max_base=None):
    """Patch models are exactly the located-point encodings."""
    expected = {"dl3": 2, "bool4": 2}
    detail, ok = {}, True

    def check(site, want, full_perturb):
        nonlocal ok
        pts = enumerate_located_points(site)
        if want is not None and len(pts) != want:
            ok = False
        theory = patch_theory(site)
        models = [model_of_located(site, V) for V in pts]
        confirmed = all(model_check(theory, m) for m in models)
        gens = theory.generators if full_perturb \
            else theory.generators[::max(1, len(theory.generators) // 24)]
        bad = _perturb_pass(theory, models, gens)
        ok = ok and confirmed and bad == 0
        detail[site.name] = {"points": len(pts), "model_check": confirmed,
                             "perturbed": len(gens) * len(models),
                             "false_models": bad}

    for name, want in expected.items():
        check(fixture(name), want, full_perturb=True)
    for i, P in enumerate(all_posets(3)):
        site = spectral_site(birkhoff(P))
        site.name = f"birkhoff[{i}]"
        pts = enumerate_located_points(site)
        if len(pts) != len(P):
            ok = False
        if max_base is None or len(site.base) <= max_base:
            check(site, len(P), full_perturb=len(site.base) <= 4)
    return _report(3, "patch model correspondence", ok, sites=detail)


# ---------------------------------------------------------------------------
# 4. lawson model correspondence

def suite_lawson_models(max_base=None):
    """Lawson models are exactly the located-subset encodings."""
    expected = {"dl3": 3, "bool4": 4}
    detail, ok = {}, True
    for name, want in expected.items():
        site = fixture(name)
        loc = enumerate_located(site)
        models = enumerate_rl_models(site, lawson_theory(site))
        encodings = {model_of_located(site, V) for V in loc}
        good = len(loc) == want and set(models) == encodings
        detail[name] = {"located": len(loc), "models": len(models)}
        ok = ok and good
    site = pomega3()
    if max_base is None or len(site.base) <= max_base:
        loc = enumerate_located(site)
        theory = lawson_theory(site)
        good = all(model_check(theory, model_of_located(site, V))
                   for V in loc)
        detail[site.name] = {"located": len(loc), "model_check": good}
        ok = ok and good
    return _report(4, "lawson model correspondence", ok, sites=detail)


# ---------------------------------------------------------------------------
# 5. spectral/Boolean law

def _complemented(site, models):
    """Each r(a) is complemented among the patch models: no model contains
    both r(a) and l({a}), and every model contains one of them.  This is
    the model-backed cover query (meet covered by empty, join covers top)
    without materializing the generator list."""
    for a in site.base:
        r, l = g_r(a), g_l((a,))
        if any(r in m and l in m for m in models):
            return False
        if not all(r in m or l in m for m in models):
            return False
    return True


def suite_spectral(max_base=None):
    """Birkhoff spectral sites: |points| = |P| and patch is Boolean."""
    ok, counted, complemented = True, 0, 0
    for n in (1, 2, 3, 4):
        for P in all_posets(n):
            site = spectral_site(birkhoff(P))
            if max_base is not None and len(site.base) > max_base:
                continue
            pts = enumerate_located_points(site)
            counted += 1
            if len(pts) != len(P):
                ok = False
            models = [model_of_located(site, V) for V in pts]
            complemented += 1
            if not _complemented(site, models):
                ok = False
    # the same complement law through the actual lazy patch object
    from .construct import patch
    for site in (chain2_spectral(), dl3(), bool4()):
        Pz = patch(site, lazy=True)
        for a in site.base:
            meet = frozenset({g_r(a), g_l((a,))})
            if not Pz.covers_set([meet], []):
                ok = False
            if not Pz.top_covers([frozenset({g_r(a)}),
                                  frozenset({g_l((a,))})]):
                ok = False
    return _report(5, "spectral sites and Boolean patch", ok,
                   posets=counted, complement_checked=complemented)


# ---------------------------------------------------------------------------
# 6. patch covers from way-below pairs

def suite_patch_covers(max_base=None):
    """top <| {l(A)} u {{r(b)} | b in B} for every pair A << B."""
    detail, ok = {}, True
    for name in ("dl3", "bool4"):
        r = little_fact_check(fixture(name))
        detail[name] = r
        ok = ok and r["passed"]
    return _report(6, "patch covers from way-below pairs", ok, sites=detail)


# ---------------------------------------------------------------------------
# 7. Lawson <-> Vietoris translations

def suite_lawson_vietoris(max_base=None):
    detail, ok = {}, True
    # bool4: raw model enumeration of the Vietoris theory
    site = bool4()
    vt = vietoris_theory(site)
    raw = enumerate_models(vt)
    tr = model_translations(site)
    loc = enumerate_located(site)
    translated = {tr["loc_to_V"](V) for V in loc}
    good = set(raw) == translated and len(raw) == 4
    detail["bool4"] = {"raw_models": len(raw), "located": len(loc)}
    ok = ok and good
    # both fixtures: mutual inverses through the Lawson encodings
    sites = [site]
    b3 = next(s for s in (spectral_site(birkhoff(P)) for P in all_posets(3))
              if len(s.base) == 8)
    b3.name = "bool8"
    if max_base is None or len(b3.base) <= max_base:
        sites.append(b3)
    for s in sites:
        tr = model_translations(s)
        vt = vietoris_theory(s)
        loc = enumerate_located(s)
        inv = all(tr["V_to_loc"](tr["loc_to_V"](V)) == V for V in loc)
        lv = all(tr["V_to_L"](tr["L_to_V"](model_of_located(s, V)))
                 == model_of_located(s, V) for V in loc)
        checked = all(model_check(vt, tr["loc_to_V"](V)) for V in loc)
        detail[s.name] = {"located": len(loc), "inverse": inv and lv,
                          "model_check": checked}
        ok = ok and inv and lv and checked
    return _report(7, "lawson-vietoris translations", ok, sites=detail)


# ---------------------------------------------------------------------------
# 8. de Groot dual instance

def suite_degroot(max_base=None):
    detail, ok = {}, True
    for site in (chain2_spectral(), dl3()):
        _, dsite = degroot(site)
        pts = enumerate_located_points(site)
        dpts = enumerate_located_points(dsite)
        good = len(pts) == len(dpts)
        entry = {"points": len(pts), "dual_points": len(dpts)}
        if len(site.base) <= 3:
            filters = scott_open_filters(enumerate_saturated(site))
            dsats = enumerate_saturated(dsite)
            entry["filters"] = len(filters)
            entry["dual_saturated"] = len(dsats)
            good = good and len(filters) == len(dsats)
        detail[site.name] = entry
        ok = ok and good
    return _report(8, "de Groot dual", ok, sites=detail)


# ---------------------------------------------------------------------------
# 9. perfect subtopologies against the patch

def suite_psub(max_base=None):
    detail, ok = {}, True
    for site in (chain2_spectral(), dl3(), bool4()):
        if max_base is not None and len(site.base) > max_base:
            continue
        r = psub_patch_iso(site)
        detail[site.name] = {"patch_generators": r["patch_generators"],
                             "psub_generators": r["psub_generators"],
                             "passed": r["passed"]}
        ok = ok and r["passed"]
    return _report(9, "perfect subtopologies vs patch", ok, sites=detail)


# ---------------------------------------------------------------------------
# 10. presented Lawson site is compact regular

def suite_lawson_site(max_base=None):
    detail, ok = {}, True
    for site in _fixture_sites(2):
        L = present(lawson_theory(site))
        top = frozenset()
        compact = L.way_below(top, top)
        rounded = True
        for g in lawson_theory(site).generators:
            c = frozenset({g})
            below = [frozenset({h}) for h in lawson_theory(site).generators
                     if L.way_below(frozenset({h}), c)]
            if not L.covers(c, below):
                rounded = False
        detail[site.name] = {"compact": compact, "rounded": rounded}
        ok = ok and compact and rounded
    return _report(10, "presented lawson site compact regular", ok,
                   sites=detail)


# ---------------------------------------------------------------------------
# 11. Scott topology as de Groot dual of the lower powerlocale

def suite_scott_dual(max_base=None):
    detail, ok = {}, True
    for site in (chain2(), tri()):
        r = scott_dual_check(site)
        detail[site.name] = r
        ok = ok and r["passed"]
    return _report(11, "scott topology as de Groot dual", ok, sites=detail)


# ---------------------------------------------------------------------------
# 12. oracle evidence suites (infinite sites, bounded witnesses)

def suite_oracles(max_base=None, depth=5):
    ureal = upper_reals_oracle()
    cantor = cantor_oracle()
    grid = [Fraction(k, 12) for k in range(-12, 25)]
    reports, ok = [], True
    for q in (Fraction(0), Fraction(1, 3), Fraction(1, 2)):
        V = rational_located(q)
        tests = [(b, a) for a in grid
                 for b in ureal.wb_stage(a, depth)]
        cover_tests = [(a, [a + Fraction(1, 12)]) for a in grid]
        r = bounded_located_check(ureal, V, tests=tests,
                                  cover_tests=cover_tests,
                                  rounded_tests=grid, depth=depth)
        r["subset"] = f"rational_located({q})"
        reports.append({"subset": r["subset"], "site": r["site"],
                        "tests": len(r["tests"]), "passed": r["passed"]})
        ok = ok and r["passed"]
    strings = [""] + ["".join(s) for n in range(1, 5)
                      for s in __import__("itertools").product("01",
                                                               repeat=n)]
    for name, V in (("full_spread", full_spread()),
                    ("stream_point(alternating)",
                     stream_point(lambda i: i % 2))):
        cover_tests = [(s, [s + "0", s + "1"]) for s in strings
                       if len(s) < 4]
        tests = [(b, a) for a in strings[:8]
                 for b in cantor.wb_stage(a, depth)]
        r = bounded_located_check(cantor, V, tests=tests,
                                  cover_tests=cover_tests, depth=depth)
        reports.append({"subset": name, "site": r["site"],
                        "tests": len(r["tests"]), "passed": r["passed"]})
        ok = ok and r["passed"]
    return _report(12, "oracle evidence (bounded witnesses)", ok,
                   evidence_only=True, checks=reports)


# ---------------------------------------------------------------------------
# 13. monad left unit

def suite_left_unit(max_base=None):
    r = left_unit_check(bool4())
    return _report(13, "monad left unit", r["passed"], detail=r)


# ---------------------------------------------------------------------------
# runner

SUITES = {
    1: suite_way_below,
    2: suite_cuts,
    3: suite_patch_models,
    4: suite_lawson_models,
    5: suite_spectral,
    6: suite_patch_covers,
    7: suite_lawson_vietoris,
    8: suite_degroot,
    9: suite_psub,
    10: suite_lawson_site,
    11: suite_scott_dual,
    12: suite_oracles,
    13: suite_left_unit,
}


def run(selection=None, max_base=None, out=None):
    """Run the selected suites (all by default); print one line each.

    Returns (all_passed, reports)."""
    import sys
    import time
    out = out or sys.stdout
    nums = sorted(SUITES) if selection in (None, "all") else \
        sorted(set(selection))
    reports = []
    for n in nums:
        if n not in SUITES:
            raise ValueError(f"no verification suite {n}; "
                             f"choose from 1..{max(SUITES)}")
        t0 = time.time()
        rep = SUITES[n](max_base=max_base)
        rep["seconds"] = round(time.time() - t0, 2)
        reports.append(rep)
        status = "PASS" if rep["passed"] else "FAIL"
        flag = " [evidence-only]" if rep.get("evidence_only") else ""
        print(f"[{n:2d}] {rep['name']}: {status}{flag} "
              f"({rep['seconds']}s)", file=out)
    return all(r["passed"] for r in reports), reports
