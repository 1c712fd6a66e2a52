"""Splitting / point / located classification, cuts, and pair
representations.

A subset V of the base is *splitting* when it meets every cover of each of
its members, a *point* when additionally inhabited and filtering, and
*located* when for every way-below pair a << b either a is outside V or b
inside.  Located subsets correspond bijectively to cuts (L, U) -- disjoint
rounded pairs satisfying six conditions -- and cuts to pair representations
(LL, U) with LL a collection of finite subsets, satisfying seven.
"""

from collections import namedtuple

from .core import ordkey, subsets

DEFAULT_ENUM_BOUND = 12
BRUTE_BOUND = 12

Cut = namedtuple("Cut", ["L", "U"])
PairRep = namedtuple("PairRep", ["LL", "U"])


# ---------------------------------------------------------------------------
# splitting / point / located


def is_splitting_brute(site, V, bound=BRUTE_BOUND):
    """Literal quantifier: every subset U whose saturation meets V already
    meets V.  Exponential; the production check below is validated against
    this one in the tests."""
    if len(site.base) > bound:
        raise ValueError("base size exceeds brute-force bound")
    V = frozenset(V)
    for U in subsets(site.base):
        if V & site.saturate(U) and not V & U:
            return False
    return True


def is_splitting(site, V):
    """V splitting iff V avoids the saturation of its complement: any
    cover U disjoint from V is contained in base - V, and saturation is
    monotone, so the complement is the only subset that needs checking."""
    V = frozenset(V)
    return not V & site.saturate(site.baseset - V)


def is_point(site, V):
    V = frozenset(V)
    if not is_splitting(site, V):
        return False
    if not V:
        return False
    return all(V & site.down({a}, {b}) for a in V for b in V)


def is_located(site, V):
    V = frozenset(V)
    if not is_splitting(site, V):
        return False
    return all(a not in V or b in V for (a, b) in site.wb_pairs())


def classify_subset(site, V):
    V = frozenset(V)
    flags = {
        "splitting": is_splitting(site, V),
        "point": is_point(site, V),
        "located": is_located(site, V),
    }
    flags["located_point"] = flags["point"] and flags["located"]
    return flags


# ---------------------------------------------------------------------------
# enumeration


def enumerate_subsets_with(site, pred, bound=DEFAULT_ENUM_BOUND):
    if len(site.base) > bound:
        raise ValueError(
            f"base size {len(site.base)} exceeds enumeration bound {bound}; "
            "use the structured (meet-semilattice) route")
    return [frozenset(V) for V in subsets(site.base) if pred(site, V)]


def enumerate_located(site, bound=DEFAULT_ENUM_BOUND):
    return enumerate_subsets_with(site, is_located, bound)


def enumerate_points(site, bound=DEFAULT_ENUM_BOUND):
    return enumerate_subsets_with(site, is_point, bound)


def enumerate_located_points(site, bound=DEFAULT_ENUM_BOUND):
    """All located points.  When the site carries a compatible meet
    structure, every point is a filter of the preorder and every filter on
    a finite base is a principal up-set, so only |base| candidates need
    testing; this fast path is validated against the exhaustive one on
    small bases."""
    if site.meet is not None and site.meet_compatible():
        cands = {site.above[x] for x in site.base}
        return sorted(
            (V for V in cands if is_point(site, V) and is_located(site, V)),
            key=lambda s: (len(s), ordkey(s)))
    return [V for V in enumerate_points(site, bound) if is_located(site, V)]


# ---------------------------------------------------------------------------
# cuts


def located_to_cut(site, V):
    """(L_V, V) with L_V = {a | exists finite A with a << A and A
    disjoint from V}; by monotonicity the complement of V is the largest
    candidate A, so L_V = sat(base - V)."""
    V = frozenset(V)
    if not is_located(site, V):
        raise ValueError("subset is not located")
    return Cut(L=site.saturate(site.baseset - V), U=V)


def cut_to_located(site, cut):
    ok, why = cut_check(site, cut)
    if not ok:
        raise ValueError(f"not a cut: {why}")
    return frozenset(cut.U)


def cut_check(site, cut):
    """Literal evaluation of the six cut conditions; returns (ok, name of
    first violated condition or None)."""
    L, U = frozenset(cut.L), frozenset(cut.U)
    fins = subsets(site.base)
    # 1. a <| A and a in U  =>  A meets U
    for a in U:
        for A in fins:
            if site.covers(a, A) and not A & U:
                return False, "1 (U splitting)"
    # 2. a in U => exists b << a with b in U
    for a in U:
        if not any(b in U for b in site.wb(a)):
            return False, "2 (U rounded)"
    # 3. a <| A subseteq L => a in L
    for A in fins:
        if A <= L:
            if not site.saturate(A) <= L:
                return False, "3 (L saturated)"
    # 4. a in L => exists A >> a with A subseteq L
    for a in L:
        if not any(site.way_below_set({a}, A) for A in subsets(L)):
            return False, "4 (L rounded)"
    # 5. a << b => a in L or b in U
    for (a, b) in site.wb_pairs():
        if a not in L and b not in U:
            return False, "5 (located)"
    # 6. disjoint
    if L & U:
        return False, "6 (disjoint)"
    return True, None


def enumerate_cuts(site, bound=DEFAULT_ENUM_BOUND):
    """All validated cuts, found by letting U range over subsets and taking
    L := sat(base - U); independent of the located enumeration."""
    if len(site.base) > bound:
        raise ValueError("base size exceeds enumeration bound")
    out = []
    for U in subsets(site.base):
        cut = Cut(L=site.saturate(site.baseset - U), U=frozenset(U))
        if cut_check(site, cut)[0]:
            out.append(cut)
    return out


def cut_is_located_point(site, cut):
    """The two extra conditions singling out located points among cuts:
    U inhabited and U filtering through formal meets."""
    U = frozenset(cut.U)
    return bool(U) and all(site.down({a}, {b}) & U for a in U for b in U)


# ---------------------------------------------------------------------------
# pair representations


def cut_to_pair(site, cut):
    """(Fin L, U)."""
    return PairRep(LL=frozenset(subsets(cut.L)), U=frozenset(cut.U))


def pair_to_cut(site, pr):
    """(union of LL, U)."""
    L = frozenset().union(*pr.LL) if pr.LL else frozenset()
    return Cut(L=L, U=frozenset(pr.U))


def pair_rep_check(site, pr):
    """Literal evaluation of the seven pair-representation conditions."""
    LL, U = frozenset(pr.LL), frozenset(pr.U)
    fins = subsets(site.base)
    for a in U:
        for A in fins:
            if site.covers(a, A) and not A & U:
                return False, "1 (U splitting)"
    for a in U:
        if not any(b in U for b in site.wb(a)):
            return False, "2 (U rounded)"
    if frozenset() not in LL:
        return False, "3 (empty set present)"
    for B in LL:
        for A in fins:
            if site.covers_set(A, B) and A not in LL:
                return False, "4 (LL down-closed under cover)"
    for A in LL:
        for B in LL:
            if not any(site.way_below_set(A, C) and site.way_below_set(B, C)
                       for C in LL):
                return False, "5 (LL directed by way-below)"
    for (a, b) in site.wb_pairs():
        if frozenset({a}) not in LL and b not in U:
            return False, "6 (located)"
    for a in U:
        if frozenset({a}) in LL:
            return False, "7 (disjoint)"
    return True, None


# ---------------------------------------------------------------------------
# bounded evidence on oracle sites


def bounded_located_check(osite, V, tests=(), cover_tests=(),
                          rounded_tests=(), depth=3):
    """Evidence-only check of locatedness/splitting on an oracle site.

    tests: pairs (a, b) with b way above a at the tested stage -- check
        a not in V or b in V.
    cover_tests: pairs (a, A) -- check a in V and cover_fin(a, A) imply
        some member of A in V.
    rounded_tests: elements a -- check a in V implies some member of
        wb_stage(a, depth) in V (the second splitting condition for
        continuous covers).

    PASS is evidence over the supplied witnesses, not a proof.
    """
    records = []

    def record(kind, args, passed, error=None):
        records.append({"kind": kind, "args": args, "passed": passed,
                        **({"error": error} if error else {})})

    for (a, b) in tests:
        try:
            a, b = osite.parse(osite.show(a)), osite.parse(osite.show(b))
            record("located-pair", [osite.show(a), osite.show(b)],
                   (not V(a)) or V(b))
        except ValueError as e:
            record("located-pair", [repr(a), repr(b)], False, str(e))
    for (a, A) in cover_tests:
        try:
            ok = (not V(a)) or (not osite.cover_fin(a, A)) or \
                any(V(x) for x in A)
            record("splitting-cover", [osite.show(a),
                                       [osite.show(x) for x in A]], ok)
        except ValueError as e:
            record("splitting-cover", [repr(a)], False, str(e))
    for a in rounded_tests:
        try:
            ok = (not V(a)) or any(V(b) for b in osite.wb_stage(a, depth))
            record("splitting-rounded", [osite.show(a)], ok)
        except ValueError as e:
            record("splitting-rounded", [repr(a)], False, str(e))

    return {
        "site": osite.name,
        "evidence_only": True,
        "passed": all(r["passed"] for r in records),
        "tests": records,
    }
