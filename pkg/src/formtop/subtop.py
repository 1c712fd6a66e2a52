"""Inductively generated subtopologies and the site of perfect ones.

A subtopology of a finite site is presented by extra cover axioms on the
same base; its cover is the parent cover plus the extras.  The module
provides the closed / open / compact-fitted generators, the lattice
operations (meets by axiom union, binary joins by the pairwise schema),
the inclusion order decided through saturation, perfectness of the
canonical embedding, and the pair-presented site of the subframe
generated by closed-join-compact-fitted subtopologies together with its
comparison against the patch presentation.
"""

from .core import FiniteSite, canon, ordkey, subsets
from .theory import g_l, g_r

PSUB_BASE_BOUND = 4


class SubTopology:
    """A subtopology: parent site plus extra (localized) cover axioms.

    Subtopologies are compared only through their covers (``sub_leq``),
    never by syntactic axiom equality.
    """

    def __init__(self, parent, extra_axioms=(), label=""):
        self.parent = parent
        extras = []
        for head, cov in extra_axioms:
            cov = frozenset(cov)
            if head not in parent.baseset or not cov <= parent.baseset:
                raise ValueError(
                    f"extra axiom {(head, canon(cov))!r} outside parent base")
            extras.append((head, cov))
        extras.sort(key=lambda hc: (ordkey(hc[0]), ordkey(hc[1])))
        self.extra = tuple(extras)
        self.label = label
        self._site = None

    def site(self):
        if self._site is None:
            le_pairs = [(a, b) for b in self.parent.base
                        for a in self.parent.below[b]]
            self._site = FiniteSite(
                self.parent.base, le_pairs,
                list(self.parent.axioms) + list(self.extra),
                meet=self.parent.meet,
                name=f"{self.parent.name}|{self.label}",
                localized=self.parent.localized)
        return self._site

    def covers(self, a, U):
        return self.site().covers(a, U)

    def saturate(self, U):
        return self.site().saturate(U)


def _localized(parent, head, cov):
    """The localized instances of one extra axiom head <| cov."""
    return [(a, parent.down({a}, cov) if cov else frozenset())
            for a in parent.below[head]]


def closed_sub(site, U):
    """The closed subtopology determined by U: axioms u <| empty for u in
    U (localized: every element below u is covered by nothing)."""
    extras = []
    for u in U:
        extras.extend(_localized(site, u, frozenset()))
    return SubTopology(site, extras, label=f"closed{canon(U)}")


def open_sub(site, V):
    """The open subtopology determined by V: the whole base is covered by
    V, localized to a <| a `down` V for every a."""
    extras = [(a, site.down({a}, V)) for a in site.base]
    return SubTopology(site, extras, label=f"open{canon(V)}")


def _whole_covered_by(site, B):
    """Extras putting the whole base under B (localized)."""
    return [(a, site.down({a}, B)) for a in site.base]


def kfit(site, A):
    """The compact-fitted subtopology of a finite subset A: the meet over
    all B way above A of the subtopology 'base covered by B'.  On a
    finite base the quantifier over B is finite and exact.

    kfit(empty) is the least subtopology: B = empty is way above empty,
    and its axioms cover every element by nothing.
    """
    extras = []
    for B in subsets(site.base):
        if site.way_below_set(A, B):
            extras.extend(_whole_covered_by(site, B))
    return SubTopology(site, extras, label=f"kfit{canon(A)}")


def sub_meet(subs, parent=None):
    """Meet of subtopologies: union of the extra axiom sets.  The empty
    meet (with an explicit parent) is the parent itself."""
    subs = list(subs)
    if not subs:
        if parent is None:
            raise ValueError("empty meet needs an explicit parent")
        return SubTopology(parent, (), label="top")
    parent = subs[0].parent
    if any(s.parent is not parent for s in subs):
        raise ValueError("sub_meet: mismatched parents")
    extras = set()
    for s in subs:
        extras.update(s.extra)
    return SubTopology(parent, extras,
                       label="meet(" + ",".join(s.label for s in subs) + ")")


def sub_join(s0, s1):
    """Binary join: for extra axioms a <| U of s0 and b <| V of s1, the
    combined axioms a `down` b <| U u V (localized)."""
    if s0.parent is not s1.parent:
        raise ValueError("sub_join: mismatched parents")
    parent = s0.parent
    extras = set()
    for (a, U) in s0.extra:
        for (b, V) in s1.extra:
            UV = U | V
            for c in parent.down({a}, {b}):
                extras.add((c, parent.down({c}, UV) if UV else frozenset()))
    return SubTopology(parent, extras, label=f"({s0.label})v({s1.label})")


def sub_leq(t1, t2):
    """t1 is included in t2: every generating extra axiom of t2 already
    holds in t1 (decided by t1-saturation).  Extra axioms of the common
    parent hold in both by construction."""
    if t1.parent is not t2.parent:
        raise ValueError("sub_leq: mismatched parents")
    return all(t1.covers(a, C) for (a, C) in t2.extra)


def sub_cover_eq(t1, t2):
    return sub_leq(t1, t2) and sub_leq(t2, t1)


def is_perfect_sub(sub):
    """Whether the canonical embedding preserves way-below: every pair
    a << b of the parent stays way below in the subtopology.

    On a finite base the subtopology's saturation contains the parent's,
    so the check passes for every inductively generated subtopology; it
    is kept as an honest verification and validated against the
    quantifier-chasing way-below oracle in the tests.
    """
    s = sub.site()
    return all(s.way_below(a, b) for (a, b) in sub.parent.wb_pairs())


def closed_kfit(site, a, A):
    """The generator Closed(a) v KFit(A) of the perfect subframe."""
    return sub_join(closed_sub(site, {a}), kfit(site, A))


# ---------------------------------------------------------------------------
# the pair-presented site of perfect subtopologies


def psub_site(site, bound=PSUB_BASE_BOUND):
    """The site of perfect subtopologies: base = base x Fin(base), with

        (a,A) <= (b,B)   iff  Closed(b) v KFit(B)  included in
                              Closed(a) v KFit(A),
        (a,A) <| U       iff  the meet over (b,B) in U of
                              Closed(b) v KFit(B) is included in
                              Closed(a) v KFit(A).

    The cover is realized as a saturation procedure over the lattice
    operations on subtopologies.
    """
    if len(site.base) > bound:
        raise ValueError(
            f"psub base would be {len(site.base)} x 2^{len(site.base)}; "
            f"bound is |base| <= {bound}")
    pairs = [(a, A) for a in site.base for A in subsets(site.base)]
    gen = {p: closed_kfit(site, p[0], p[1]) for p in pairs}

    def le(p, q):
        return sub_leq(gen[q], gen[p])

    def sat_fn(U):
        meet = sub_meet([gen[p] for p in U], parent=site)
        return frozenset(p for p in pairs if sub_leq(meet, gen[p]))

    ps = FiniteSite(pairs, le, axioms=(), sat_fn=sat_fn,
                    name=f"psub({site.name})", localized=True)
    ps.generators = gen
    return ps


def psub_patch_iso(site, bound=PSUB_BASE_BOUND):
    """Build the maps r (pair site -> patch) and s (patch -> pair site)
    from their generator clauses and verify, generator by generator, that
    the composites are cover-equal to the identities.

        (a,A) r {r(b)}  iff  (a,A) <|  {(b, empty)},
        (a,A) r {l(B)}  iff  (a,A) <|  {(c,B) | c in base},
        X     s (a,B)   iff  X <|_P  {{r(a), l(B)}}.

    r o s is checked on every patch generator g: the class of {g} must
    be cover-equal to the classes {r(a), l(A)} over the r-preimage of g;
    s o r on every pair (b,B): the formal meet of the r-preimages of
    {r(b)} and {l(B)} must be cover-equal to {(b,B)}.
    """
    from .construct import patch

    P = patch(site)
    PS = psub_site(site, bound=bound)

    def r_pre(g):
        kind, payload = g
        if kind == "r":
            target = [(payload, frozenset())]
        else:
            target = [(c, frozenset(payload)) for c in site.base]
        return frozenset(p for p in PS.base if PS.covers(p, target))

    report = {"site": site.name, "patch_generators": [],
              "psub_generators": [], "passed": True}

    for g in P.theory.generators:
        pre = r_pre(g)
        images = [frozenset({g_r(a), g_l(A)}) for (a, A) in pre]
        ok = P.cover_eq([frozenset({g})], images)
        report["patch_generators"].append(
            {"generator": g, "r_preimage_size": len(pre), "ok": ok})
        report["passed"] &= ok

    pre_r = {g: r_pre(g) for g in P.theory.generators}
    for (b, B) in PS.base:
        composite = PS.down(pre_r[g_r(b)], pre_r[g_l(B)])
        ok = PS.cover_eq(composite, [(b, B)])
        report["psub_generators"].append(
            {"pair": (b, canon(B)), "ok": ok})
        report["passed"] &= ok

    return report


# ---------------------------------------------------------------------------
# exhaustive search over subtopology covers at tiny scale


def enumerate_subcovers(site, bound=2):
    """All subtopology covers of the site, as saturation tables on the
    finite powerset: closure operators pointwise above the parent's
    saturation.  Every such operator is generated by the axiom set
    {(a, C) | a in f(C)}, so this enumeration is exactly the set of
    inductively generated subtopology covers.  Exponential in 2^|base|.
    """
    if len(site.base) > bound:
        raise ValueError(f"base size {len(site.base)} exceeds bound {bound}")
    cells = subsets(site.base)
    parent = {U: site.saturate(U) for U in cells}
    options = {U: [S for S in cells if parent[U] | U <= S] for U in cells}

    tables = []

    def rec(i, table):
        if i == len(cells):
            tables.append(dict(table))
            return
        U = cells[i]
        for S in options[U]:
            table[U] = S
            if all(table[V] <= table[U] for V in table if V <= U) and \
               all(table[U] <= table[V] for V in table if U <= V):
                rec(i + 1, table)
        del table[U]

    rec(0, {})
    # keep monotone, idempotent tables only
    out = []
    for t in tables:
        if all(t[t[U]] == t[U] for U in cells) and \
           all(t[U] <= t[V] for U in cells for V in cells if U <= V):
            out.append(t)
    return out


def perfect_sub_generation_check(site, bound=2):
    """Every subtopology cover at tiny scale is cover-equal to a meet of
    Closed(a) v KFit(A) generators (the generators of the perfect
    subframe).  Returns a report with the counts and any stray cover."""
    tables = enumerate_subcovers(site, bound=bound)
    pairs = [(a, A) for a in site.base for A in subsets(site.base)]
    gens = [closed_kfit(site, a, A) for (a, A) in pairs]
    cells = subsets(site.base)

    def table_of(sub):
        s = sub.site()
        return {U: s.saturate(U) for U in cells}

    generated = []
    for picks in subsets(range(len(gens))):
        sub = sub_meet([gens[i] for i in picks], parent=site)
        generated.append(table_of(sub))

    missing = [t for t in tables if t not in generated]
    return {"site": site.name, "covers": len(tables),
            "generated_distinct": len({tuple(sorted((canon(k), canon(v))
                                                    for k, v in t.items()))
                                       for t in generated}),
            "missing": missing, "passed": not missing}
