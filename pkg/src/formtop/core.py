"""Finite formal topologies (sites) and the cover-saturation engine.

A site is a set of basic opens ("base"), a preorder on them, and a set of
generating cover axioms ``head <| cover``.  The cover relation is the least
one closed under reflexivity, the preorder rule and the axioms; on a finite
base it is computed by a worklist fixpoint (``saturate``).  Everything else
in the package (way-below, located subsets, patch/Lawson/Vietoris
constructions) is built on top of these saturation queries.
"""

from collections import deque
from fractions import Fraction
from itertools import combinations


# ---------------------------------------------------------------------------
# canonical ordering of heterogeneous element codes

def ordkey(x):
    """Total order key for element codes (ints, strings, tuples, frozensets).

    Used everywhere a deterministic iteration order is needed, so that
    enumeration results and exported artifacts are reproducible.
    """
    if isinstance(x, bool):
        return (0, (x,))
    if isinstance(x, (int, Fraction)):
        return (1, (Fraction(x),))
    if isinstance(x, str):
        return (2, x)
    if isinstance(x, tuple):
        return (3, tuple(ordkey(y) for y in x))
    if isinstance(x, (frozenset, set)):
        return (4, tuple(sorted(ordkey(y) for y in x)))
    raise TypeError(f"unsupported element code: {x!r}")


def canon(xs):
    """Canonical (sorted, deduplicated) tuple form of a finite subset."""
    return tuple(sorted(set(xs), key=ordkey))


def fin(*xs):
    return frozenset(xs)


def subsets(xs):
    """All subsets of a finite iterable, as frozensets, in canonical order."""
    items = canon(xs)
    return [frozenset(c) for r in range(len(items) + 1)
            for c in combinations(items, r)]


# ---------------------------------------------------------------------------


class FiniteSite:
    """A finite site: base, preorder, generating cover axioms.

    Parameters
    ----------
    base : iterable of element codes
    le : iterable of (a, b) pairs meaning a <= b, or a callable.
        The reflexive-transitive closure is always applied.
    axioms : iterable of (head, cover) pairs; cover is a finite iterable.
    meet : optional (top, meet_function_or_dict) giving a meet-semilattice
        structure on the base.
    sat_fn : optional callable U -> frozenset overriding the axiom-driven
        saturation (used for table/formula-backed sites such as the
        de Groot dual).  When given, `axioms` may be empty.
    name : optional label used in exports.
    """

    def __init__(self, base, le=(), axioms=(), meet=None, sat_fn=None,
                 name=None, localized=False):
        self.base = canon(base)
        self.baseset = frozenset(self.base)
        self.name = name
        if not self.base and sat_fn is None:
            raise ValueError("empty base")
        if callable(le):
            pairs = {(a, b) for a in self.base for b in self.base if le(a, b)}
        else:
            pairs = set(le)
        for a, b in pairs:
            if a not in self.baseset or b not in self.baseset:
                raise ValueError(f"le pair {(a, b)!r} outside base")
        # reflexive-transitive closure
        below = {b: {b} for b in self.base}   # below[b] = {a | a <= b}
        for a, b in pairs:
            below[b].add(a)
        changed = True
        while changed:
            changed = False
            for b in self.base:
                extra = set()
                for a in below[b]:
                    extra |= below[a]
                if not extra <= below[b]:
                    below[b] |= extra
                    changed = True
        self.below = {b: frozenset(s) for b, s in below.items()}
        self.above = {a: frozenset(b for b in self.base if a in self.below[b])
                      for a in self.base}

        self.axioms = []
        for head, cover in axioms:
            cov = frozenset(cover)
            if head not in self.baseset or not cov <= self.baseset:
                raise ValueError(f"axiom {(head, canon(cover))!r} outside base")
            self.axioms.append((head, cov))
        self.axioms.sort(key=lambda hc: (ordkey(hc[0]), ordkey(hc[1])))

        self._sat_fn = sat_fn
        self._sat_memo = {}
        self._wb_pairs = None
        self.localized = localized

        # index: element -> axiom ids whose cover mentions it
        self._ax_index = {b: [] for b in self.base}
        self._empty_cover_heads = []
        for i, (head, cov) in enumerate(self.axioms):
            if not cov:
                self._empty_cover_heads.append(head)
            for c in cov:
                self._ax_index[c].append(i)

        self.meet = None
        if meet is not None:
            top, mfun = meet
            if top not in self.baseset:
                raise ValueError("meet top outside base")
            if callable(mfun):
                table = {(a, b): mfun(a, b) for a in self.base for b in self.base}
            else:
                table = dict(mfun)
            for (a, b), c in table.items():
                if c not in self.baseset:
                    raise ValueError(f"meet({a!r},{b!r}) outside base")
            self.meet = (top, table)

    # -- basic relations ----------------------------------------------------

    def le(self, a, b):
        return a in self.below[b]

    def down(self, U, V):
        """The formal meet U `down` V = {c | c <= some u and c <= some v}."""
        out = set()
        for c in self.base:
            if any(self.le(c, u) for u in U) and any(self.le(c, v) for v in V):
                out.add(c)
        return frozenset(out)

    def downset(self, U):
        out = set()
        for u in U:
            out |= self.below[u]
        return frozenset(out)

    # -- saturation ---------------------------------------------------------

    def saturate(self, U):
        """A(U): the set of basic opens covered by U."""
        key = frozenset(U)
        if not key <= self.baseset:
            raise ValueError(f"saturate: {canon(key - self.baseset)!r} outside base")
        got = self._sat_memo.get(key)
        if got is not None:
            return got
        if self._sat_fn is not None:
            out = frozenset(self._sat_fn(key))
        else:
            out = self._saturate_worklist(key)
        self._sat_memo[key] = out
        return out

    def _saturate_worklist(self, key):
        cur = set()
        remaining = {i: len(cov) for i, (h, cov) in enumerate(self.axioms)}
        stack = list(key) + list(self._empty_cover_heads)
        while stack:
            x = stack.pop()
            if x in cur:
                continue
            # preorder rule: everything below a covered open is covered
            new = self.below[x] - cur
            cur |= new
            for y in new:
                for i in self._ax_index[y]:
                    remaining[i] -= 1
                    if remaining[i] == 0:
                        stack.append(self.axioms[i][0])
        return frozenset(cur)

    def covers(self, a, U):
        """a <| U."""
        return a in self.saturate(U)

    def covers_set(self, U, V):
        """U <| V elementwise."""
        sat = self.saturate(V)
        return all(u in sat for u in U)

    def cover_eq(self, U, V):
        """U and V generate the same saturation."""
        return self.covers_set(U, V) and self.covers_set(V, U)

    # -- way-below ----------------------------------------------------------

    def way_below(self, a, b):
        """a << b.  On a finite base every cover is finite, so this
        collapses to a <| {b}; the collapse is validated against the
        quantifier-chasing oracle in the test-suite."""
        return a in self.saturate({b})

    def way_below_set(self, U, V):
        """U << V for finite subsets: every cover of V has a finite
        subcover covering U; finite collapse U <| sat(V)."""
        sat = self.saturate(V)
        return all(u in sat for u in U)

    def wb(self, a):
        """The set of opens way below a."""
        return self.saturate({a})

    def wb_pairs(self):
        """All pairs (a, b) with a << b, canonically ordered."""
        if self._wb_pairs is None:
            self._wb_pairs = tuple(
                (a, b) for b in self.base for a in sorted(self.saturate({b}),
                                                         key=ordkey))
        return self._wb_pairs

    def up_fin(self, A):
        """All finite subsets B of the base with A << B (the way-above
        collection of a finite subset)."""
        return [B for B in subsets(self.base) if self.way_below_set(A, B)]

    # -- positivity-style operators ----------------------------------------

    def star_elt(self, u):
        """u* = {c | c `down` u <| empty}: the opens formally disjoint
        from u."""
        empty_sat = self.saturate(frozenset())
        return frozenset(c for c in self.base
                         if self.down({c}, {u}) <= empty_sat)

    def star(self, U):
        """U* = intersection of u* over u in U (whole base for U empty)."""
        out = self.baseset
        for u in U:
            out &= self.star_elt(u)
        return frozenset(out)

    def well_inside(self, a, b):
        """a is well inside b: the base is covered by a* together with b."""
        return self.covers_set(self.baseset, self.star({a}) | {b})

    # -- interpolation ------------------------------------------------------

    def interpolate(self, U, V):
        """Given U << V, produce a finite A with U << A and every member of
        A way below some member of V.  On a finite base V itself works
        (each v is way below itself)."""
        if not self.way_below_set(U, V):
            raise ValueError("interpolate: U is not way below V")
        A = frozenset(V)
        assert self.way_below_set(U, A)
        assert all(any(self.way_below(a, v) for v in V) for a in A)
        return A

    # -- localization -------------------------------------------------------

    def localize(self):
        """Localized variant: each axiom head <| cover is replaced by the
        family a <| a `down` cover for every a below the head.  The result
        satisfies the meet-distribution law sat(U down V) = sat(U) & sat(V).
        """
        new_axioms = []
        seen = set()
        for head, cov in self.axioms:
            for a in self.below[head]:
                c2 = self.down({a}, cov) if cov else frozenset()
                key = (a, c2)
                if key not in seen:
                    seen.add(key)
                    new_axioms.append((a, c2))
        le_pairs = [(a, b) for b in self.base for a in self.below[b]]
        return FiniteSite(self.base, le_pairs, new_axioms, meet=self.meet,
                          name=self.name, localized=True)

    # -- classification -----------------------------------------------------

    def meet_compatible(self):
        """Whether the attached meet structure is compatible with the cover:
        a `meet` b is cover-equal to a `down` b, and the top covers the base.
        """
        if self.meet is None:
            return False
        top, table = self.meet
        if not self.covers_set(self.baseset, {top}):
            return False
        for a in self.base:
            for b in self.base:
                m = table[(a, b)]
                if not self.cover_eq({m}, self.down({a}, {b})):
                    return False
        return True

    def classify(self):
        """Classification flags, each computed from its definition."""
        flags = {}
        flags["finitary"] = all(self.way_below(a, a) for a in self.base)
        flags["compact"] = self.way_below_set(self.baseset, self.baseset)
        flags["locally_compact"] = all(
            self.covers(a, frozenset(self.wb(a))) for a in self.base)
        stable = flags["locally_compact"]
        if stable:
            pairs = self.wb_pairs()
            down_memo = {}

            def dn(x, y):
                k = (x, y) if ordkey(x) <= ordkey(y) else (y, x)
                got = down_memo.get(k)
                if got is None:
                    got = self.down({k[0]}, {k[1]})
                    down_memo[k] = got
                return got

            for (a, a1) in pairs:
                for (b, b1) in pairs:
                    if not self.way_below_set(dn(a, b), dn(a1, b1)):
                        stable = False
                        break
                if not stable:
                    break
        flags["stably_locally_compact"] = stable
        flags["stably_compact"] = stable and flags["compact"]
        flags["regular"] = all(
            self.covers(a, frozenset(b for b in self.base
                                     if self.well_inside(b, a)))
            for a in self.base)
        flags["spectral"] = flags["stably_compact"] and self.meet_compatible()
        flags["stone"] = flags["spectral"] and all(
            self.well_inside(a, a) for a in self.base)
        return flags


# ---------------------------------------------------------------------------
# brute-force oracles


def brute_force_way_below(site, a, b, bound=6):
    """Quantifier-chasing oracle for a << b: every subset U covering b
    admits a finite (here: any) subset covering a.  Exponential in the base
    size; used to validate the finite collapse in `FiniteSite.way_below`."""
    if len(site.base) > bound:
        raise ValueError(f"base size {len(site.base)} exceeds brute-force "
                         f"bound {bound}")
    for U in subsets(site.base):
        if site.covers(b, U):
            if not any(site.covers(a, U0) for U0 in subsets(U)):
                return False
    return True


def enumerate_saturated(site, bound=4096):
    """All saturated subsets of a finite site, as a canonically sorted list.

    Saturated subsets form a closure system whose lattice is generated
    under the join X v Y = sat(X | Y) by the bottom sat({}) and the
    principal saturations sat({a}); we close that generating family under
    binary joins instead of scanning all 2^|base| subsets.
    """
    gens = [site.saturate(frozenset())]
    gens += [site.saturate({a}) for a in site.base]
    closed = set(gens)
    work = deque(closed)
    while work:
        X = work.popleft()
        for Y in list(closed):
            J = site.saturate(X | Y)
            if J not in closed:
                if len(closed) >= bound:
                    raise ValueError("saturated-subset enumeration exceeds bound")
                closed.add(J)
                work.append(J)
    return sorted(closed, key=lambda s: (len(s), ordkey(s)))


def order_iso(sets_a, sets_b):
    """Order isomorphism test for two finite families of sets ordered by
    inclusion (used to compare saturation lattices)."""
    import networkx as nx
    if len(sets_a) != len(sets_b):
        return False

    def digraph(sets):
        g = nx.DiGraph()
        g.add_nodes_from(range(len(sets)))
        for i, x in enumerate(sets):
            for j, y in enumerate(sets):
                if i != j and x <= y:
                    g.add_edge(i, j)
        return g

    from networkx.algorithms.isomorphism import DiGraphMatcher
    return DiGraphMatcher(digraph(sets_a), digraph(sets_b)).is_isomorphic()


# ---------------------------------------------------------------------------
# oracle-backed (infinite) sites


class OracleSite:
    """A point of access to an infinite site: bounded-evidence queries only.

    Parameters
    ----------
    name : label
    le : callable (a, b) -> bool
    cover_fin : callable (a, finite_iterable) -> bool, a sound bounded
        check of a <| A for finite A.
    wb_stage : callable (a, n) -> finite list, stage n of an increasing
        exhaustion of {b | b << a}.
    parse / show : element <-> string codecs for the command line.
    """

    def __init__(self, name, le, cover_fin, wb_stage,
                 parse=str, show=str):
        self.name = name
        self._le = le
        self._cover_fin = cover_fin
        self._wb_stage = wb_stage
        self.parse = parse
        self.show = show

    def le(self, a, b):
        return self._le(a, b)

    def cover_fin(self, a, A):
        return self._cover_fin(a, list(A))

    def wb_stage(self, a, n):
        return list(self._wb_stage(a, n))
