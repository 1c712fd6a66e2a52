"""Propositional geometric theories and their presented sites.

A theory is a set of generators plus axioms "finite conjunction entails a
finite disjunction of finite conjunctions".  It presents a site over the
finite subsets of the generators with the reverse inclusion order; when
that base is too large to materialize, cover queries are answered
semantically over the (separately computed) model set -- for a finite
propositional geometric theory the presented cover coincides with
entailment over all two-valued models, which the tests cross-check against
the materialized presentation at small scale.
"""

from collections import namedtuple
from itertools import combinations

from .core import FiniteSite, canon, ordkey, subsets

# -- generators -------------------------------------------------------------
# Tagged tuples with a deterministic total order via ordkey.


def g_plain(x):
    return ("p", x)


def g_l(A):
    return ("l", canon(A))


def g_r(a):
    return ("r", a)


def g_box(A):
    return ("box", canon(A))


def g_dia(a):
    return ("dia", a)


GeometricAxiom = namedtuple("GeometricAxiom", ["ante", "disjuncts"])


def axiom(ante, disjuncts):
    return GeometricAxiom(frozenset(ante),
                          tuple(frozenset(d) for d in disjuncts))


class AxiomFamily:
    """A family of axiom instances sharing one schema.

    ``instances()`` yields the expanded GeometricAxioms; ``check(member)``
    returns None if a membership function satisfies the family, else a
    human-readable violation.  Subclasses may override ``check`` with an
    equivalent but cheaper evaluation (they must stay sound and complete
    for rejection on the models they are used with).
    """

    def __init__(self, name, instances):
        self.name = name
        self._instances = list(instances)

    def instances(self):
        return iter(self._instances)

    def count(self):
        return len(self._instances)

    def check(self, member):
        for ax in self.instances():
            if all(member(g) for g in ax.ante):
                if not any(all(member(g) for g in d) for d in ax.disjuncts):
                    return (f"{self.name}: ante {canon(ax.ante)} holds, "
                            f"no disjunct does")
        return None


class GeometricTheory:
    def __init__(self, generators, families, provenance=""):
        self.generators = canon(generators)
        self.genset = frozenset(self.generators)
        self.families = list(families)
        self.provenance = provenance
        for fam in self.families:
            if not isinstance(fam, AxiomFamily):
                raise TypeError("families must be AxiomFamily instances")

    def axioms(self):
        out = []
        for fam in self.families:
            out.extend(fam.instances())
        for ax in out:
            if not (ax.ante <= self.genset
                    and all(d <= self.genset for d in ax.disjuncts)):
                raise ValueError("axiom mentions unknown generator")
        return out

    def stats(self):
        return {
            "provenance": self.provenance,
            "generators": len(self.generators),
            "families": {fam.name: fam.count() for fam in self.families},
            "axioms": sum(fam.count() for fam in self.families),
        }


def simple_theory(generators, axioms_, provenance=""):
    return GeometricTheory(generators,
                           [AxiomFamily("axioms", [axiom(a, d)
                                                   for (a, d) in axioms_])],
                           provenance)


# -- models -----------------------------------------------------------------


class ModelOracle:
    """Membership procedure for a (possibly intensional) model."""

    def __init__(self, membership, support=None):
        if support is not None:
            support = frozenset(support)
            if membership is None:
                membership = support.__contains__
        self.membership = membership
        self.support = support

    @classmethod
    def of(cls, m):
        if isinstance(m, ModelOracle):
            return m
        if callable(m):
            return cls(m)
        return cls(None, support=m)

    def __call__(self, g):
        return bool(self.membership(g))


def model_check(theory, m, explain=False):
    """True iff every axiom family is satisfied by the membership m."""
    m = ModelOracle.of(m)
    for fam in theory.families:
        why = fam.check(m)
        if why is not None:
            return (False, why) if explain else False
    return (True, None) if explain else True


def enumerate_models(theory, bound=22):
    """All models as generator subsets, subsets ordered by size then
    lexicographically.  Backtracking over generators with violated-axiom
    pruning on the expanded instances."""
    gens = list(theory.generators)
    if len(gens) > bound:
        raise ValueError(
            f"{len(gens)} generators exceed bound {bound}; enumerate via "
            "the structured located-subset route instead")
    instances = theory.axioms()
    index = {g: i for i, g in enumerate(gens)}
    # For pruning: axiom is hopeless once all ante are assigned True and
    # every disjunct contains an assigned-False generator.
    out = []
    assign = {}

    def violated():
        for ax in instances:
            if all(assign.get(g) is True for g in ax.ante):
                if all(any(assign.get(g) is False for g in d)
                       for d in ax.disjuncts):
                    return True
        return False

    def rec(i):
        if violated():
            return
        if i == len(gens):
            out.append(frozenset(g for g, v in assign.items() if v))
            return
        for v in (False, True):
            assign[gens[i]] = v
            rec(i + 1)
        del assign[gens[i]]

    rec(0)
    return sorted(out, key=lambda s: (len(s), ordkey(s)))


# -- materialized presentation ---------------------------------------------


def present(theory, bound=2 ** 12):
    """The presented site, fully materialized: base = Fin(generators)
    under reverse inclusion, with the localized axiom schema
    C u A <| {C u B_i} expanded over all contexts C."""
    P = theory.generators
    if 2 ** len(P) > bound:
        raise ValueError(
            f"2^{len(P)} exceeds materialization bound {bound}; "
            "use present_lazy")
    base = subsets(P)
    site_axioms = []
    rest = list(P)
    for ax in theory.axioms():
        others = [g for g in rest if g not in ax.ante]
        for C in subsets(others):
            head = frozenset(ax.ante | C)
            cover = frozenset(head | d for d in ax.disjuncts)
            site_axioms.append((head, cover))
    return FiniteSite(base, lambda A, B: B <= A, site_axioms,
                      name=f"present({theory.provenance})", localized=True)


# -- model-backed (lazy) presentation --------------------------------------


class ModelBackedSite:
    """Cover queries for a presented site answered over the full model set.

    For a finite propositional geometric theory, A <|_T UU holds exactly
    when every model containing A contains some member of UU (classical
    completeness of propositional coherent logic; finitely generated
    distributive lattices are finite and spatial).  The model list must be
    the complete model set of the theory.
    """

    def __init__(self, theory, models):
        self.theory = theory
        self.models = [frozenset(m) for m in models]

    # m "forces" a collection of base elements when it contains one
    def forces(self, m, UU):
        return any(A <= m for A in UU)

    def covers(self, A, UU):
        A = frozenset(A)
        UU = [frozenset(B) for B in UU]
        return all(self.forces(m, UU) for m in self.models if A <= m)

    def covers_set(self, UU, VV):
        UU = [frozenset(A) for A in UU]
        VV = [frozenset(B) for B in VV]
        return all(self.forces(m, VV)
                   for m in self.models if self.forces(m, UU))

    def cover_eq(self, UU, VV):
        return self.covers_set(UU, VV) and self.covers_set(VV, UU)

    def top_covers(self, UU):
        """top <| UU: the empty conjunction is the greatest base element."""
        return self.covers(frozenset(), UU)

    def way_below(self, A, B):
        """A << B for base elements; the base is finite (2^|P|), so the
        finite collapse A <| {B} applies."""
        return self.covers(A, [B])

    def up_models(self, A):
        A = frozenset(A)
        return [m for m in self.models if A <= m]

    def way_below_forcing(self, p, q):
        """U << V for saturated classes given by forcing predicates p, q
        on models (U = {A | all models above A satisfy p} etc.).

        Every base element's up-set of models equals the up-set of the
        intersection of some subfamily of models, so quantifying over
        subfamilies is exhaustive.
        """
        models = self.models
        n = len(models)
        for r in range(n + 1):
            for F in combinations(range(n), r):
                if F:
                    A = frozenset.intersection(*(models[i] for i in F))
                else:
                    A = frozenset(self.theory.generators)
                up = [m for m in models if A <= m]
                if all(p(m) for m in up) and not all(q(m) for m in up):
                    return False
        return True


# -- site maps --------------------------------------------------------------


class SiteMap:
    """A map of sites given by generator preimages.

    ``preimage(g)`` returns the set of source base elements related to the
    target generator/base element g; the full relation b r A for presented
    targets is b <| preimage(g) for every g in A.
    """

    def __init__(self, source, target, preimage, name=""):
        self.source = source
        self.target = target
        self._pre = preimage
        self.name = name
        self._memo = {}

    def preimage(self, g):
        got = self._memo.get(g)
        if got is None:
            got = frozenset(self._pre(g))
            self._memo[g] = got
        return got

    def relates(self, b, A):
        return all(self.source.covers(b, self.preimage(g)) for g in A)


def map_eq(m1, m2, gens, target_regular):
    """Equality of maps decided on generator preimages via cover_eq in the
    source; for regular targets one inclusion suffices (maps into regular
    topologies are maximal among their lower bounds), but we check both
    directions anyway -- the shortcut only licenses using generator
    preimages instead of all base elements."""
    if not target_regular:
        raise ValueError("map equality shortcut requires a regular target")
    return all(m1.source.cover_eq(m1.preimage(g), m2.preimage(g))
               for g in gens)


def extend_to_map(source, target_theory, gen_relation, name=""):
    """Extend a relation between source base and theory generators to a
    site map, after verifying the respect condition: for every axiom, the
    formal meet of the antecedent preimages is covered by the union of the
    disjuncts' formal meets."""
    pre = {g: frozenset(b for b in source.base if gen_relation(b, g))
           for g in target_theory.generators}

    def down_multi(gs):
        cur = source.baseset
        for g in gs:
            cur = source.down(cur, pre[g])
        return cur

    for fam in target_theory.families:
        for ax in fam.instances():
            left = down_multi(canon(ax.ante))
            right = frozenset().union(*(down_multi(canon(d))
                                        for d in ax.disjuncts)) \
                if ax.disjuncts else frozenset()
            if not source.covers_set(left, right):
                raise ValueError(
                    f"relation does not respect axiom family {fam.name}: "
                    f"ante {canon(ax.ante)}")
    return SiteMap(source, target_theory, lambda g: pre[g], name=name)
