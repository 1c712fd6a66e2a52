"""Canonical fixture sites, Birkhoff lattice builders and oracle sites.

Finite fixtures:

* ``chain2`` -- base {0,1} with 0 <= 1, no axioms.
* ``tri``    -- base {a,b,c}, discrete order, one axiom a <| {b,c}.
* ``dl3``    -- spectral site of the 3-chain distributive lattice {0,m,1}.
* ``bool4``  -- spectral site of the 4-element Boolean algebra 2^{p,q}.
* ``pomega_trunc(n)`` -- finite subsets of {0..n-1} under reverse inclusion.

Oracle sites: Cantor space over finite binary strings and the upper reals
over exact rationals.
"""

from fractions import Fraction

from .core import FiniteSite, OracleSite, canon, ordkey, subsets


# ---------------------------------------------------------------------------
# posets and distributive lattices


class Poset:
    """A finite poset given by elements and a decidable order."""

    def __init__(self, elements, leq_pairs):
        self.elements = canon(elements)
        rel = {(a, a) for a in self.elements} | set(leq_pairs)
        changed = True
        while changed:
            changed = False
            for (a, b) in list(rel):
                for (c, d) in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        for a in self.elements:
            for b in self.elements:
                if a != b and (a, b) in rel and (b, a) in rel:
                    raise ValueError(f"antisymmetry fails on {a!r},{b!r}")
        self._rel = rel

    def leq(self, a, b):
        return (a, b) in self._rel

    def __len__(self):
        return len(self.elements)


def chain_poset(n):
    return Poset(range(n), [(i, i + 1) for i in range(n - 1)])


def antichain_poset(n):
    return Poset(range(n), [])


def all_posets(n):
    """All posets on {0..n-1} (not up to isomorphism), n <= 3 in practice."""
    elems = list(range(n))
    pairs = [(a, b) for a in elems for b in elems if a != b]
    out = []
    seen = set()
    for bits in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if bits >> i & 1}
        try:
            p = Poset(elems, rel)
        except ValueError:
            continue
        key = frozenset(p._rel)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


class DistLattice:
    """A finite distributive lattice; laws checked exhaustively."""

    def __init__(self, carrier, leq):
        self.carrier = canon(carrier)
        self.leq = leq
        self.bottom = self._find(lambda x: all(leq(x, y) for y in self.carrier))
        self.top = self._find(lambda x: all(leq(y, x) for y in self.carrier))
        self._join = {}
        self._meet = {}
        for a in self.carrier:
            for b in self.carrier:
                ub = [c for c in self.carrier if leq(a, c) and leq(b, c)]
                lub = [c for c in ub if all(leq(c, d) for d in ub)]
                lb = [c for c in self.carrier if leq(c, a) and leq(c, b)]
                glb = [c for c in lb if all(leq(d, c) for d in lb)]
                if len(lub) != 1 or len(glb) != 1:
                    raise ValueError("not a lattice")
                self._join[(a, b)] = lub[0]
                self._meet[(a, b)] = glb[0]
        for a in self.carrier:
            for b in self.carrier:
                for c in self.carrier:
                    if self.meet(a, self.join(b, c)) != \
                            self.join(self.meet(a, b), self.meet(a, c)):
                        raise ValueError("distributivity fails")

    def _find(self, pred):
        got = [x for x in self.carrier if pred(x)]
        if len(got) != 1:
            raise ValueError("lattice lacks a unique bound")
        return got[0]

    def join(self, a, b):
        return self._join[(a, b)]

    def meet(self, a, b):
        return self._meet[(a, b)]

    def lt(self, a, b):
        return a != b and self.leq(a, b)


def birkhoff(poset):
    """The distributive lattice of down-sets of a finite poset."""
    downsets = [S for S in subsets(poset.elements)
                if all(a in S
                       for b in S for a in poset.elements if poset.leq(a, b))]
    return DistLattice(downsets, lambda x, y: x <= y)


def spectral_site(D, all_pairs=False):
    """The spectral site of a finite distributive lattice: base = carrier,
    order = lattice order, axioms bottom <| {} plus join decompositions,
    with the lattice meet attached.

    With ``all_pairs`` every decomposition a = b v c (b, c < a) becomes an
    axiom; by default dominated pairs are dropped (same cover, fewer
    axioms -- the equivalence is a test).
    """
    axioms = [(D.bottom, frozenset())]
    for a in D.carrier:
        pairs = [(b, c) for b in D.carrier for c in D.carrier
                 if D.lt(b, a) and D.lt(c, a) and D.join(b, c) == a
                 and ordkey(b) <= ordkey(c)]
        if not all_pairs:
            pairs = [(b, c) for (b, c) in pairs
                     if not any((b2, c2) != (b, c) and D.leq(b, b2)
                                and D.leq(c, c2) for (b2, c2) in pairs)]
        for (b, c) in pairs:
            axioms.append((a, frozenset({b, c})))
    site = FiniteSite(D.carrier,
                      [(a, b) for a in D.carrier for b in D.carrier
                       if D.leq(a, b)],
                      axioms,
                      meet=(D.top, lambda a, b: D.meet(a, b)))
    return site.localize()


def prime_filters(D):
    """Prime filters of a finite distributive lattice, in canonical order.

    Every filter of a finite lattice is principal, so candidates are the
    up-sets of single elements; primality and properness are then tested
    literally.
    """
    out = []
    for x in D.carrier:
        F = frozenset(y for y in D.carrier if D.leq(x, y))
        if D.bottom in F:
            continue
        prime = all((D.join(a, b) not in F) or (a in F or b in F)
                    for a in D.carrier for b in D.carrier)
        if prime:
            out.append(F)
    return sorted(set(out), key=ordkey)


# ---------------------------------------------------------------------------
# named finite fixtures


def chain2():
    return FiniteSite([0, 1], [(0, 1)], name="chain2")


def chain2_spectral():
    """chain2 with the (trivial) meet-semilattice structure attached, so it
    classifies spectral; used by the de Groot and PSub instance checks."""
    return FiniteSite([0, 1], [(0, 1)],
                      meet=(1, lambda a, b: min(a, b)),
                      name="chain2s")


def tri():
    return FiniteSite(["a", "b", "c"], [],
                      [("a", frozenset({"b", "c"}))], name="tri")


def dl3():
    order = {"0": 0, "m": 1, "1": 2}
    site = FiniteSite(["0", "m", "1"],
                      lambda a, b: order[a] <= order[b],
                      [("0", frozenset())],
                      meet=("1", lambda a, b: a if order[a] <= order[b] else b),
                      name="dl3")
    return site.localize()


def bool4():
    rank = {"0": frozenset(), "p": frozenset({"p"}), "q": frozenset({"q"}),
            "1": frozenset({"p", "q"})}
    inv = {v: k for k, v in rank.items()}
    site = FiniteSite(["0", "p", "q", "1"],
                      lambda a, b: rank[a] <= rank[b],
                      [("0", frozenset()), ("1", frozenset({"p", "q"}))],
                      meet=("1", lambda a, b: inv[rank[a] & rank[b]]),
                      name="bool4")
    return site.localize()


def pomega_trunc(n):
    """Truncation of the powerset-of-naturals site to subsets of {0..n-1}:
    base Fin({0..n-1}), order A <= B iff B is a subset of A, no axioms."""
    if n > 4:
        raise ValueError("truncation bound is 4")
    return FiniteSite(subsets(range(n)),
                      lambda A, B: B <= A,
                      name=f"pomega{n}")


def pomega3():
    return pomega_trunc(3)


FIXTURES = {
    "chain2": chain2,
    "chain2s": chain2_spectral,
    "tri": tri,
    "dl3": dl3,
    "bool4": bool4,
    "pomega3": pomega3,
}


def fixture(name):
    try:
        return FIXTURES[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; "
                         f"choose from {sorted(FIXTURES)}") from None


# ---------------------------------------------------------------------------
# oracle sites


def _cantor_parse(s):
    if not isinstance(s, str) or any(c not in "01" for c in s):
        raise ValueError(f"not a binary string: {s!r}")
    return s


def cantor_oracle():
    """Cantor space over finite binary strings.  A string refines (sits
    below) each of its prefixes.  cover_fin(a, A) checks that A is a
    uniform bar over a up to the maximum length occurring in A, by
    breadth-first extension -- sound because every longer extension of a
    barred string is barred."""

    def le(a, b):
        return a.startswith(b)

    def cover_fin(a, A):
        A = [_cantor_parse(b) for b in A]
        maxlen = max([len(b) for b in A], default=0)

        def barred(s):
            if any(s.startswith(b) for b in A):
                return True
            if len(s) >= maxlen:
                return False
            return barred(s + "0") and barred(s + "1")

        return barred(_cantor_parse(a))

    def wb_stage(a, n):
        # every string is way below itself (a <| {a} via reflexivity)
        return [a]

    return OracleSite("cantorO", le, cover_fin, wb_stage,
                      parse=_cantor_parse, show=str)


def _rat_parse(s):
    return Fraction(s)


def upper_reals_oracle():
    """The upper reals over exact rationals: q <| U iff every p < q is
    exceeded by some member of U.  For finite A that is: A inhabited and
    q <= max(A).  Way-below stages exhaust {p | p < q} by dyadic grids."""

    def le(p, q):
        return Fraction(p) <= Fraction(q)

    def cover_fin(q, A):
        A = [Fraction(a) for a in A]
        return bool(A) and Fraction(q) <= max(A)

    def wb_stage(q, n):
        q = Fraction(q)
        step = Fraction(1, 2 ** n)
        return [q - k * step for k in range(1, n * 2 ** n + 1)]

    return OracleSite("urealO", le, cover_fin, wb_stage,
                      parse=_rat_parse, show=str)


# ---------------------------------------------------------------------------
# canonical membership oracles on the oracle sites


def rational_located(q):
    """The located subset of the upper reals determined by a rational:
    V = {p | q < p}."""
    q = Fraction(q)
    return lambda p: q < Fraction(p)


def full_spread():
    """The whole of Cantor space: every finite string belongs."""
    return lambda s: True


def stream_point(bits):
    """The point of Cantor space given by an infinite bit stream (a callable
    index -> bit): membership = being a prefix of the stream."""
    def member(s):
        return all(int(s[i]) == int(bits(i)) for i in range(len(s)))
    return member
