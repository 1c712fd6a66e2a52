"""Deterministic serialization: JSON documents and DOT order diagrams.

All exporters sort by the canonical element order before emitting, and the
JSON writers use sorted keys and fixed separators, so repeated exports of
the same object are byte-identical.
"""

import json
from fractions import Fraction

from .core import ordkey, canon, enumerate_saturated
from .located import enumerate_located


# ---------------------------------------------------------------------------
# element codecs

def encode_elem(x):
    """JSON-safe encoding of an element code (ints, rationals, strings,
    tuples, finite sets, arbitrarily nested)."""
    if isinstance(x, bool) or isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return {"tuple": [encode_elem(y) for y in x]}
    if isinstance(x, (frozenset, set)):
        return {"set": [encode_elem(y) for y in canon(x)]}
    raise TypeError(f"unsupported element code: {x!r}")


def show_elem(x):
    """Short human-readable label for an element code."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 \
            else str(x.numerator)
    if isinstance(x, tuple):
        return "(" + ",".join(show_elem(y) for y in x) + ")"
    if isinstance(x, (frozenset, set)):
        return "{" + ",".join(show_elem(y) for y in canon(x)) + "}"
    return str(x)


# ---------------------------------------------------------------------------
# JSON documents

def site_to_json(site):
    base = list(site.base)
    return {
        "kind": "site",
        "name": site.name,
        "base": [encode_elem(a) for a in base],
        "le": [[encode_elem(a), encode_elem(b)]
               for b in base for a in base
               if a != b and a in site.below[b]],
        "axioms": [{"head": encode_elem(h),
                    "cover": [encode_elem(c) for c in canon(C)]}
                   for (h, C) in site.axioms],
        "localized": bool(site.localized),
        "has_meet": site.meet is not None,
    }


def theory_to_json(theory, full=False):
    doc = {
        "kind": "theory",
        "provenance": theory.provenance,
        "generators": [encode_elem(g) for g in theory.generators],
        "stats": theory.stats(),
    }
    if full:
        doc["axioms"] = [
            {"antecedent": [encode_elem(g) for g in ax.ante],
             "disjuncts": [[encode_elem(g) for g in d]
                           for d in ax.disjuncts]}
            for ax in theory.axioms()]
    return doc


def subtopology_to_json(sub):
    return {
        "kind": "subtopology",
        "label": sub.label,
        "parent": sub.parent.name,
        "extra_axioms": [{"head": encode_elem(h),
                          "cover": [encode_elem(c) for c in canon(C)]}
                         for (h, C) in sub.extra],
    }


def report_to_json(report):
    return {"kind": "report", **report}


def dumps(doc):
    """Byte-deterministic JSON text for any exporter output."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True) + "\n"


# ---------------------------------------------------------------------------
# DOT order diagrams

def _dot_of_order(labels, leq, name):
    """DOT digraph of the Hasse diagram of a finite preorder, nodes and
    edges emitted in canonical order."""
    n = len(labels)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for i in range(n):
        for j in range(n):
            if i == j or not leq(i, j) or leq(j, i):
                continue
            if any(k not in (i, j) and leq(i, k) and leq(k, j)
                   and not leq(k, i) and not leq(j, k) for k in range(n)):
                continue
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def site_to_dot(site):
    """The base preorder of a site."""
    base = list(site.base)
    return _dot_of_order([show_elem(a) for a in base],
                         lambda i, j: base[i] in site.below[base[j]],
                         site.name or "site")


def _set_lattice_dot(sets, name):
    sets = sorted({frozenset(s) for s in sets},
                  key=lambda s: (len(s), ordkey(s)))
    return _dot_of_order([show_elem(s) for s in sets],
                         lambda i, j: sets[i] <= sets[j], name)


def saturated_to_dot(site):
    """The lattice of saturated subsets ordered by inclusion."""
    return _set_lattice_dot(enumerate_saturated(site),
                            f"Sat({site.name})")


def located_to_dot(site):
    """The located subsets ordered by inclusion."""
    return _set_lattice_dot(enumerate_located(site),
                            f"Located({site.name})")
