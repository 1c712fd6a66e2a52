"""Command-line surface: fixtures, saturation, classification, model and
located-subset enumeration, the powerlocale constructions, subtopology
reports, verification suites, and JSON/DOT export.

Exit statuses: 0 success, 1 verification failure, 2 usage or bound errors.
All output is deterministic for identical inputs.
"""

import argparse
import sys

from . import io as fio
from .core import canon
from .fixtures import FIXTURES, fixture
from .located import (enumerate_located, enumerate_located_points,
                      classify_subset)
from .theory import enumerate_models
from .construct import (patch_theory, lawson_theory, vietoris_theory,
                        lower_theory, scott_site, degroot,
                        enumerate_rl_models)
from .subtop import psub_site, psub_patch_iso
from . import verify as verify_mod


def _site(args):
    site = fixture(args.site)
    if args.max_base is not None and len(site.base) > args.max_base:
        raise ValueError(f"fixture {args.site!r} has base size "
                         f"{len(site.base)} > --max-base {args.max_base}")
    return site


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _theory_of(name, site, lazy):
    makers = {"patch": patch_theory, "lawson": lawson_theory,
              "vietoris": vietoris_theory, "lower": lower_theory}
    if name not in makers:
        raise ValueError(f"unknown theory {name!r}; "
                         f"choose from {sorted(makers)}")
    if name == "lower":
        return makers[name](site)
    return makers[name](site, lazy=lazy)


def cmd_example(args):
    site = _site(args)
    _emit(args, fio.dumps(fio.site_to_json(site)))
    return 0


def cmd_saturate(args):
    site = _site(args)
    U = [x for x in args.subset.split(",") if x]
    missing = [x for x in U if x not in site.baseset]
    if missing:
        raise ValueError(f"elements {missing} outside base of {site.name}")
    sat = site.saturate(U)
    _emit(args, fio.dumps({"site": site.name, "subset": U,
                           "saturation": [fio.encode_elem(a)
                                          for a in canon(sat)]}))
    return 0


def cmd_classify(args):
    site = _site(args)
    _emit(args, fio.dumps({"site": site.name, **site.classify()}))
    return 0


def cmd_models(args):
    site = _site(args)
    theory = _theory_of(args.theory, site, args.lazy)
    if args.theory in ("patch", "lawson"):
        models = enumerate_rl_models(site, theory)
    else:
        if len(theory.generators) > args.max_generators:
            raise ValueError(
                f"{len(theory.generators)} generators exceed "
                f"--max-generators {args.max_generators}")
        models = enumerate_models(theory)
    doc = {"site": site.name, "theory": args.theory,
           "count": len(models),
           "models": [[fio.encode_elem(g) for g in canon(m)]
                      for m in models]}
    _emit(args, fio.dumps(doc))
    return 0


def cmd_located(args):
    site = _site(args)
    subsets_ = enumerate_located_points(site) if args.points \
        else enumerate_located(site)
    doc = {"site": site.name,
           "kind": "points" if args.points else "located",
           "count": len(subsets_),
           "subsets": [[fio.encode_elem(a) for a in canon(V)]
                       for V in subsets_]}
    if args.classify:
        doc["classification"] = [classify_subset(site, V)
                                 for V in subsets_]
    _emit(args, fio.dumps(doc))
    return 0


def cmd_construct(args):
    site = _site(args)
    if args.construction in ("patch", "lawson", "vietoris", "lower"):
        theory = _theory_of(args.construction, site, args.lazy)
        doc = fio.theory_to_json(theory, full=args.full)
    elif args.construction == "scott":
        sc = scott_site(site)
        doc = fio.site_to_json(sc)
    elif args.construction == "degroot":
        theory, dsite = degroot(site, lazy=args.lazy)
        doc = {"theory": fio.theory_to_json(theory),
               "dual_site": fio.site_to_json(dsite)}
    else:
        raise ValueError(f"unknown construction {args.construction!r}")
    if args.stats and "stats" in doc:
        doc = {"provenance": doc["provenance"], **doc["stats"]}
    _emit(args, fio.dumps(doc))
    return 0


def cmd_subtop(args):
    site = _site(args)
    if args.what == "site":
        ps = psub_site(site)
        doc = {"site": site.name, "psub_base": len(ps.base)}
    else:
        doc = fio.report_to_json(psub_patch_iso(site))
        doc["site"] = site.name
    _emit(args, fio.dumps(doc))
    return 0


def cmd_verify(args):
    if args.suite == ["all"] or not args.suite:
        selection = None
    else:
        try:
            selection = [int(s) for s in args.suite]
        except ValueError:
            raise ValueError(f"suites must be numbers or 'all': "
                             f"{args.suite}") from None
    ok, _ = verify_mod.run(selection, max_base=args.max_base)
    return 0 if ok else 1


def cmd_export(args):
    site = _site(args)
    if args.format == "json":
        if args.object == "site":
            text = fio.dumps(fio.site_to_json(site))
        elif args.object in ("patch", "lawson", "vietoris", "lower"):
            text = fio.dumps(fio.theory_to_json(
                _theory_of(args.object, site, args.lazy)))
        else:
            raise ValueError(
                f"cannot export {args.object!r} as json")
    elif args.format == "dot":
        if args.object == "site":
            text = fio.site_to_dot(site)
        elif args.object == "located":
            text = fio.located_to_dot(site)
        elif args.object == "saturated":
            text = fio.saturated_to_dot(site)
        else:
            raise ValueError(f"cannot export {args.object!r} as dot")
    else:
        raise ValueError(f"unknown format {args.format!r}")
    _emit(args, text)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="formtop",
        description="finite formal topologies: saturation, located "
                    "subsets, powerlocale constructions, verification")
    p.add_argument("--max-base", type=int, default=None,
                   help="refuse sites with a larger base")
    p.add_argument("--max-generators", type=int, default=22,
                   help="bound for raw model enumeration")
    p.add_argument("--lazy", action="store_true",
                   help="defer axiom-family expansion where supported")
    # the bound flags are accepted before or after the verb; the
    # SUPPRESS defaults keep a post-verb absence from clobbering a
    # pre-verb value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-base", type=int,
                        default=argparse.SUPPRESS)
    common.add_argument("--max-generators", type=int,
                        default=argparse.SUPPRESS)
    common.add_argument("--lazy", action="store_true",
                        default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("-o", "--output", default=None)
        return sp

    sp = add("example", cmd_example, help="emit a fixture site as JSON")
    sp.add_argument("site", choices=sorted(FIXTURES))

    sp = add("saturate", cmd_saturate, help="saturate a subset")
    sp.add_argument("--site", required=True)
    sp.add_argument("--subset", required=True,
                    help="comma-separated base elements")

    sp = add("classify", cmd_classify, help="classify a fixture site")
    sp.add_argument("--site", required=True)

    sp = add("models", cmd_models, help="enumerate theory models")
    sp.add_argument("--theory", required=True)
    sp.add_argument("--site", required=True)

    sp = add("located", cmd_located,
             help="enumerate located subsets or points")
    sp.add_argument("--site", required=True)
    sp.add_argument("--points", action="store_true")
    sp.add_argument("--classify", action="store_true")

    sp = add("construct", cmd_construct, help="run a construction")
    sp.add_argument("construction",
                    choices=["patch", "lawson", "vietoris", "lower",
                             "scott", "degroot"])
    sp.add_argument("--site", required=True)
    sp.add_argument("--stats", action="store_true")
    sp.add_argument("--full", action="store_true",
                    help="include expanded axioms in theory JSON")

    sp = add("subtop", cmd_subtop, help="perfect-subtopology reports")
    sp.add_argument("what", choices=["site", "iso"])
    sp.add_argument("--site", required=True)

    sp = add("verify", cmd_verify, help="run verification suites")
    sp.add_argument("suite", nargs="*", default=["all"],
                    help="suite numbers, or 'all'")

    sp = add("export", cmd_export, help="export JSON/DOT artifacts")
    sp.add_argument("object",
                    choices=["site", "located", "saturated",
                             "patch", "lawson", "vietoris", "lower"])
    sp.add_argument("--site", required=True)
    sp.add_argument("--format", choices=["json", "dot"], required=True)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
