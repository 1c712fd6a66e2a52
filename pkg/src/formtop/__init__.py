"""Computable point-free topology on finite bases.

Sites (formal topologies) as localized axiom-sets with a saturation
engine, propositional geometric theories and their model sets, located
subsets and cuts, the patch / Lawson / Vietoris / de Groot / lower
powerlocale constructions, perfect subtopologies, and exhaustive
verification suites for the structure theorems on desk-scale instances.
"""

from .core import (FiniteSite, OracleSite, ordkey, canon, fin, subsets,
                   brute_force_way_below, enumerate_saturated, order_iso)
from .theory import (g_plain, g_l, g_r, g_box, g_dia, GeometricAxiom,
                     axiom, AxiomFamily, GeometricTheory, simple_theory,
                     ModelOracle, model_check, enumerate_models, present,
                     ModelBackedSite, SiteMap, map_eq, extend_to_map)
from .located import (is_splitting, is_point, is_located, classify_subset,
                      enumerate_located, enumerate_points,
                      enumerate_located_points, Cut, located_to_cut,
                      cut_to_located, cut_check, enumerate_cuts,
                      bounded_located_check)
from .construct import (patch_theory, lawson_theory, vietoris_theory,
                        lower_theory, patch, lawson, vietoris, lower_site,
                        sigma_L, scott_site, degroot, fjoin,
                        scott_open_filters, synthetic_wb, canonical_maps,
                        extend_perfect, model_translations, monad_model,
                        model_of_located, enumerate_rl_models,
                        left_unit_check, scott_dual_check,
                        little_fact_check)
from .subtop import (SubTopology, closed_sub, open_sub, kfit, sub_meet,
                     sub_join, sub_leq, closed_kfit, is_perfect_sub,
                     psub_site, psub_patch_iso)
from .fixtures import (FIXTURES, fixture, chain2, chain2_spectral, tri,
                       dl3, bool4, pomega3, birkhoff, spectral_site,
                       prime_filters, all_posets, cantor_oracle,
                       upper_reals_oracle, rational_located, full_spread,
                       stream_point)

__version__ = "0.1.0"
