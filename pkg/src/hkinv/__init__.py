"""Finite-group invariants of knots and handlebody knots.

Homomorphisms from a finitely presented group with selected peripheral
elements into a small permutation group are enumerated up to conjugacy, and
summarized as the G-image of meridians, the G-index polynomial and the
meridian/longitude order table.
"""
from .diagram import PDCode, connected_sum, mirror, parse_pd, wirtinger, writhe
from .fpgroup import Presentation, Word, parse_presentation, format_presentation, substitute
from .homsearch import HomClassSet, Homomorphism, brute_force_enumerate, enumerate_homs
from .invariants import (ChiralityTable, IndexPolynomial, MeridianImageSet, chirality_table,
                         g_image, g_index, identify_subgroup, normal_closure)
from .perm import Permutation, TargetGroup, canonical_form, parse_cycles, parse_group

__all__ = [
    "PDCode", "connected_sum", "mirror", "parse_pd", "wirtinger", "writhe",
    "Presentation", "Word", "parse_presentation", "format_presentation", "substitute",
    "HomClassSet", "Homomorphism", "brute_force_enumerate", "enumerate_homs",
    "ChiralityTable", "IndexPolynomial", "MeridianImageSet", "chirality_table",
    "g_image", "g_index", "identify_subgroup", "normal_closure",
    "Permutation", "TargetGroup", "canonical_form", "parse_cycles", "parse_group",
]
__version__ = "0.1.0"
