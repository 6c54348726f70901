"""Positive braids with full twists for T-links, and satellites that are not T-knots."""

from .braid import BraidError, BraidWord, compose, format_braid, full_twist, parse_braid, word
from .garside import contains_full_twist, garside_normal_form
from .invariants import alexander_polynomial, bennequin_genus, invariant_bundle, jones_normalized
from .obstruction import Verdict, corollary_family, not_tknot_certificate, verify_lemma_crossings_bruteforce
from .rewrite import fulltwist_presentation, isopote_step
from .satellite import Framing, SatelliteSpec, satellite_braid
from .tlink import TLinkSpec, format_tlink, parse_tlink, standard_braid, transpose_dual

__all__ = [
    "BraidError", "BraidWord", "Framing", "SatelliteSpec", "TLinkSpec", "Verdict",
    "alexander_polynomial", "bennequin_genus", "compose", "contains_full_twist", "corollary_family",
    "format_braid", "format_tlink", "full_twist", "fulltwist_presentation", "garside_normal_form",
    "invariant_bundle", "isopote_step", "jones_normalized", "not_tknot_certificate", "parse_braid",
    "parse_tlink", "satellite_braid", "standard_braid", "transpose_dual",
    "verify_lemma_crossings_bruteforce", "word",
]
