"""Sibling-invariant laminations of the circle, critical portraits and mixed tags."""
from .chords import Chord, Polygon, chord, linked, polygon, polygon_image, polygons_intersect, siblings
from .circle import Arc, angle, cyclically_ordered, preimages, sigma
from .lamination import Lamination, check_sibling_invariant, critical_objects, gaps, hausdorff_distance
from .pullback import CriticalPortrait, enumerate_dendritic_portraits, lavaurs_qml, portrait, pullback_generate
from .quadcrit import CriticalQuadrilateral, MarkedLamination, classify_pair, quad, strongly_linked, validate_portrait
from .tags import MixedTag, cocritical_set, family_disjoint_or_equal, minor_set, mixed_tag, mixed_tag_relation, usc_probe

__all__ = [
    "Arc", "Chord", "CriticalPortrait", "CriticalQuadrilateral", "Lamination", "MarkedLamination",
    "MixedTag", "Polygon", "angle", "check_sibling_invariant", "chord", "classify_pair",
    "cocritical_set", "critical_objects", "cyclically_ordered", "enumerate_dendritic_portraits",
    "family_disjoint_or_equal", "gaps", "hausdorff_distance", "lavaurs_qml", "linked", "minor_set",
    "mixed_tag", "mixed_tag_relation", "polygon", "polygon_image", "polygons_intersect",
    "portrait", "preimages", "pullback_generate", "quad", "siblings", "sigma", "strongly_linked", "usc_probe",
    "validate_portrait",
]
