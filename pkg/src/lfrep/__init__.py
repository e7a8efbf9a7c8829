"""Locally finite dimensional representations of strongly locally finite quivers.

Infinite quivers are given as a finite core with eventually periodic tails;
representations are stored on a finite window and are constant (identity maps)
beyond it.  Arithmetic is exact over the rationals.
"""

from .chains import chain_explore, thin_family
from .homs import RepMorphism, find_isomorphism, hom_dim, hom_space, is_indecomposable, is_isomorphic
from .inventory import ComponentInventory, component_inventory
from .knitting import knit_preinjective, knit_preprojective
from .quiver import QuiverPresentation, TailSpec, classify_quiver, make_walk, validate_presentation
from .rep import StableRep, dualize, injective_at, projective_at, simple_at, walk_rep
from .status import StatusFlags, is_in_rrep, presentation_status, simple_presentation
from .wings import Interval, quasi_wing

__all__ = [
    "ComponentInventory",
    "Interval",
    "QuiverPresentation",
    "RepMorphism",
    "StableRep",
    "StatusFlags",
    "TailSpec",
    "chain_explore",
    "classify_quiver",
    "component_inventory",
    "dualize",
    "find_isomorphism",
    "hom_dim",
    "hom_space",
    "injective_at",
    "is_in_rrep",
    "is_indecomposable",
    "is_isomorphic",
    "knit_preinjective",
    "knit_preprojective",
    "make_walk",
    "presentation_status",
    "projective_at",
    "quasi_wing",
    "simple_at",
    "simple_presentation",
    "thin_family",
    "validate_presentation",
    "walk_rep",
]
