"""Twisted group cohomology for orbifold groups."""
from .closed_form import ClosedForm, K_INVARIANT, Lemma9Certificate, lemma9_restriction, theorem10_closed_form
from .fox import fox_derivative, h0, h1
from .mod2 import (
    RestrictedSquares,
    RestrictionData,
    cup_product_surface,
    cup_square_surface,
    f2_h1_basis,
    orientation_character,
    restricted_squares,
    restriction_h1,
)
from .modules import CoefficientModule, f2, integral, trivial_z, twisted_z
from .mv import Edge, GraphOfGroups, Vertex, decompose, mv_cohomology, mv_terms
from .resolutions import BlockTag, block_cohomology
from .tables import known_cohomology

__all__ = [
    "BlockTag",
    "ClosedForm",
    "CoefficientModule",
    "Edge",
    "GraphOfGroups",
    "K_INVARIANT",
    "Lemma9Certificate",
    "RestrictedSquares",
    "RestrictionData",
    "Vertex",
    "block_cohomology",
    "cup_product_surface",
    "cup_square_surface",
    "decompose",
    "f2",
    "f2_h1_basis",
    "fox_derivative",
    "h0",
    "h1",
    "integral",
    "known_cohomology",
    "lemma9_restriction",
    "mv_cohomology",
    "mv_terms",
    "orientation_character",
    "restricted_squares",
    "restriction_h1",
    "theorem10_closed_form",
    "trivial_z",
    "twisted_z",
]
