"""Exact-arithmetic invariants of lattice polytopes.

The package computes, over the integers and rationals only, the alternating
face-volume invariants c_t, the Ehrhart-convolution polynomial f, smoothness
and defect predicates, and the standard constructions (prisms, pyramids,
hypersimplices, Cayley polytopes) used to probe them.
"""

from .constructions import (
    VertexCapError,
    cayley,
    cube,
    hypersimplex,
    lattice_equivalent,
    lattice_pyramid,
    prism,
    product,
    r_fold_pyramid,
    simplex,
    unimodular_image,
)
from .geometry import (
    count_lattice_points,
    dilate,
    ehrhart,
    is_smooth,
    lattice_points,
    normalized_volume,
    search_width_one,
    width,
)
from .invariants import (
    InvariantReport,
    ct_invariant,
    f_poly,
    is_defect,
    pyramid_ct_closed_form,
    report,
)
from .polyfile import PolytopeParseError, parse, serialize
from .polynomial import Polynomial, interpolate
from .polytope import Face, FaceLattice, Polytope

__version__ = "0.1.0"

__all__ = [
    "Polytope",
    "Face",
    "FaceLattice",
    "Polynomial",
    "interpolate",
    "simplex",
    "cube",
    "prism",
    "lattice_pyramid",
    "r_fold_pyramid",
    "hypersimplex",
    "cayley",
    "product",
    "unimodular_image",
    "lattice_equivalent",
    "VertexCapError",
    "normalized_volume",
    "lattice_points",
    "count_lattice_points",
    "dilate",
    "ehrhart",
    "is_smooth",
    "width",
    "search_width_one",
    "ct_invariant",
    "f_poly",
    "pyramid_ct_closed_form",
    "is_defect",
    "InvariantReport",
    "report",
    "parse",
    "serialize",
    "PolytopeParseError",
]
