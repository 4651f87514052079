"""chowtool: exact analysis of integral polytopes and asymptotic Chow
stability of the corresponding polarized toric varieties."""

from .geometry import (
    Polytope,
    Facet,
    facets,
    lattice_points,
    interior_lattice_points,
    boundary_lattice_points,
    volume,
    boundary_volume,
    centroid,
    is_reflexive,
    product,
    dual,
    double_cone,
    lattice_shells,
)
from .ehrhart import count, ehrhart_polynomial, moment_sum, EhrhartPolynomial
from .symmetry import (
    AffineFunctional,
    automorphisms,
    is_symmetric,
    fo_invariant,
    is_weakly_symmetric,
)
from .triangulation import (
    LatticeSimplex,
    Triangulation,
    standard_simplex_triangulation,
    boundary_triangulation,
    cone_over_boundary,
    full_triangulation,
    verify_regular_boundary,
    incidence,
)
from .stability import (
    PLFunction,
    StabilityVerdict,
    chow_gap,
    double_cone_instability,
    vertex_cap_instability,
    check_special,
    check_sufficient,
    falsify,
    classify,
    POLYSTABLE,
    NOT_SEMISTABLE,
    INCONCLUSIVE,
)
from .toricgen import relation_basis, binomial_equations, BinomialEquation
from . import catalog

__all__ = [
    "Polytope",
    "Facet",
    "facets",
    "lattice_points",
    "interior_lattice_points",
    "boundary_lattice_points",
    "volume",
    "boundary_volume",
    "centroid",
    "is_reflexive",
    "product",
    "dual",
    "double_cone",
    "lattice_shells",
    "count",
    "ehrhart_polynomial",
    "moment_sum",
    "EhrhartPolynomial",
    "AffineFunctional",
    "automorphisms",
    "is_symmetric",
    "fo_invariant",
    "is_weakly_symmetric",
    "LatticeSimplex",
    "Triangulation",
    "standard_simplex_triangulation",
    "boundary_triangulation",
    "cone_over_boundary",
    "full_triangulation",
    "verify_regular_boundary",
    "incidence",
    "PLFunction",
    "StabilityVerdict",
    "chow_gap",
    "double_cone_instability",
    "vertex_cap_instability",
    "check_special",
    "check_sufficient",
    "falsify",
    "classify",
    "POLYSTABLE",
    "NOT_SEMISTABLE",
    "INCONCLUSIVE",
    "relation_basis",
    "binomial_equations",
    "BinomialEquation",
    "catalog",
]

__version__ = "0.1.0"
