"""Exact h*-polynomials, lattice pyramids and circuits of lattice polytopes."""

from .box import BoxPoint, EmbeddedSimplex, enumerate_box_points, fold_box_points, hstar_from_box, simplex_support
from .circuits import Circuit, check_circuit_bound, combinatorial_pyramid_apexes, enumerate_circuits
from .ehrhart import (
    HStarPolynomial,
    codegree,
    codegree_by_interior,
    degree,
    hstar,
    hstar_via_interpolation,
    normalized_volume,
)
from .errors import InvariantError, SingularMatrixError
from .generators import CorpusSpec, paper_example, random_corpus, standard_simplex, unit_cube
from .greedy import GreedyTrace, greedy_trace, verify_greedy_claim
from .polytope import (
    HRepresentation,
    LatticePolytope,
    PolytopeInputError,
    dimension,
    hrep,
    interior_lattice_points,
    lattice_points,
    make_polytope,
)
from .pyramids import PyramidDecomposition, decompose, is_apex_general, is_apex_simplex, standard_pyramid

__version__ = "0.1.0"
