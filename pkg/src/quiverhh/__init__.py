"""Exact-arithmetic engine for quiver DG-algebras: Ginzburg and Legendrian
contact DG-algebras of trees, zigzag and preprojective algebras, bigraded
Hochschild cohomology, Koszul duality and deformation obstructions."""

from __future__ import annotations

from .fields import FieldSpec, QQ, GF
from .linalg import SparseMatrix, rank, kernel_and_solve, kernel_dim, NoSolution
from .signs import SignConvention, DEFAULT_SIGNS, sign_of
from .quiver import (Tree, RootedQuiver, DynkinClass, standard_form, classify,
                     derived_quivers, path_tree, star_tree, dynkin_tree,
                     load_tree, tree_from_json)
from .pathalg import (GeneratorSymbol, Word, AlgebraElement,
                      FiniteGradedAlgebra, QuadraticData, zigzag,
                      preprojective, zigzag_quadratic_data, quadratic_dual,
                      center_dims)
from .dga import (FreeDGA, CohomologyTable, FilteredCohomology, build_dga,
                  apply_differential, cohomology_bigraded, cohomology_filtered,
                  GINZBURG, LCA_STANDARD, LCA_DN)
from .ncgb import (NCPoly, DegLex, GroebnerBasis, QuotientDims, groebner,
                   normal_form, quotient_dims, normal_words, ideal_equal,
                   corner_ideals, alternating_word)

__all__ = [
    "FieldSpec", "QQ", "GF",
    "SparseMatrix", "rank", "kernel_and_solve", "kernel_dim", "NoSolution",
    "SignConvention", "DEFAULT_SIGNS", "sign_of",
    "Tree", "RootedQuiver", "DynkinClass", "standard_form", "classify",
    "derived_quivers", "path_tree", "star_tree", "dynkin_tree",
    "load_tree", "tree_from_json",
    "GeneratorSymbol", "Word", "AlgebraElement", "FiniteGradedAlgebra",
    "QuadraticData", "zigzag", "preprojective", "zigzag_quadratic_data",
    "quadratic_dual", "center_dims",
    "FreeDGA", "CohomologyTable", "FilteredCohomology", "build_dga",
    "apply_differential", "cohomology_bigraded", "cohomology_filtered",
    "GINZBURG", "LCA_STANDARD", "LCA_DN",
    "NCPoly", "DegLex", "GroebnerBasis", "QuotientDims", "groebner",
    "normal_form", "quotient_dims", "normal_words", "ideal_equal",
    "corner_ideals", "alternating_word",
]

__version__ = "0.1.0"
