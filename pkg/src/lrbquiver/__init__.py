"""Quivers, idempotents and Cartan invariants of left regular band algebras."""

from ._kernels import BACKEND
from .algebra import (
    AlgebraElement,
    CheckReport,
    IdempotentSystem,
    character,
    idempotent_basis,
    lattice_idempotents,
    multiply,
    projective_checks,
    radical_basis,
    radical_square_basis,
    semigroup_idempotents,
    subalgebra_checks,
    verify_cspoi,
)
from .cartan import (
    CartanMatrix,
    cartan_matrix,
    cartan_oracle,
    cartan_oracle_matrix,
    free_closed_form,
    over_set_count,
    path_dimension_check,
)
from .constructors import (
    arrangement_faces,
    boolean_arrangement,
    braid_arrangement,
    free_lrb,
    load_table,
    sign_product,
)
from .lattice import SupportLattice, SupportMap, compute_support, hasse_covers, interval, mobius, support_of
from .lrb import LeftRegularBand, natural_order, product, sub_lrb, validate_lrb
from .quiver import Quiver, arrow_count, arrow_count_inductive, build_quiver, count_paths, ext_dimension, to_dot

__all__ = [
    "BACKEND",
    "AlgebraElement",
    "CheckReport",
    "IdempotentSystem",
    "character",
    "idempotent_basis",
    "lattice_idempotents",
    "multiply",
    "projective_checks",
    "radical_basis",
    "radical_square_basis",
    "semigroup_idempotents",
    "subalgebra_checks",
    "verify_cspoi",
    "CartanMatrix",
    "cartan_matrix",
    "cartan_oracle",
    "cartan_oracle_matrix",
    "free_closed_form",
    "over_set_count",
    "path_dimension_check",
    "arrangement_faces",
    "boolean_arrangement",
    "braid_arrangement",
    "free_lrb",
    "load_table",
    "sign_product",
    "SupportLattice",
    "SupportMap",
    "compute_support",
    "hasse_covers",
    "interval",
    "mobius",
    "support_of",
    "LeftRegularBand",
    "natural_order",
    "product",
    "sub_lrb",
    "validate_lrb",
    "Quiver",
    "arrow_count",
    "arrow_count_inductive",
    "build_quiver",
    "count_paths",
    "ext_dimension",
    "to_dot",
]

__version__ = "0.1.0"
