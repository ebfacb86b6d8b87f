from spcob.spmat.homotopy import (
    block_embed,
    fallback_homotopy,
    explicit_homotopy_matrix,
    shift_homotopy_product,
    shift_permutation,
    shift_product_report,
    verify_explicit_matrix,
)
from spcob.spmat.matrix import TMatrix, block_permutation, is_symplectic, omega, symplectic_defect
from spcob.spmat.tpoly import TPoly

__all__ = [
    "TMatrix",
    "TPoly",
    "block_embed",
    "block_permutation",
    "fallback_homotopy",
    "is_symplectic",
    "omega",
    "explicit_homotopy_matrix",
    "shift_homotopy_product",
    "shift_permutation",
    "shift_product_report",
    "symplectic_defect",
    "verify_explicit_matrix",
]
