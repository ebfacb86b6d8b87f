from spcob.symfun.partitions import (
    Partition,
    add_full_column,
    conjugate,
    enumerate_box,
    partitions_of,
    remove_full_column,
    weight,
)
from spcob.symfun.polys import EPoly, XPoly
from spcob.symfun.schur import (
    SchurVector,
    e_poly,
    elementary_x,
    epoly_to_schur,
    epoly_to_x,
    h_expand_x,
    h_poly,
    multiply_schur,
    schur_alternant,
    schur_jt_e,
    schur_jt_h,
    schur_to_epoly,
    schur_to_x,
    xpoly_to_schur,
)

__all__ = [
    "EPoly",
    "Partition",
    "SchurVector",
    "XPoly",
    "add_full_column",
    "conjugate",
    "e_poly",
    "elementary_x",
    "enumerate_box",
    "epoly_to_schur",
    "epoly_to_x",
    "h_expand_x",
    "h_poly",
    "multiply_schur",
    "partitions_of",
    "remove_full_column",
    "schur_alternant",
    "schur_jt_e",
    "schur_jt_h",
    "schur_to_epoly",
    "schur_to_x",
    "weight",
    "xpoly_to_schur",
]
