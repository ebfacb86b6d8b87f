from spcob.pclass.bundle import FormalBundle, PontVector, cartan_sum, pont_from_roots, total_class
from spcob.pclass.projective import (
    ZETA,
    hp_coordinates,
    hp_relation,
    perp_classes,
    perp_consistent,
    reduce_mod_relation,
)
from spcob.pclass.thom import thom_class, thom_multiplicativity, thom_top_sign

__all__ = [
    "ZETA",
    "FormalBundle",
    "PontVector",
    "cartan_sum",
    "hp_coordinates",
    "hp_relation",
    "perp_classes",
    "perp_consistent",
    "pont_from_roots",
    "reduce_mod_relation",
    "thom_class",
    "thom_multiplicativity",
    "thom_top_sign",
    "total_class",
]
