from spcob.grass.maps import (
    alpha_map,
    beta_map,
    ideal_certificate,
    ideal_generators,
    length_truncation,
    thom_inclusion,
    thom_inclusion_by_product,
)
from spcob.grass.ring import (
    GrassElem,
    GrassRing,
    basis,
    bidegree,
    generator,
    hp_power,
    lift,
    multiply,
    normal_form,
    rank,
    truncate,
)

__all__ = [
    "GrassElem",
    "GrassRing",
    "alpha_map",
    "basis",
    "beta_map",
    "bidegree",
    "generator",
    "hp_power",
    "ideal_certificate",
    "ideal_generators",
    "length_truncation",
    "lift",
    "multiply",
    "normal_form",
    "rank",
    "thom_inclusion",
    "thom_inclusion_by_product",
    "truncate",
]
