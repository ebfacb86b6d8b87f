from spcob.stable.whitney import (
    coproduct,
    coproduct_coassociativity,
    coproduct_generator_images,
    coproduct_injectivity,
    coproduct_thom_compatibility,
    whitney_sum,
)
from spcob.stable.msp import msp_basis, msp_coproduct, msp_ring, msp_tower_check
from spcob.stable.series import HomSeries, SeriesRing, blocks, bsp, monomials, series_in, substitute
from spcob.stable.thom import ThomIdealElem, restrict, thom_ideal_check, thom_ideal_embed
from spcob.stable.tower import identification, limit_from_tower, sandwich_check, to_grass

__all__ = [
    "HomSeries",
    "SeriesRing",
    "ThomIdealElem",
    "blocks",
    "bsp",
    "coproduct",
    "coproduct_coassociativity",
    "coproduct_generator_images",
    "coproduct_injectivity",
    "coproduct_thom_compatibility",
    "identification",
    "limit_from_tower",
    "monomials",
    "msp_basis",
    "msp_coproduct",
    "msp_ring",
    "msp_tower_check",
    "restrict",
    "sandwich_check",
    "series_in",
    "substitute",
    "thom_ideal_check",
    "thom_ideal_embed",
    "to_grass",
    "whitney_sum",
]
