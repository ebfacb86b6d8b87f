import sympy as sp

from spcob.core.errors import DomainError
from spcob.pclass.bundle import PontVector, cartan_sum


def thom_top_sign(r: int) -> int:
    """p_r(F) = (-1)^r z*th(F) for a rank-2r bundle."""
    if r < 1:
        raise DomainError(f"thom_top_sign needs r >= 1, got {r}")
    return -1 if r % 2 else 1


def thom_class(pv: PontVector) -> sp.Expr:
    """Restriction of the Thom class to the zero section: (-1)^r p_r."""
    if pv.rank == 0:
        return sp.Integer(1)
    return sp.expand(thom_top_sign(pv.rank) * pv.p(pv.rank))


def thom_multiplicativity(a: PontVector, b: PontVector) -> bool:
    return sp.expand(thom_class(cartan_sum(a, b)) - thom_class(a) * thom_class(b)) == 0
