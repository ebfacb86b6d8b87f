"""The quaternionic projective bundle HP(E) of a rank-2n bundle.

A(HP(E)) is free over the base on 1, zeta, ..., zeta^{n-1}, with zeta = p_1 of the
tautological rank-2 subbundle U subject to one monic relation of degree n.
"""

import logging

import sympy as sp

from spcob.core.errors import ConsistencyError, DomainError
from spcob.pclass.bundle import PontVector, cartan_sum

logger = logging.getLogger(__name__)

ZETA = sp.Symbol("zeta")


def hp_relation(pv: PontVector, zeta: sp.Symbol = ZETA) -> sp.Expr:
    """zeta^n - p_1 zeta^{n-1} + p_2 zeta^{n-2} - ... + (-1)^n p_n."""
    n = pv.rank
    return sp.expand(sum(((-1) ** k * pv.p(k) * zeta ** (n - k) for k in range(n + 1)), sp.Integer(0)))


def reduce_mod_relation(expr: sp.Expr, pv: PontVector, zeta: sp.Symbol = ZETA) -> sp.Expr:
    """Normal form with zeta-degree below n, by repeatedly cancelling the leading zeta power."""
    n = pv.rank
    relation = hp_relation(pv, zeta)
    f = sp.expand(expr)
    while f != 0 and sp.degree(f, zeta) >= n:
        d = int(sp.degree(f, zeta))
        lead = f.coeff(zeta, d)
        f = sp.expand(f - lead * zeta ** (d - n) * relation)
    return f


def hp_coordinates(expr: sp.Expr, pv: PontVector, zeta: sp.Symbol = ZETA) -> list[sp.Expr]:
    """Coefficients of 1, zeta, ..., zeta^{n-1} in the reduced form."""
    f = reduce_mod_relation(expr, pv, zeta)
    return [sp.expand(f.coeff(zeta, k)) for k in range(pv.rank)]


def perp_classes(pv: PontVector, zeta: sp.Symbol = ZETA) -> PontVector:
    """Classes of the complement of U in the pulled-back bundle, reduced modulo the relation."""
    n = pv.rank
    if n < 1:
        raise DomainError("perp classes need a bundle of rank at least 2")

    def raw(j: int) -> sp.Expr:
        return sum((pv.p(j - k) * (-zeta) ** k for k in range(j + 1)), sp.Integer(0))

    top = reduce_mod_relation(raw(n), pv, zeta)
    if top != 0:
        raise ConsistencyError("perp_classes", f"p_{n} of the complement reduces to {top}")
    classes = [reduce_mod_relation(raw(j), pv, zeta) for j in range(n)]
    logger.debug("perp classes rank %d: %s", n, classes)
    return PontVector.of(classes)


def perp_consistent(pv: PontVector, zeta: sp.Symbol = ZETA) -> bool:
    """U plus its complement gives back the original classes modulo the relation."""
    rebuilt = cartan_sum(PontVector.of([1, zeta]), perp_classes(pv, zeta))
    return all(
        reduce_mod_relation(rebuilt.p(i) - pv.p(i), pv, zeta) == 0 for i in range(max(rebuilt.rank, pv.rank) + 1)
    )
