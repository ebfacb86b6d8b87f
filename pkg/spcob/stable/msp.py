"""A(MSp) = Z[[p_1, p_2, ...]] truncated at degree D, where only p_1..p_D can appear."""

from spcob.core.errors import DomainError
from spcob.core.models import Outcome, Report
from spcob.core.types import Exponents
from spcob.lib import linalg
from spcob.stable.whitney import coproduct
from spcob.stable.series import HomSeries, SeriesRing, bsp, monomials
from spcob.stable.thom import restrict
from spcob.symfun.partitions import partitions_of


def msp_ring(D: int) -> SeriesRing:
    if D < 0:
        raise DomainError(f"truncation must be nonnegative: {D}")
    return bsp(max(D, 1), D)


def msp_basis(D: int, d: int) -> list[Exponents]:
    """Monomial basis of the degree-d piece; empty above the truncation."""
    if d > D:
        return []
    return monomials(msp_ring(D), d)


def _tower(D: int) -> Outcome:
    for d in range(D + 1):
        for r in range(2, D + 2):
            src, dst = bsp(r, D), bsp(r - 1, D)
            cols = monomials(src, d)
            rows = monomials(dst, d)
            index = {m: i for i, m in enumerate(rows)}
            matrix = [[0] * len(cols) for _ in rows]
            for j, m in enumerate(cols):
                for e, c in restrict(HomSeries.monomial(src, m)).terms.items():
                    matrix[index[e]][j] += c
            if linalg.rank(matrix, len(cols)) != len(rows):
                return False, {"degree": d, "r": r, "reason": "p_r -> 0 is not surjective"}
            if r > d and len(cols) != len(rows):
                return False, {"degree": d, "r": r, "reason": "degree piece has not stabilized"}
        expected = len(partitions_of(d, d, d))
        got = len(msp_basis(D, d))
        if got != expected:
            return False, {"degree": d, "rank": got, "partitions": expected}
    return True, None


def msp_tower_check(D: int) -> Report:
    if D < 0:
        raise DomainError(f"truncation must be nonnegative: {D}")
    return Report.timed("stable.msp_tower", {"D": D}, lambda: _tower(D))


def msp_coproduct(x: HomSeries, D: int) -> HomSeries:
    """Into Z[[p', p'']] with D variables on each side."""
    R = msp_ring(D)
    if x.ring.names != R.names[: x.ring.nvars]:
        raise DomainError(f"{x.ring} is not a truncation of {R}")
    r = max(D, 1)
    return coproduct(x, r, r, D)
