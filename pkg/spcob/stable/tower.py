"""Z[[p_1..p_r]] as the limit of the HGr(r, n) rings, checked one truncation at a time.

Injectivity in degree d needs d <= n - r; the monomials of degree above r(n - r) all die.
"""

import logging
from typing import Any

from spcob.core.errors import DomainError
from spcob.core.models import Outcome, Report
from spcob.core.types import Exponents
from spcob.grass.maps import alpha_map, ideal_certificate, ideal_generators
from spcob.grass.ring import GrassElem, GrassRing, lift, normal_form
from spcob.lib import linalg
from spcob.stable.series import HomSeries, bsp, monomials
from spcob.symfun.codec import partition_out
from spcob.symfun.partitions import partitions_of
from spcob.symfun.polys import EPoly

logger = logging.getLogger(__name__)


def to_grass(x: HomSeries, R: GrassRing) -> GrassElem:
    """p_i -> e_i, the restriction A(BSp_2r) -> A(HGr(r, n))."""
    if x.ring.nvars != R.r or x.ring.weights != tuple(range(1, R.r + 1)):
        raise DomainError(f"{x.ring} is not the Pontryagin series ring of {R}")
    return normal_form(EPoly.from_terms(R.r, x.terms), R)


def image_matrix(R: GrassRing, d: int) -> tuple[list[Exponents], list[list[int]]]:
    """Columns: degree-d p-monomials; rows: Schur basis classes of degree d in R."""
    S = bsp(R.r, d)
    cols = monomials(S, d)
    rows = partitions_of(d, R.r, R.width)
    images = [to_grass(HomSeries.monomial(S, m), R).vec for m in cols]
    return cols, [[img.coefficient(lam) for img in images] for lam in rows]


def injective_in_degree(R: GrassRing, d: int) -> Outcome:
    cols, matrix = image_matrix(R, d)
    ok, kernel = linalg.full_column_rank(matrix, len(cols))
    if ok:
        return True, None
    return False, {"ring": R.to_json(), "degree": d, "monomials": [list(m) for m in cols], "kernel": kernel}


def _tower(r: int, D: int) -> Outcome:
    ns = range(r + D, r + D + 3)
    for n in ns:
        R = GrassRing(r, n)
        for d in range(D + 1):
            ok, witness = injective_in_degree(R, d)
            if not ok:
                return False, witness
    S = bsp(r, D)
    for n in ns[:-1]:
        small, big = GrassRing(r, n), GrassRing(r, n + 1)
        for d in range(D + 1):
            for m in monomials(S, d):
                x = HomSeries.monomial(S, m)
                if alpha_map(to_grass(x, big)) != to_grass(x, small):
                    return False, {"n": n, "monomial": list(m), "reason": "alpha_map does not commute"}
    return True, None


def limit_from_tower(r: int, D: int) -> Report:
    if r < 1 or D < 0:
        raise DomainError(f"tower check needs r >= 1 and D >= 0, got r={r}, D={D}")
    report = Report.timed("stable.tower", {"r": r, "D": D}, lambda: _tower(r, D))
    logger.debug("tower r=%d D=%d pass=%s", r, D, report.passed)
    return report


def _certificate_holds(p: EPoly, R: GrassRing) -> bool:
    qs = ideal_certificate(p, R)
    total = lift(normal_form(p, R))
    for q, h in zip(qs, ideal_generators(R), strict=True):
        total = total + q * h
    return total == p


def _sandwich(r: int, n: int) -> Outcome:
    R = GrassRing(r, n)
    S = bsp(r, R.top_degree + r)
    for d in range(R.top_degree + 1, R.top_degree + r + 1):
        for m in monomials(S, d):
            p = EPoly.monomial(r, m)
            if normal_form(p, R):
                return False, {"side": "upper", "degree": d, "monomial": list(m)}
            if not _certificate_holds(p, R):
                return False, {"side": "certificate", "degree": d, "monomial": list(m)}
    for d in range(R.width + 1):
        ok, witness = injective_in_degree(R, d)
        if not ok:
            return False, {"side": "lower", **witness}
    return True, None


def sandwich_check(r: int, n: int) -> Report:
    """I_{r(n-r)+1} inside (h_{n-r+1}..h_n) inside I_{n-r+1}."""
    if r < 1:
        raise DomainError(f"sandwich check needs r >= 1, got {r}")
    return Report.timed("stable.sandwich", {"r": r, "n": n}, lambda: _sandwich(r, n))


def identification(r: int, D: int, n: int) -> dict[str, Any]:
    """Where each degree-<=D monomial lands in A(HGr(r, n))."""
    S = bsp(r, D)
    R = GrassRing(r, n)
    out = []
    for d in range(D + 1):
        for m in monomials(S, d):
            img = to_grass(HomSeries.monomial(S, m), R)
            out.append({"monomial": list(m), "image": [[partition_out(lam), str(c)] for lam, c in img.vec.items]})
    return {"ring": R.to_json(), "trunc": D, "images": out}
