"""The Whitney coproduct A(BSp) -> A(BSp x BSp), p_i -> sum_j p'_{i-j} p''_j."""

import logging
from collections.abc import Sequence
from itertools import combinations

from spcob.core.errors import DomainError
from spcob.core.models import Outcome, Report
from spcob.core.types import Exponents
from spcob.lib import linalg
from spcob.stable.series import HomSeries, SeriesRing, blocks, bsp, monomials, substitute
from spcob.symfun.polys import XPoly
from spcob.symfun.schur import elementary_x

logger = logging.getLogger(__name__)


def whitney_sum(i: int, left: Sequence[HomSeries], right: Sequence[HomSeries], target: SeriesRing) -> HomSeries:
    """p_i of a direct sum, with p_0 = 1 and classes beyond the rank equal to 0."""

    def cls(classes: Sequence[HomSeries], k: int) -> HomSeries | None:
        if k == 0:
            return HomSeries.one(target)
        return classes[k - 1] if k <= len(classes) else None

    total = HomSeries.zero(target)
    for j in range(i + 1):
        a, b = cls(left, i - j), cls(right, j)
        if a is not None and b is not None:
            total = total + a * b
    return total


def _check_source(R: SeriesRing, r: int, s: int) -> None:
    if r < 1 or s < 1:
        raise DomainError(f"coproduct needs r, s >= 1, got r={r}, s={s}")
    if R.weights != tuple(range(1, R.nvars + 1)):
        raise DomainError(f"{R} is not a Pontryagin series ring")
    if R.nvars > r + s:
        raise DomainError(f"{R} has more than r+s={r + s} variables")


def coproduct(x: HomSeries, r: int, s: int, D: int) -> HomSeries:
    _check_source(x.ring, r, s)
    target = blocks([r, s], D)
    left = [HomSeries.gen(target, k) for k in range(1, r + 1)]
    right = [HomSeries.gen(target, r + k) for k in range(1, s + 1)]
    images = [whitney_sum(i, left, right, target) for i in range(1, x.ring.nvars + 1)]
    return substitute(x, images, target)


def _block_elementary(i: int, lo: int, hi: int, total: int) -> XPoly:
    """e_i(t_lo..t_{hi-1}) inside Z[t_0..t_{total-1}]."""
    terms = {tuple(int(k in chosen) for k in range(total)): 1 for chosen in combinations(range(lo, hi), i)}
    return XPoly.from_terms(total, terms)


def _to_roots(y: HomSeries, r: int, s: int) -> XPoly:
    """p'_i -> e_i(t_1..t_r), p''_j -> e_j(t_{r+1}..t_{r+s})."""
    n = r + s
    gens = [_block_elementary(i, 0, r, n) for i in range(1, r + 1)]
    gens += [_block_elementary(j, r, n, n) for j in range(1, s + 1)]
    total = XPoly.zero(n)
    for expv, c in y.items():
        term = XPoly.constant(n, c)
        for g, a in zip(gens, expv, strict=True):
            if a:
                term = term * g**a
        total = total + term
    return total


def _dominant(expv: Exponents) -> bool:
    return all(expv[k] >= expv[k + 1] for k in range(len(expv) - 1))


def _injectivity(r: int, s: int, D: int) -> Outcome:
    n = r + s
    source = bsp(n, D)
    for i in range(1, min(n, D) + 1):
        composite = _to_roots(coproduct(HomSeries.gen(source, i), r, s, D), r, s)
        if composite != elementary_x(i, n):
            return False, {"generator": i, "reason": "composite is not e_i(t)", "got": str(composite)}
    for d in range(D + 1):
        cols = monomials(source, d)
        images = [_to_roots(coproduct(HomSeries.monomial(source, m), r, s, D), r, s) for m in cols]
        rows = sorted({e for img in images for e in img.terms if _dominant(e)}, reverse=True)
        matrix = [[img.coefficient(e) for img in images] for e in rows]
        ok, kernel = linalg.full_column_rank(matrix, len(cols))
        if not ok:
            return False, {"degree": d, "monomials": [list(m) for m in cols], "kernel": kernel}
    return True, None


def coproduct_injectivity(r: int, s: int, D: int) -> Report:
    if r < 1 or s < 1 or D < 0:
        raise DomainError(f"injectivity check needs r, s >= 1 and D >= 0, got r={r}, s={s}, D={D}")
    report = Report.timed("stable.injectivity", {"r": r, "s": s, "D": D}, lambda: _injectivity(r, s, D))
    logger.debug("coproduct injectivity r=%d s=%d D=%d pass=%s", r, s, D, report.passed)
    return report


def _coassoc(r: int, s: int, u: int, D: int) -> Outcome:
    source = bsp(r + s + u, D)
    T = blocks([r, s, u], D)
    A = [HomSeries.gen(T, k) for k in range(1, r + 1)]
    B = [HomSeries.gen(T, r + k) for k in range(1, s + 1)]
    C = [HomSeries.gen(T, r + s + k) for k in range(1, u + 1)]
    first = [whitney_sum(k, A, B, T) for k in range(1, r + s + 1)] + C
    second = A + [whitney_sum(k, B, C, T) for k in range(1, s + u + 1)]
    for i in range(1, min(r + s + u, D) + 1):
        p = HomSeries.gen(source, i)
        left = substitute(coproduct(p, r + s, u, D), first, T)
        right = substitute(coproduct(p, r, s + u, D), second, T)
        if left != right:
            return False, {"generator": i, "left": str(left), "right": str(right)}
    return True, None


def coproduct_coassociativity(r: int, s: int, u: int, D: int) -> Report:
    if min(r, s, u) < 1 or D < 0:
        raise DomainError("coassociativity check needs r, s, u >= 1 and D >= 0")
    params = {"r": r, "s": s, "u": u, "D": D}
    return Report.timed("stable.coassoc", params, lambda: _coassoc(r, s, u, D))


def _thom_compat(r: int, s: int, D: int) -> Outcome:
    n = r + s
    source = bsp(n, D)
    target = blocks([r, s], D)
    top = HomSeries.gen(source, n)
    if n <= D:
        expected = HomSeries.gen(target, r) * HomSeries.gen(target, n)
        got = coproduct(top, r, s, D)
        if got != expected:
            return False, {"reason": "p_{r+s} does not go to p'_r p''_s", "got": str(got)}
    for d in range(D - n + 1):
        for m in monomials(source, d):
            y = coproduct(top * HomSeries.monomial(source, m), r, s, D)
            if not (y.divisible_by(r) and y.divisible_by(n)):
                return False, {"monomial": list(m), "image": str(y)}
    return True, None


def coproduct_thom_compatibility(r: int, s: int, D: int) -> Report:
    if r < 1 or s < 1 or D < 0:
        raise DomainError("thom compatibility check needs r, s >= 1 and D >= 0")
    return Report.timed("stable.thom_compat", {"r": r, "s": s, "D": D}, lambda: _thom_compat(r, s, D))


def _expected_images(r: int, s: int, target: SeriesRing) -> dict[int, HomSeries]:
    """p_1 -> p'_1 + p''_1, p_2 -> p'_2 + p'_1 p''_1 + p''_2, p_{r+s} -> p'_r p''_s."""

    def left(k: int) -> HomSeries:
        return HomSeries.gen(target, k) if k <= r else HomSeries.zero(target)

    def right(k: int) -> HomSeries:
        return HomSeries.gen(target, r + k) if k <= s else HomSeries.zero(target)

    return {
        1: left(1) + right(1),
        2: left(2) + left(1) * right(1) + right(2),
        r + s: left(r) * right(s),
    }


def _generator_images(r: int, s: int, D: int) -> Outcome:
    source = bsp(r + s, D)
    target = blocks([r, s], D)
    for i, expected in sorted(_expected_images(r, s, target).items()):
        if i > D:
            continue
        got = coproduct(HomSeries.gen(source, i), r, s, D)
        if got != expected:
            return False, {"generator": i, "expected": str(expected), "got": str(got)}
    return True, None


def coproduct_generator_images(r: int, s: int, D: int) -> Report:
    """Images of p_1, p_2 and p_{r+s} against their closed forms."""
    if r < 1 or s < 1 or D < 0:
        raise DomainError("generator image check needs r, s >= 1 and D >= 0")
    return Report.timed("stable.generator_images", {"r": r, "s": s, "D": D}, lambda: _generator_images(r, s, D))
