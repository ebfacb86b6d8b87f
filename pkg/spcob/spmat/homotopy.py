"""Symplectic homotopies over Z[t] from the identity to block permutations.

f_n(t) places a 4x4 homotopy M(t) on blocks n, n+1 of an N-block space. The product
f_1(t) ... f_K(t) runs from the identity to the cyclic shift of the first K+1 blocks.
"""

import logging
from dataclasses import dataclass
from typing import Any

from spcob.core.errors import DomainError
from spcob.core.models import Outcome, Report
from spcob.spmat.matrix import TMatrix, block_permutation, is_symplectic, symplectic_defect
from spcob.spmat.tpoly import ONE, ZERO, TPoly

logger = logging.getLogger(__name__)

SWAP = block_permutation(2, [1, 0])


def explicit_homotopy_matrix() -> TMatrix:
    """The explicit 4x4 M(t) with M(0) = I and M(1) the block swap."""
    return TMatrix.of(
        [
            [TPoly.of(1, 0, -1), 0, TPoly.of(0, -2, 0, 13, 0, -14, 0, 4), TPoly.of(0, 0, 8, 0, -12, 0, 4)],
            [0, TPoly.of(1, 0, -1), TPoly.of(0, 0, -2, 0, 2), TPoly.of(0, -1, 0, 2)],
            [TPoly.of(0, 1), 0, TPoly.of(1, 0, -7, 0, 10, 0, -4), TPoly.of(0, -4, 0, 8, 0, -4)],
            [0, TPoly.of(0, 2, 0, -1), TPoly.of(0, 2, 0, -4, 0, 2), TPoly.of(1, 0, -3, 0, 2)],
        ]
    )


def _elementary(i: int, j: int, a: TPoly) -> TMatrix:
    rows = [[ONE if r == c else ZERO for c in range(4)] for r in range(4)]
    rows[i][j] = rows[i][j] + a
    return TMatrix.of(rows)


def _cross(i: int, j: int, k: int, l: int, a: TPoly) -> TMatrix:
    """I + a E_ij - a E_kl, the symplectic lift diag(E, E^{-T}) of a shear between planes."""
    return _elementary(i, j, a) @ _elementary(k, l, -a)


@dataclass(frozen=True)
class Factor:
    name: str
    matrix: TMatrix


def fallback_factors() -> list[Factor]:
    t = TPoly.of(0, 1)
    up = Factor("U23(t)", _elementary(2, 3, t))
    low = Factor("L32(-t)", _elementary(3, 2, -t))
    rotate = [up, low, up]
    shears = [
        Factor("X12(t)", _cross(0, 2, 3, 1, t)),
        Factor("X21(-t)", _cross(2, 0, 1, 3, -t)),
        Factor("X12(t)", _cross(0, 2, 3, 1, t)),
    ]
    return rotate + rotate + shears


def fallback_homotopy() -> TMatrix:
    """A product of elementary symplectic matrices equal to I at t = 0 and the block swap at t = 1."""
    out = TMatrix.identity(4)
    for f in fallback_factors():
        out = out @ f.matrix
    return out


def block_embed(n: int, N: int, core: TMatrix) -> TMatrix:
    """diag(I_{2n-2}, core, I) of size 2N, core on blocks n and n+1 (1-based)."""
    if core.size != 4:
        raise DomainError(f"core must be 4x4, got {core.size}")
    if n < 1 or n + 1 > N:
        raise DomainError(f"block_embed needs 1 <= n and n + 1 <= N, got n={n}, N={N}")
    size = 2 * N
    off = 2 * n - 2
    rows = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    for i in range(4):
        for j in range(4):
            rows[off + i][off + j] = core[i, j]
    return TMatrix.of(rows)


def shift_permutation(N: int, K: int) -> list[int]:
    """Compose the block transpositions (1 2)(2 3)...(K K+1) without matrices."""
    sigma = list(range(N))
    for n in range(K, 0, -1):
        a, b = n - 1, n
        sigma = [b if s == a else a if s == b else s for s in sigma]
    return sigma


def _prefix_products(N: int, K: int, core: TMatrix) -> list[TMatrix]:
    out = [TMatrix.identity(2 * N)]
    for n in range(1, K + 1):
        out.append(out[-1] @ block_embed(n, N, core))
    return out


def shift_homotopy_product(N: int, K: int, core: TMatrix | None = None) -> TMatrix:
    if K < 0 or K > N - 1:
        raise DomainError(f"shift product needs 0 <= K <= N - 1, got N={N}, K={K}")
    return _prefix_products(N, K, core or explicit_homotopy_matrix())[-1]


def _first_columns(M: TMatrix, count: int) -> list[tuple[TPoly, ...]]:
    return [M.column(j) for j in range(count)]


def _shift_checks(N: int, K: int, core: TMatrix) -> Outcome:
    prefixes = _prefix_products(N, K, core)
    P = prefixes[-1]
    if P.at(0) != TMatrix.identity(2 * N).at(0):
        return False, {"reason": "P(0) is not the identity", "P(0)": P.at(0)}
    expected = block_permutation(N, shift_permutation(N, K))
    if P.at(1) != expected.at(0):
        return False, {"reason": "P(1) is not the cyclic shift", "P(1)": P.at(1), "expected": expected.at(0)}
    if not is_symplectic(P):
        return False, {"reason": "P is not symplectic", "defect": _defect_entries(P)}
    det = P.det()
    if det != ONE:
        return False, {"reason": "det P is not 1", "det": list(det.coeffs)}
    for n in range(1, K + 1):
        first = _first_columns(prefixes[n], 2 * n)
        for M in range(n + 1, K + 1):
            if _first_columns(prefixes[M], 2 * n) != first:
                return False, {"reason": "first columns not stable", "n": n, "M": M}
        for j in (2 * n - 2, 2 * n - 1):
            below = [i for i, a in enumerate(prefixes[n].column(j)) if a and i >= 2 * n + 2]
            if below:
                return False, {"reason": "column support", "n": n, "column": j + 1, "rows": [i + 1 for i in below]}
    return True, None


def shift_product_report(N: int, K: int, core: TMatrix | None = None, label: str = "explicit") -> Report:
    if K < 0 or K > N - 1:
        raise DomainError(f"shift product needs 0 <= K <= N - 1, got N={N}, K={K}")
    core = core or explicit_homotopy_matrix()
    return Report.timed("spmat.shift_product", {"N": N, "K": K, "core": label}, lambda: _shift_checks(N, K, core))


def _defect_entries(M: TMatrix) -> list[dict[str, Any]]:
    return [{"row": i + 1, "col": j + 1, "value": str(a)} for i, j, a in symplectic_defect(M).nonzero_entries()]


def _endpoint_checks(M: TMatrix) -> Outcome:
    problems: dict[str, Any] = {}
    if M.at(0) != TMatrix.identity(4).at(0):
        problems["M(0)"] = M.at(0)
    if M.at(1) != SWAP.at(0):
        problems["M(1)"] = M.at(1)
    if not is_symplectic(M):
        problems["defect"] = _defect_entries(M)
    return (not problems), (problems or None)


def fallback_report() -> Report:
    def run() -> Outcome:
        ok, problems = _endpoint_checks(fallback_homotopy())
        witness: dict[str, Any] = {"factors": [f.name for f in fallback_factors()]}
        if problems:
            witness.update(problems)
        return ok, witness

    return Report.timed("spmat.fallback", {}, run)


def verify_explicit_matrix() -> Report:
    """Endpoints and the symplectic identity of M(t); a failure carries the discrepancy and the fallback."""

    def run() -> Outcome:
        ok, problems = _endpoint_checks(explicit_homotopy_matrix())
        if ok:
            return True, None
        logger.warning("explicit homotopy matrix failed verification: %s", sorted(problems))
        return False, {**problems, "fallback": fallback_report().to_json()}

    return Report.timed("spmat.explicit_matrix", {}, run)


def homotopy_core() -> tuple[TMatrix, str]:
    """The explicit M(t) when it verifies, the transvection product otherwise."""
    if verify_explicit_matrix().passed:
        return explicit_homotopy_matrix(), "explicit"
    return fallback_homotopy(), "fallback"
