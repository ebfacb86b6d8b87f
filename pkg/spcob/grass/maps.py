"""Stabilization maps between quaternionic Grassmannian rings and the Thom-module inclusion."""

import logging

from spcob.core.errors import DomainError
from spcob.grass.ring import GrassElem, GrassRing, lift, normal_form, truncate
from spcob.lib.cache import memoize
from spcob.lib.linalg import cofactor_det
from spcob.symfun.partitions import Partition, add_full_column
from spcob.symfun.polys import EPoly
from spcob.symfun.schur import SchurVector, e_poly, epoly_to_schur, h_poly

logger = logging.getLogger(__name__)


def alpha_map(x: GrassElem) -> GrassElem:
    """HGr(r, n) -> HGr(r, n+1) pulled back: the surjection killing h_{n-r+1}."""
    R = x.ring
    if R.n == R.r:
        raise DomainError(f"alpha_map needs a source HGr(r, n+1) with n >= r, got {R}")
    return truncate(x.vec, GrassRing(R.r, R.n - 1))


def beta_map(x: GrassElem) -> GrassElem:
    """HGr(r, n) -> HGr(r+1, n+1) pulled back: e_{r+1} -> 0, i.e. drop s_lam with l(lam) = r+1."""
    R = x.ring
    if R.r == 0:
        raise DomainError(f"beta_map needs a source HGr(r+1, n+1), got {R}")
    target = GrassRing(R.r - 1, R.n - 1)
    kept = x.vec.filter(lambda lam: len(lam) <= target.r)
    return GrassElem(target, kept.with_vars(target.r))


def length_truncation(x: GrassElem) -> GrassElem:
    """The quotient map of the Thom exact sequence, GrassRing(r, n) -> GrassRing(r-1, n-1)."""
    return beta_map(x)


def thom_source(R: GrassRing) -> GrassRing:
    """Z[e]/(h_{n-r}..h_{n-1}), the domain of multiplication by e_r into R."""
    return GrassRing(R.r, R.n - 1)


def thom_inclusion(v: GrassElem) -> GrassElem:
    """s_mu -> s_{mu + (1^r)}, landing in GrassRing(r, n) from GrassRing(r, n-1)."""
    S = v.ring
    if S.r == 0:
        raise DomainError("thom_inclusion needs r >= 1")
    target = GrassRing(S.r, S.n + 1)
    moved = [(add_full_column(mu, S.r), c) for mu, c in v.vec.items]
    return GrassElem(target, SchurVector.from_terms(S.r, moved))


def thom_inclusion_by_product(v: GrassElem) -> GrassElem:
    S = v.ring
    if S.r == 0:
        raise DomainError("thom_inclusion needs r >= 1")
    target = GrassRing(S.r, S.n + 1)
    return normal_form(e_poly(S.r, S.r) * lift(v), target)


@memoize
def _h_certificate(k: int, R: GrassRing) -> tuple[EPoly, ...]:
    low = R.n - R.r + 1
    if k < low:
        raise DomainError(f"h_{k} is not in the ideal (h_{low}..h_{R.n})")
    if k <= R.n:
        return tuple(EPoly.one(R.r) if low + i == k else EPoly.zero(R.r) for i in range(R.r))
    out = [EPoly.zero(R.r)] * R.r
    for i in range(1, R.r + 1):
        sign = 1 if i % 2 == 1 else -1
        for j, q in enumerate(_h_certificate(k - i, R)):
            out[j] = out[j] + e_poly(i, R.r) * q * sign
    return tuple(out)


@memoize
def _schur_certificate(lam: Partition, R: GrassRing) -> tuple[EPoly, ...]:
    """Expand s_lam = det(h_{lam_i - i + j}) along its first row, whose entries all lie in the ideal."""
    r = R.r
    padded = list(lam) + [0] * (r - len(lam))
    grid = [[h_poly(padded[i] - i + j, r) for j in range(r)] for i in range(r)]
    out = [EPoly.zero(r)] * r
    for j in range(r):
        minor = [[row[c] for c in range(r) if c != j] for row in grid[1:]]
        cofactor = cofactor_det(minor, EPoly.zero(r), EPoly.one(r))
        if j % 2:
            cofactor = -cofactor
        for i, q in enumerate(_h_certificate(padded[0] + j, R)):
            out[i] = out[i] + cofactor * q
    return tuple(out)


def ideal_certificate(p: EPoly, R: GrassRing) -> list[EPoly]:
    """q_1..q_r with p = lift(normal_form(p)) + sum q_i * h_{n-r+i}."""
    if R.r == 0 or p.r != R.r:
        raise DomainError(f"ideal_certificate needs an EPoly over r={R.r} variables (r >= 1)")
    out = [EPoly.zero(R.r)] * R.r
    for lam, c in epoly_to_schur(p).items:
        if R.contains(lam):
            continue
        for i, q in enumerate(_schur_certificate(lam, R)):
            out[i] = out[i] + q * c
    logger.debug("ideal certificate for %s in %s", p, R)
    return out


def ideal_generators(R: GrassRing) -> list[EPoly]:
    return [h_poly(R.n - R.r + i, R.r) for i in range(1, R.r + 1)]
