"""Cross-module identity checks; each returns a Report and never raises on a failed identity."""

from collections.abc import Callable
from itertools import combinations
from math import comb

import sympy as sp

from spcob.core.errors import DomainError
from spcob.core.models import Outcome, Report
from spcob.grass import maps
from spcob.grass.ring import GrassElem, GrassRing, basis, generator, hp_power, lift, normal_form, rank
from spcob.pclass.bundle import FormalBundle, PontVector, cartan_sum, pont_from_roots, total_class
from spcob.pclass.projective import perp_consistent
from spcob.pclass.thom import thom_class, thom_multiplicativity, thom_top_sign
from spcob.spmat.homotopy import SWAP, block_embed, fallback_homotopy, homotopy_core
from spcob.spmat.matrix import TMatrix, block_permutation, is_symplectic, omega
from spcob.spmat.tpoly import ONE
from spcob.symfun.codec import partition_out
from spcob.symfun.partitions import Partition, add_full_column, partitions_of
from spcob.symfun.schur import (
    SchurVector,
    epoly_to_x,
    h_expand_x,
    h_poly,
    multiply_schur,
    schur_alternant,
    schur_jt_e,
    schur_jt_h,
    schur_to_epoly,
    xpoly_to_schur,
)


def _partitions_upto(max_deg: int, r: int) -> list[Partition]:
    return [lam for d in range(max_deg + 1) for lam in partitions_of(d, r, d)]


def jacobi_trudi(r: int, max_deg: int) -> Report:
    def run() -> Outcome:
        for lam in _partitions_upto(max_deg, r):
            by_e = epoly_to_x(schur_jt_e(lam, r))
            by_h = epoly_to_x(schur_jt_h(lam, r))
            alt = schur_alternant(lam, r)
            if not by_e == by_h == alt:
                return False, {"lambda": partition_out(lam), "e": str(by_e), "h": str(by_h), "alternant": str(alt)}
        return True, None

    return Report.timed("symfun.jacobi_trudi", {"r": r, "max_deg": max_deg}, run)


def h_consistency(r: int, max_deg: int) -> Report:
    def run() -> Outcome:
        for m in range(-1, max_deg + 1):
            if epoly_to_x(h_poly(m, r)) != h_expand_x(m, r):
                return False, {"m": m, "recurrence": str(h_poly(m, r))}
        return True, None

    return Report.timed("symfun.h_consistency", {"r": r, "max_deg": max_deg}, run)


def straightening(r: int, max_deg: int) -> Report:
    """Round trip through the e-basis and x-monomials on a fixed mixed-sign vector per degree."""

    def run() -> Outcome:
        for d in range(max_deg + 1):
            support = partitions_of(d, r, d)
            v = SchurVector.from_terms(r, [(lam, (7 * i + 3) % 11 - 5) for i, lam in enumerate(support)])
            back = xpoly_to_schur(epoly_to_x(schur_to_epoly(v)))
            if back != v:
                return False, {"degree": d, "sent": str(v), "recovered": str(back)}
        return True, None

    return Report.timed("symfun.straightening", {"r": r, "max_deg": max_deg}, run)


def lr_positivity(r: int, max_deg: int) -> Report:
    def run() -> Outcome:
        support = _partitions_upto(max_deg, r)
        for i, lam in enumerate(support):
            for mu in support[i:]:
                if sum(lam) + sum(mu) > max_deg:
                    continue
                prod = multiply_schur(SchurVector.basis(lam, r), SchurVector.basis(mu, r))
                negative = [(partition_out(nu), c) for nu, c in prod.items if c < 0]
                if negative:
                    return False, {"lambda": partition_out(lam), "mu": partition_out(mu), "negative": negative}
        return True, None

    return Report.timed("symfun.lr_positivity", {"r": r, "max_deg": max_deg}, run)


def basis_property(r: int, n: int) -> Report:
    """Schur truncation is the quotient map; out-of-box classes carry an explicit ideal certificate."""
    R = GrassRing(r, n)

    def run() -> Outcome:
        for lam in _partitions_upto(R.top_degree + 2, r):
            p = schur_jt_e(lam, r)
            got = normal_form(p, R)
            if got != GrassElem.schur(R, lam):
                return False, {"lambda": partition_out(lam), "normal_form": str(got)}
            if R.contains(lam):
                continue
            total = lift(got)
            for q, h in zip(maps.ideal_certificate(p, R), maps.ideal_generators(R), strict=True):
                total = total + q * h
            if total != p:
                return False, {"lambda": partition_out(lam), "reason": "ideal certificate does not rebuild s_lambda"}
        for k in range(n - r + 1, n + 1):
            if normal_form(h_poly(k, r), R):
                return False, {"generator": f"h{k}", "reason": "relation survives"}
        return True, None

    return Report.timed("grass.basis_property", {"r": r, "n": n}, run)


def thom_inclusion_check(r: int, n: int) -> Report:
    """Column addition equals e_r-multiplication, is injective and lands in the kernel of truncation."""
    R = GrassRing(r, n)

    def run() -> Outcome:
        if n == r:
            return True, None
        S = maps.thom_source(R)
        images = set()
        for mu in basis(S):
            v = GrassElem.schur(S, mu)
            by_column, by_product = maps.thom_inclusion(v), maps.thom_inclusion_by_product(v)
            if by_column != by_product:
                return False, {"mu": partition_out(mu), "column": str(by_column), "product": str(by_product)}
            if maps.length_truncation(by_column):
                return False, {"mu": partition_out(mu), "reason": "image not in kernel"}
            images.add(by_column.vec)
        if len(images) != rank(S):
            return False, {"reason": "not injective", "images": len(images), "rank": rank(S)}
        return True, None

    return Report.timed("grass.thom_inclusion", {"r": r, "n": n}, run)


def exact_sequence(r: int, n: int) -> Report:
    """0 -> Q(r; h_{n-r}..h_{n-1}) -> Q(r; h_{n-r+1}..h_n) -> Q(r-1; ...) -> 0 on the Schur basis."""
    R = GrassRing(r, n)
    target = GrassRing(r - 1, n - 1)

    def run() -> Outcome:
        if comb(n - 1, r) + comb(n - 1, r - 1) != rank(R):
            return False, {"reason": "rank count"}
        image = {add_full_column(mu, r) for mu in basis(maps.thom_source(R))} if n > r else set()
        hit = set()
        for lam in basis(R):
            down = maps.length_truncation(GrassElem.schur(R, lam))
            if not down and lam not in image:
                return False, {"lambda": partition_out(lam), "reason": "kernel element outside the image"}
            hit.update(down.vec.support())
        missing = [partition_out(mu) for mu in basis(target) if mu not in hit]
        if missing:
            return False, {"reason": "truncation not surjective", "missing": missing}
        return True, None

    return Report.timed("grass.exact_sequence", {"r": r, "n": n}, run)


def stabilization_maps(r: int, n: int) -> Report:
    """alpha and beta are unital ring maps (checked against each e_i) and onto in every degree."""

    def one_map(source: GrassRing, target: GrassRing, f: Callable[[GrassElem], GrassElem]) -> Outcome:
        if f(GrassElem.one(source)) != GrassElem.one(target):
            return False, {"ring": source.to_json(), "reason": "unit not preserved"}
        hit = set()
        for lam in basis(source):
            x = GrassElem.schur(source, lam)
            fx = f(x)
            hit.update(fx.vec.support())
            for i in range(1, source.r + 1):
                e = generator(i, source)
                if f(e * x) != f(e) * fx:
                    return False, {"ring": source.to_json(), "lambda": partition_out(lam), "e": i}
        missing = [partition_out(mu) for mu in basis(target) if mu not in hit]
        if missing:
            return False, {"ring": source.to_json(), "reason": "not surjective", "missing": missing}
        return True, None

    def run() -> Outcome:
        target = GrassRing(r, n)
        ok, witness = one_map(GrassRing(r, n + 1), target, maps.alpha_map)
        if not ok:
            return False, {"map": "alpha", **witness}
        ok, witness = one_map(GrassRing(r + 1, n + 1), target, maps.beta_map)
        if not ok:
            return False, {"map": "beta", **witness}
        return True, None

    return Report.timed("grass.stabilization_maps", {"r": r, "n": n}, run)


def ranks(max_n: int) -> Report:
    """Box enumeration counts binomial(n, r) Schur classes for every 1 <= r <= n <= max_n."""

    def run() -> Outcome:
        for n in range(1, max_n + 1):
            for r in range(1, n + 1):
                R = GrassRing(r, n)
                if len(basis(R)) != rank(R) or rank(R) != comb(n, r):
                    return False, {"r": r, "n": n, "basis": len(basis(R)), "binomial": comb(n, r)}
        return True, None

    return Report.timed("grass.ranks", {"max_n": max_n}, run)


def hp_ring(n: int) -> Report:
    """GrassRing(1, n+1) is Z[zeta]/(zeta^{n+1}) with zeta = s_(1)."""

    def run() -> Outcome:
        R = GrassRing(1, n + 1)
        zeta = GrassElem.schur(R, Partition([1]))
        if rank(R) != n + 1:
            return False, {"rank": rank(R)}
        for i in range(n + 1):
            if zeta**i != hp_power(i, n):
                return False, {"power": i, "got": str(zeta**i)}
            for j in range(n + 1):
                if hp_power(i, n) * hp_power(j, n) != hp_power(i + j, n):
                    return False, {"i": i, "j": j}
        if zeta ** (n + 1):
            return False, {"reason": f"zeta^{n + 1} is not zero"}
        return True, None

    return Report.timed("grass.hp_ring", {"n": n}, run)


def cartan(max_roots: int) -> Report:
    """Root model against cartan_sum on every subset split, plus total and Thom multiplicativity."""

    def run() -> Outcome:
        for k in range(max_roots + 1):
            B = FormalBundle.generic("x", k)
            whole = pont_from_roots(B)
            for size in range(k + 1):
                for chosen in combinations(range(k), size):
                    left = FormalBundle(tuple(B.roots[i] for i in chosen))
                    right = FormalBundle(tuple(B.roots[i] for i in range(k) if i not in chosen))
                    a, b = pont_from_roots(left), pont_from_roots(right)
                    s = cartan_sum(a, b)
                    if not s.equals(whole):
                        return False, {"roots": k, "left": list(chosen), "reason": "cartan_sum differs from the union"}
                    if sp.expand(total_class(s) - total_class(a) * total_class(b)) != 0:
                        return False, {"roots": k, "left": list(chosen), "reason": "total class not multiplicative"}
                    if not thom_multiplicativity(a, b):
                        return False, {"roots": k, "left": list(chosen), "reason": "thom class not multiplicative"}
            if not cartan_sum(pont_from_roots(FormalBundle.trivial(2)), whole).equals(whole):
                return False, {"roots": k, "reason": "trivial summand changes the classes"}
        x, y, z = (pont_from_roots(FormalBundle.generic(p, 2)) for p in ("u", "v", "w"))
        if not cartan_sum(cartan_sum(x, y), z).equals(cartan_sum(x, cartan_sum(y, z))):
            return False, {"reason": "cartan_sum not associative"}
        if not cartan_sum(x, y).equals(cartan_sum(y, x)):
            return False, {"reason": "cartan_sum not commutative"}
        return True, None

    return Report.timed("pclass.cartan", {"max_roots": max_roots}, run)


def perp(max_roots: int) -> Report:
    def run() -> Outcome:
        for k in range(1, max_roots + 1):
            bundles = {
                "generic": FormalBundle.generic("x", k),
                "trivial": FormalBundle.trivial(k),
                "mixed": FormalBundle(FormalBundle.generic("x", k - 1).roots + (sp.Integer(0),)),
            }
            for label, B in bundles.items():
                if not perp_consistent(pont_from_roots(B)):
                    return False, {"roots": k, "bundle": label}
            if not perp_consistent(PontVector.symbolic("a", k)):
                return False, {"roots": k, "bundle": "symbolic"}
        return True, None

    return Report.timed("pclass.perp", {"max_roots": max_roots}, run)


def thom_sign(max_r: int) -> Report:
    def run() -> Outcome:
        for r in range(1, max_r + 1):
            pv = PontVector.symbolic("a", r)
            if sp.expand(thom_top_sign(r) * thom_class(pv) - pv.p(r)) != 0:
                return False, {"r": r, "reason": "p_r != (-1)^r z*th"}
        return True, None

    return Report.timed("pclass.thom_sign", {"max_r": max_r}, run)


def symplectic_closure(N: int) -> Report:
    """Products, block permutations and their inverses stay symplectic with determinant 1."""
    if N < 2:
        raise DomainError(f"closure check needs N >= 2, got {N}")

    def run() -> Outcome:
        core, label = homotopy_core()
        samples: dict[str, TMatrix] = {"omega": omega(2 * N)}
        for n in range(1, N):
            samples[f"f{n}"] = block_embed(n, N, core)
            samples[f"g{n}"] = block_embed(n, N, fallback_homotopy())
        cycle = block_permutation(N, [(j + 1) % N for j in range(N)])
        samples["cycle"] = cycle
        samples["cycle^-1"] = cycle.T
        base = list(samples.items())
        for (a, A), (b, B) in zip(base, base[1:], strict=False):
            samples[f"{a}*{b}"] = A @ B
        for name, M in samples.items():
            if not is_symplectic(M):
                return False, {"matrix": name, "core": label, "reason": "not symplectic"}
            if M.det() != ONE:
                return False, {"matrix": name, "core": label, "det": list(M.det().coeffs)}
        if (cycle @ cycle.T).at(0) != TMatrix.identity(2 * N).at(0):
            return False, {"reason": "permutation inverse is not the transpose"}
        if block_embed(1, N, SWAP).at(0) != block_permutation(N, [1, 0, *range(2, N)]).at(0):
            return False, {"reason": "embedded swap is not the block transposition"}
        return True, None

    return Report.timed("spmat.symplectic_closure", {"N": N}, run)
