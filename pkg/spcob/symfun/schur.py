"""Schur functions in four representations: e-basis, h-determinants, x-monomials, Schur basis.

The e/h recurrence is the standard sum_{i=0}^{min(m,r)} (-1)^i e_i h_{m-i} = 0 for m >= 1.
"""

import logging
from collections import Counter
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from spcob.core.errors import ConsistencyError, DomainError, RingMismatchError
from spcob.lib.cache import memoize
from spcob.lib.linalg import cofactor_det
from spcob.symfun.partitions import Partition, basis_key, conjugate, weight
from spcob.symfun.polys import EPoly, XPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchurVector:
    r: int
    items: tuple[tuple[Partition, int], ...] = ()

    @classmethod
    def from_terms(cls, r: int, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]]) -> "SchurVector":
        if r < 0:
            raise DomainError(f"number of variables must be nonnegative: r={r}")
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: Counter[Partition] = Counter()
        for lam, c in pairs:
            lam = Partition(lam)
            if len(lam) > r:
                raise DomainError(f"s{tuple(lam)} has more than r={r} parts")
            acc[lam] += int(c)
        kept = sorted(((lam, c) for lam, c in acc.items() if c), key=lambda t: basis_key(t[0]))
        return cls(r, tuple(kept))

    @classmethod
    def basis(cls, lam: Partition, r: int, c: int = 1) -> "SchurVector":
        return cls.from_terms(r, {Partition(lam): c})

    @classmethod
    def zero(cls, r: int) -> "SchurVector":
        return cls(r, ())

    @classmethod
    def one(cls, r: int) -> "SchurVector":
        return cls.basis(Partition(), r)

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self.items)

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items]

    def coefficient(self, lam: Partition) -> int:
        return self.terms.get(Partition(lam), 0)

    def _check(self, other: "SchurVector") -> None:
        if other.r != self.r:
            raise RingMismatchError(f"SchurVector(r={self.r})", f"SchurVector(r={other.r})")

    def __bool__(self) -> bool:
        return bool(self.items)

    def __add__(self, other: "SchurVector") -> "SchurVector":
        self._check(other)
        return SchurVector.from_terms(self.r, [*self.items, *other.items])

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-other)

    def __neg__(self) -> "SchurVector":
        return SchurVector(self.r, tuple((lam, -c) for lam, c in self.items))

    def __mul__(self, k: int) -> "SchurVector":
        if not isinstance(k, int):
            return NotImplemented
        return SchurVector.from_terms(self.r, [(lam, c * k) for lam, c in self.items])

    __rmul__ = __mul__

    def filter(self, keep: Callable[[Partition], bool]) -> "SchurVector":
        return SchurVector(self.r, tuple((lam, c) for lam, c in self.items if keep(lam)))

    def component(self, d: int) -> "SchurVector":
        return self.filter(lambda lam: weight(lam) == d)

    def degrees(self) -> set[int]:
        return {weight(lam) for lam, _ in self.items}

    def with_vars(self, r: int) -> "SchurVector":
        return SchurVector.from_terms(r, self.items)

    def __str__(self) -> str:
        if not self.items:
            return "0"
        chunks = []
        for lam, c in self.items:
            label = f"s({','.join(map(str, lam))})"
            chunks.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(chunks).replace("+ -", "- ")


@memoize
def e_poly(i: int, r: int) -> EPoly:
    return EPoly.generator(i, r)


@memoize
def h_poly(m: int, r: int) -> EPoly:
    if m < 0:
        return EPoly.zero(r)
    if m == 0:
        return EPoly.one(r)
    total = EPoly.zero(r)
    for i in range(1, min(m, r) + 1):
        term = e_poly(i, r) * h_poly(m - i, r)
        total = total + term if i % 2 == 1 else total - term
    return total


def h_expand_x(m: int, r: int) -> XPoly:
    if m < 0:
        return XPoly.zero(r)
    terms: dict[tuple[int, ...], int] = {}
    for combo in combinations_with_replacement(range(r), m):
        counts = Counter(combo)
        terms[tuple(counts.get(k, 0) for k in range(r))] = 1
    return XPoly.from_terms(r, terms)


@memoize
def elementary_x(i: int, r: int) -> XPoly:
    if i < 0 or i > r:
        return XPoly.zero(r)
    terms = {tuple(int(k in chosen) for k in range(r)): 1 for chosen in combinations(range(r), i)}
    return XPoly.from_terms(r, terms)


def _require_length(lam: Partition, r: int) -> None:
    if len(lam) > r:
        raise DomainError(f"partition {tuple(lam)} has {len(lam)} parts, more than r={r}")


@memoize
def schur_jt_e(lam: Partition, r: int) -> EPoly:
    """s_lam = det(e_{lam'_i - i + j}) over an m x m grid with m = l(lam')."""
    lam = Partition(lam)
    _require_length(lam, r)
    dual = conjugate(lam)
    m = len(dual)
    grid = [[e_poly(dual[i] - i + j, r) for j in range(m)] for i in range(m)]
    return cofactor_det(grid, EPoly.zero(r), EPoly.one(r))


@memoize
def schur_jt_h(lam: Partition, r: int) -> EPoly:
    """s_lam = det(h_{lam_i - i + j}) over an r x r grid."""
    lam = Partition(lam)
    _require_length(lam, r)
    padded = list(lam) + [0] * (r - len(lam))
    grid = [[h_poly(padded[i] - i + j, r) for j in range(r)] for i in range(r)]
    return cofactor_det(grid, EPoly.zero(r), EPoly.one(r))


def _alternant(exponents: list[int], r: int) -> XPoly:
    grid = [
        [XPoly.monomial(r, tuple(e if k == i else 0 for k in range(r))) for e in exponents]
        for i in range(r)
    ]
    return cofactor_det(grid, XPoly.zero(r), XPoly.one(r))


@memoize
def vandermonde(r: int) -> XPoly:
    return _alternant([r - 1 - j for j in range(r)], r)


@memoize
def schur_alternant(lam: Partition, r: int) -> XPoly:
    """s_lam = a_{lam+delta} / a_delta, by exact lexicographic division."""
    lam = Partition(lam)
    _require_length(lam, r)
    padded = list(lam) + [0] * (r - len(lam))
    numerator = _alternant([padded[j] + r - 1 - j for j in range(r)], r)
    return numerator.exact_div(vandermonde(r))


def epoly_to_x(p: EPoly) -> XPoly:
    r = p.r
    total = XPoly.zero(r)
    powers: dict[tuple[int, int], XPoly] = {}
    for expv, c in p.items():
        term = XPoly.constant(r, c)
        for i, a in enumerate(expv, start=1):
            if a:
                if (i, a) not in powers:
                    powers[(i, a)] = elementary_x(i, r) ** a
                term = term * powers[(i, a)]
        total = total + term
    return total


def xpoly_to_schur(p: XPoly) -> SchurVector:
    """Greedy straightening: peel off the lexicographically greatest monomial as a Schur term."""
    if not p.is_symmetric():
        raise DomainError(f"polynomial is not symmetric in x1..x{p.r}: {p}")
    remaining = p
    out: dict[Partition, int] = {}
    while remaining:
        alpha, c = remaining.leading()
        lam = Partition(alpha)
        out[lam] = out.get(lam, 0) + c
        remaining = remaining - schur_alternant(lam, p.r) * c
        if remaining.coefficient(alpha):
            raise ConsistencyError("straightening", f"leading monomial {alpha} survived subtraction")
    return SchurVector.from_terms(p.r, out)


def schur_to_epoly(v: SchurVector) -> EPoly:
    total = EPoly.zero(v.r)
    for lam, c in v.items:
        total = total + schur_jt_e(lam, v.r) * c
    return total


def schur_to_x(v: SchurVector) -> XPoly:
    total = XPoly.zero(v.r)
    for lam, c in v.items:
        total = total + schur_alternant(lam, v.r) * c
    return total


def epoly_to_schur(p: EPoly) -> SchurVector:
    return xpoly_to_schur(epoly_to_x(p))


def multiply_schur(a: SchurVector, b: SchurVector) -> SchurVector:
    a._check(b)
    if a.r == 0:
        # only s_() exists with no variables
        return SchurVector.from_terms(0, {Partition(): a.coefficient(Partition()) * b.coefficient(Partition())})
    logger.debug("multiply_schur r=%d |a|=%d |b|=%d", a.r, len(a.items), len(b.items))
    return epoly_to_schur(schur_to_epoly(a) * schur_to_epoly(b))
