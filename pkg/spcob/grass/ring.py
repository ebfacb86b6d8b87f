"""Z[e_1..e_r]/(h_{n-r+1}..h_n), the cohomology presentation of HGr(r, n), in Schur normal form.

The quotient map sends s_lam to 0 when lam_1 > n - r and keeps the other Schur classes as a
basis, so normal forms are Schur expansions truncated to the r x (n - r) box.
"""

from dataclasses import dataclass
from math import comb
from typing import Any

from spcob.core.errors import DomainError, RingMismatchError
from spcob.symfun.codec import poly_out
from spcob.symfun.partitions import Partition, enumerate_box, fits_box
from spcob.symfun.polys import EPoly
from spcob.symfun.schur import SchurVector, epoly_to_schur, multiply_schur, schur_to_epoly


@dataclass(frozen=True)
class GrassRing:
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.n < self.r:
            raise DomainError(f"HGr(r, n) needs 0 <= r <= n, got r={self.r}, n={self.n}")

    @property
    def width(self) -> int:
        return self.n - self.r

    def __str__(self) -> str:
        return f"HGr({self.r},{self.n})"

    def contains(self, lam: Partition) -> bool:
        return fits_box(lam, self.r, self.width)

    def to_json(self) -> dict[str, int]:
        return {"r": self.r, "n": self.n}

    @property
    def top_degree(self) -> int:
        return self.r * self.width


@dataclass(frozen=True)
class GrassElem:
    ring: GrassRing
    vec: SchurVector

    def __post_init__(self) -> None:
        if self.vec.r != self.ring.r:
            raise RingMismatchError(self.ring, f"SchurVector(r={self.vec.r})")
        outside = [lam for lam in self.vec.support() if not self.ring.contains(lam)]
        if outside:
            raise DomainError(f"{self.ring}: support {[tuple(l) for l in outside]} leaves the box")

    @classmethod
    def zero(cls, R: GrassRing) -> "GrassElem":
        return cls(R, SchurVector.zero(R.r))

    @classmethod
    def one(cls, R: GrassRing) -> "GrassElem":
        return cls(R, SchurVector.one(R.r))

    @classmethod
    def schur(cls, R: GrassRing, lam: Partition, c: int = 1) -> "GrassElem":
        lam = Partition(lam)
        if not R.contains(lam):
            return cls.zero(R)
        return cls(R, SchurVector.basis(lam, R.r, c))

    def _check(self, other: "GrassElem") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)

    def __bool__(self) -> bool:
        return bool(self.vec)

    def __add__(self, other: "GrassElem") -> "GrassElem":
        self._check(other)
        return GrassElem(self.ring, self.vec + other.vec)

    def __sub__(self, other: "GrassElem") -> "GrassElem":
        self._check(other)
        return GrassElem(self.ring, self.vec - other.vec)

    def __neg__(self) -> "GrassElem":
        return GrassElem(self.ring, -self.vec)

    def __mul__(self, other: "GrassElem | int") -> "GrassElem":
        if isinstance(other, int):
            return GrassElem(self.ring, self.vec * other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GrassElem":
        out = GrassElem.one(self.ring)
        for _ in range(k):
            out = out * self
        return out

    def component(self, d: int) -> "GrassElem":
        return GrassElem(self.ring, self.vec.component(d))

    def __str__(self) -> str:
        return f"{self.vec} in {self.ring}"

    def to_json(self) -> dict[str, Any]:
        return {"ring": self.ring.to_json(), **poly_out(self.vec)}


def bidegree(d: int) -> tuple[int, int]:
    return 4 * d, 2 * d


def rank(R: GrassRing) -> int:
    return comb(R.n, R.r)


def basis(R: GrassRing) -> list[Partition]:
    return enumerate_box(R.r, R.width)


def truncate(vec: SchurVector, R: GrassRing) -> GrassElem:
    if vec.r != R.r:
        raise RingMismatchError(R, f"SchurVector(r={vec.r})")
    return GrassElem(R, vec.filter(R.contains))


def normal_form(p: EPoly, R: GrassRing) -> GrassElem:
    if p.r != R.r:
        raise RingMismatchError(R, f"EPoly(r={p.r})")
    return truncate(epoly_to_schur(p), R)


def lift(x: GrassElem) -> EPoly:
    """The e-basis polynomial of a normal form (the canonical coset representative)."""
    return schur_to_epoly(x.vec)


def multiply(a: GrassElem, b: GrassElem) -> GrassElem:
    a._check(b)
    return truncate(multiply_schur(a.vec, b.vec), a.ring)


def generator(i: int, R: GrassRing) -> GrassElem:
    """e_i = s_(1^i), the i-th Pontryagin class of the tautological bundle."""
    if i < 0 or i > R.r:
        return GrassElem.zero(R)
    return GrassElem.schur(R, Partition([1] * i))


def hp_power(k: int, n: int) -> GrassElem:
    """zeta^k in A(HP^n) = GrassRing(1, n + 1); zero once k > n."""
    return GrassElem.schur(GrassRing(1, n + 1), Partition([k]))
