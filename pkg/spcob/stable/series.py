"""Degree-truncated homogeneous power series over Z in weighted variables.

A series ring is a value descriptor: variable names, their degrees and a truncation D.
Terms of weighted degree above D are discarded by every operation, so a series of
truncation D stands for its image in Z[p]/I_{D+1}.
"""

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from sympy import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from spcob.core.errors import DomainError, ParseError, RingMismatchError
from spcob.core.types import Exponents
from spcob.lib.cache import memoize
from spcob.lib.serialize import require, terms_in, terms_out


@memoize
def _poly_ring(names: tuple[str, ...]) -> PolyRing:
    return ring(list(names), ZZ, lex)[0]


@dataclass(frozen=True)
class SeriesRing:
    names: tuple[str, ...]
    weights: tuple[int, ...]
    trunc: int

    def __post_init__(self) -> None:
        if not self.names:
            raise DomainError("a series ring needs at least one variable")
        if len(self.names) != len(self.weights):
            raise DomainError(f"{len(self.names)} names but {len(self.weights)} weights")
        if any(w < 1 for w in self.weights):
            raise DomainError(f"variable degrees must be positive: {self.weights}")
        if self.trunc < 0:
            raise DomainError(f"truncation must be nonnegative: {self.trunc}")

    @property
    def poly_ring(self) -> PolyRing:
        return _poly_ring(self.names)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def degree(self, expv: Sequence[int]) -> int:
        return sum(w * a for w, a in zip(self.weights, expv, strict=True))

    def with_trunc(self, trunc: int) -> "SeriesRing":
        return SeriesRing(self.names, self.weights, trunc)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError as e:
            raise DomainError(f"no variable {name!r} in {self}") from e

    def __str__(self) -> str:
        return f"Z[[{','.join(self.names)}]]_{{<={self.trunc}}}"

    def to_json(self) -> dict[str, Any]:
        return {"vars": self.nvars, "trunc": self.trunc, "names": list(self.names), "weights": list(self.weights)}


def bsp(r: int, trunc: int, prefix: str = "p") -> SeriesRing:
    """Z[[p_1..p_r]] with deg p_i = i."""
    if r < 1:
        raise DomainError(f"BSp series ring needs r >= 1, got {r}")
    return SeriesRing(tuple(f"{prefix}{i}" for i in range(1, r + 1)), tuple(range(1, r + 1)), trunc)


def blocks(sizes: Sequence[int], trunc: int, prefixes: Sequence[str] = ("pa", "pb", "pc")) -> SeriesRing:
    """Z[[p'_1..p'_r, p''_1..p''_s, ...]], one block of Pontryagin variables per summand."""
    if len(sizes) > len(prefixes):
        raise DomainError(f"at most {len(prefixes)} blocks are supported")
    names: list[str] = []
    weights: list[int] = []
    for size, prefix in zip(sizes, prefixes, strict=False):
        if size < 1:
            raise DomainError(f"block sizes must be positive: {tuple(sizes)}")
        names.extend(f"{prefix}{i}" for i in range(1, size + 1))
        weights.extend(range(1, size + 1))
    return SeriesRing(tuple(names), tuple(weights), trunc)


def monomials(R: SeriesRing, d: int) -> list[Exponents]:
    """Exponent vectors of weighted degree exactly d, in lex-descending order."""
    out: list[Exponents] = []

    def walk(i: int, left: int, acc: list[int]) -> None:
        if i == R.nvars:
            if left == 0:
                out.append(tuple(acc))
            return
        w = R.weights[i]
        for a in range(left // w, -1, -1):
            acc.append(a)
            walk(i + 1, left - a * w, acc)
            acc.pop()

    if d >= 0:
        walk(0, d, [])
    return out


@dataclass(frozen=True)
class HomSeries:
    ring: SeriesRing
    poly: PolyElement

    @classmethod
    def make(cls, R: SeriesRing, poly: PolyElement) -> "HomSeries":
        kept = {expv: c for expv, c in poly.items() if R.degree(expv) <= R.trunc}
        if len(kept) == len(poly):
            return cls(R, poly)
        return cls(R, R.poly_ring.from_dict(kept))

    @classmethod
    def zero(cls, R: SeriesRing) -> "HomSeries":
        return cls(R, R.poly_ring.zero)

    @classmethod
    def one(cls, R: SeriesRing) -> "HomSeries":
        return cls(R, R.poly_ring.one)

    @classmethod
    def gen(cls, R: SeriesRing, i: int) -> "HomSeries":
        """The i-th variable (1-based)."""
        if not 1 <= i <= R.nvars:
            raise DomainError(f"variable index {i} out of range for {R}")
        return cls.make(R, R.poly_ring.gens[i - 1])

    @classmethod
    def var(cls, R: SeriesRing, name: str) -> "HomSeries":
        return cls.gen(R, R.index(name) + 1)

    @classmethod
    def from_terms(cls, R: SeriesRing, terms: Mapping[Exponents, int]) -> "HomSeries":
        for expv in terms:
            if len(expv) != R.nvars or any(a < 0 for a in expv):
                raise DomainError(f"bad exponent vector {expv} for {R}")
        return cls.make(R, R.poly_ring.from_dict({tuple(e): int(c) for e, c in terms.items() if c}))

    @classmethod
    def monomial(cls, R: SeriesRing, expv: Exponents, c: int = 1) -> "HomSeries":
        return cls.from_terms(R, {expv: c})

    @property
    def terms(self) -> dict[Exponents, int]:
        return {tuple(e): int(c) for e, c in self.poly.items()}

    def items(self) -> Iterator[tuple[Exponents, int]]:
        for expv, c in sorted(self.poly.items(), reverse=True):
            yield tuple(expv), int(c)

    def coefficient(self, expv: Exponents) -> int:
        return int(self.poly.get(tuple(expv), 0))

    def _check(self, other: "HomSeries") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __add__(self, other: "HomSeries") -> "HomSeries":
        self._check(other)
        return HomSeries(self.ring, self.poly + other.poly)

    def __sub__(self, other: "HomSeries") -> "HomSeries":
        self._check(other)
        return HomSeries(self.ring, self.poly - other.poly)

    def __neg__(self) -> "HomSeries":
        return HomSeries(self.ring, -self.poly)

    def __mul__(self, other: "HomSeries | int") -> "HomSeries":
        if isinstance(other, int):
            return HomSeries(self.ring, self.poly * other)
        self._check(other)
        return HomSeries.make(self.ring, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HomSeries":
        if k < 0:
            raise DomainError("negative powers are not series")
        out = HomSeries.one(self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def degrees(self) -> set[int]:
        return {self.ring.degree(e) for e in self.poly}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, d: int) -> "HomSeries":
        return HomSeries.from_terms(self.ring, {e: c for e, c in self.terms.items() if self.ring.degree(e) == d})

    def truncate(self, trunc: int) -> "HomSeries":
        if trunc > self.ring.trunc:
            raise DomainError(f"cannot raise truncation from {self.ring.trunc} to {trunc}")
        return HomSeries.make(self.ring.with_trunc(trunc), self.poly)

    def widen(self, trunc: int) -> "HomSeries":
        """The same polynomial viewed in a ring with a larger truncation."""
        if trunc < self.ring.trunc:
            raise DomainError(f"cannot widen truncation from {self.ring.trunc} down to {trunc}")
        return HomSeries(self.ring.with_trunc(trunc), self.poly)

    def eval_zero(self, i: int) -> "HomSeries":
        """Set the i-th variable (1-based) to zero."""
        k = i - 1
        return HomSeries.from_terms(self.ring, {e: c for e, c in self.terms.items() if e[k] == 0})

    def divisible_by(self, i: int) -> bool:
        k = i - 1
        return all(e[k] >= 1 for e in self.terms)

    def __str__(self) -> str:
        return str(self.poly.as_expr()) if self.poly else "0"

    def to_json(self) -> dict[str, Any]:
        return {**self.ring.to_json(), "terms": terms_out(self.items())}


def substitute(x: HomSeries, images: Sequence[HomSeries], target: SeriesRing) -> HomSeries:
    """The ring homomorphism sending the k-th variable of x's ring to images[k]."""
    if len(images) != x.ring.nvars:
        raise DomainError(f"substitution needs {x.ring.nvars} images, got {len(images)}")
    for img in images:
        if img.ring != target:
            raise RingMismatchError(target, img.ring)
    powers: dict[tuple[int, int], HomSeries] = {}
    total = HomSeries.zero(target)
    for expv, c in x.items():
        term = HomSeries.one(target) * c
        for k, a in enumerate(expv):
            if a:
                if (k, a) not in powers:
                    powers[(k, a)] = images[k] ** a
                term = term * powers[(k, a)]
        total = total + term
    return total


def series_in(data: Any) -> HomSeries:
    data = require(data, "vars", "trunc", "terms")
    nvars, trunc = data["vars"], data["trunc"]
    if not isinstance(nvars, int) or not isinstance(trunc, int) or nvars < 1 or trunc < 0:
        raise ParseError(f"'vars' and 'trunc' must be integers (vars >= 1, trunc >= 0), got {nvars!r}, {trunc!r}")
    names = data.get("names") or [f"p{i}" for i in range(1, nvars + 1)]
    weights = data.get("weights") or list(range(1, nvars + 1))
    if len(names) != nvars or len(weights) != nvars:
        raise ParseError(f"'names' and 'weights' must have {nvars} entries")
    try:
        R = SeriesRing(tuple(str(n) for n in names), tuple(int(w) for w in weights), trunc)
        acc: dict[Exponents, int] = {}
        for key, c in terms_in(data["terms"]):
            acc[key] = acc.get(key, 0) + c
        return HomSeries.from_terms(R, acc)
    except DomainError as e:
        raise ParseError(str(e)) from e
