import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Self

from sympy import ZZ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from spcob.core.errors import ConsistencyError, DomainError, RingMismatchError
from spcob.core.types import Exponents
from spcob.lib.cache import memoize

logger = logging.getLogger(__name__)


@memoize
def e_ring(r: int) -> PolyRing:
    if r < 1:
        raise DomainError(f"e-basis needs at least one variable: r={r}")
    return ring([f"e{i}" for i in range(1, r + 1)], ZZ, lex)[0]


@memoize
def x_ring(r: int) -> PolyRing:
    if r < 1:
        raise DomainError(f"x-basis needs at least one variable: r={r}")
    return ring([f"x{i}" for i in range(1, r + 1)], ZZ, lex)[0]


@dataclass(frozen=True)
class _SparsePoly:
    r: int
    poly: PolyElement

    basis = ""

    @classmethod
    def ring_for(cls, r: int) -> PolyRing:
        raise NotImplementedError

    @classmethod
    def monomial_degree(cls, expv: Exponents) -> int:
        raise NotImplementedError

    @classmethod
    def zero(cls, r: int) -> Self:
        return cls(r, cls.ring_for(r).zero)

    @classmethod
    def one(cls, r: int) -> Self:
        return cls(r, cls.ring_for(r).one)

    @classmethod
    def constant(cls, r: int, c: int) -> Self:
        return cls(r, cls.ring_for(r).one * c)

    @classmethod
    def from_terms(cls, r: int, terms: Mapping[Exponents, int]) -> Self:
        for expv in terms:
            if len(expv) != r or any(a < 0 for a in expv):
                raise DomainError(f"{cls.__name__}: bad exponent vector {expv} for r={r}")
        cleaned = {tuple(expv): int(c) for expv, c in terms.items() if c}
        return cls(r, cls.ring_for(r).from_dict(cleaned))

    @classmethod
    def monomial(cls, r: int, expv: Exponents, c: int = 1) -> Self:
        return cls.from_terms(r, {expv: c})

    @property
    def terms(self) -> dict[Exponents, int]:
        return {tuple(expv): int(c) for expv, c in self.poly.items()}

    def items(self) -> Iterator[tuple[Exponents, int]]:
        for expv, c in sorted(self.poly.items(), reverse=True):
            yield tuple(expv), int(c)

    def coefficient(self, expv: Exponents) -> int:
        return int(self.poly.get(tuple(expv), 0))

    def _check(self, other: "_SparsePoly") -> None:
        if type(other) is not type(self) or other.r != self.r:
            raise RingMismatchError(f"{type(self).__name__}(r={self.r})", f"{type(other).__name__}(r={other.r})")

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __add__(self, other: Self) -> Self:
        self._check(other)
        return type(self)(self.r, self.poly + other.poly)

    def __sub__(self, other: Self) -> Self:
        self._check(other)
        return type(self)(self.r, self.poly - other.poly)

    def __neg__(self) -> Self:
        return type(self)(self.r, -self.poly)

    def __mul__(self, other: "Self | int") -> Self:
        if isinstance(other, int):
            return type(self)(self.r, self.poly * other)
        self._check(other)
        return type(self)(self.r, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Self:
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        return type(self)(self.r, self.poly**k)

    def __str__(self) -> str:
        return str(self.poly.as_expr()) if self.poly else "0"

    def degrees(self) -> set[int]:
        return {self.monomial_degree(expv) for expv in self.poly}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, d: int) -> Self:
        return self.from_terms(
            self.r, {expv: c for expv, c in self.terms.items() if self.monomial_degree(expv) == d}
        )

    def truncate(self, max_degree: int) -> Self:
        return self.from_terms(
            self.r, {expv: c for expv, c in self.terms.items() if self.monomial_degree(expv) <= max_degree}
        )


@dataclass(frozen=True)
class EPoly(_SparsePoly):
    """Polynomial in e_1..e_r, where e_i has degree i."""

    basis = "e"

    @classmethod
    def ring_for(cls, r: int) -> PolyRing:
        return e_ring(r)

    @classmethod
    def monomial_degree(cls, expv: Exponents) -> int:
        return sum(i * a for i, a in enumerate(expv, start=1))

    @classmethod
    def generator(cls, i: int, r: int) -> "EPoly":
        if i == 0:
            return cls.one(r)
        if i < 0 or i > r:
            return cls.zero(r)
        return cls(r, e_ring(r).gens[i - 1])


@dataclass(frozen=True)
class XPoly(_SparsePoly):
    """Polynomial in x_1..x_r, all of degree 1, ordered lexicographically with x_1 largest."""

    basis = "x"

    @classmethod
    def ring_for(cls, r: int) -> PolyRing:
        return x_ring(r)

    @classmethod
    def monomial_degree(cls, expv: Exponents) -> int:
        return sum(expv)

    def leading(self) -> tuple[Exponents, int]:
        if not self.poly:
            raise DomainError("the zero polynomial has no leading term")
        expv = max(self.poly.keys())
        return tuple(expv), int(self.poly[expv])

    def is_symmetric(self) -> bool:
        """Invariant under every adjacent swap x_i <-> x_{i+1}; these generate S_r."""
        terms = self.terms
        for i in range(self.r - 1):
            for expv, c in terms.items():
                swapped = expv[:i] + (expv[i + 1], expv[i]) + expv[i + 2 :]
                if terms.get(swapped) != c:
                    return False
        return True

    def divmod_lex(self, divisor: "XPoly") -> tuple["XPoly", "XPoly"]:
        self._check(divisor)
        if not divisor:
            raise DomainError("division by the zero polynomial")
        quotient, remainder = self.poly.div(divisor.poly)
        return XPoly(self.r, quotient), XPoly(self.r, remainder)

    def exact_div(self, divisor: "XPoly") -> "XPoly":
        quotient, remainder = self.divmod_lex(divisor)
        if remainder:
            logger.error("nonzero remainder dividing %s by %s", self, divisor)
            raise ConsistencyError("exact division", f"remainder {remainder}")
        return quotient
