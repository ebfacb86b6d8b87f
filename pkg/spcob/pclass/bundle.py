"""Formal symplectic bundles in the root model and their Pontryagin classes.

A bundle of rank 2k splits formally into k rank-2 summands, one degree-1 root each, and
p_i is the i-th elementary symmetric polynomial in the roots.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import sympy as sp

from spcob.core.errors import DomainError


@dataclass(frozen=True)
class FormalBundle:
    roots: tuple[sp.Expr, ...] = ()

    @classmethod
    def named(cls, names: Iterable[str]) -> "FormalBundle":
        return cls(tuple(sp.Symbol(n) for n in names))

    @classmethod
    def generic(cls, prefix: str, k: int) -> "FormalBundle":
        return cls.named(f"{prefix}{i}" for i in range(1, k + 1))

    @classmethod
    def trivial(cls, k: int) -> "FormalBundle":
        return cls(tuple(sp.Integer(0) for _ in range(k)))

    @property
    def rank(self) -> int:
        return 2 * len(self.roots)

    def oplus(self, other: "FormalBundle") -> "FormalBundle":
        return FormalBundle(self.roots + other.roots)


@dataclass(frozen=True)
class PontVector:
    classes: tuple[sp.Expr, ...] = (sp.Integer(1),)

    def __post_init__(self) -> None:
        if not self.classes or sp.expand(self.classes[0] - 1) != 0:
            raise DomainError(f"p_0 must be 1, got {self.classes[:1]}")

    @classmethod
    def of(cls, classes: Sequence[sp.Expr | int]) -> "PontVector":
        return cls(tuple(sp.expand(sp.sympify(c)) for c in classes))

    @classmethod
    def symbolic(cls, prefix: str, n: int) -> "PontVector":
        """Opaque classes (1, a_1, ..., a_n) of a bundle over a base with known classes."""
        return cls.of([1, *sp.symbols(f"{prefix}1:{n + 1}")]) if n else cls()

    @property
    def rank(self) -> int:
        """r for a rank-2r bundle: the index of the last stored class."""
        return len(self.classes) - 1

    def p(self, i: int) -> sp.Expr:
        if i < 0 or i > self.rank:
            return sp.Integer(0)
        return self.classes[i]

    def equals(self, other: "PontVector") -> bool:
        top = max(self.rank, other.rank)
        return all(sp.expand(self.p(i) - other.p(i)) == 0 for i in range(top + 1))


def pont_from_roots(B: FormalBundle) -> PontVector:
    classes: list[sp.Expr] = [sp.Integer(1)]
    for x in B.roots:
        nxt = [classes[0]]
        for i in range(1, len(classes)):
            nxt.append(sp.expand(classes[i] + x * classes[i - 1]))
        nxt.append(sp.expand(x * classes[-1]))
        classes = nxt
    return PontVector(tuple(classes))


def cartan_sum(a: PontVector, b: PontVector) -> PontVector:
    """p_i(E + F) = sum_j p_{i-j}(E) p_j(F): the total classes multiply."""
    n = a.rank + b.rank
    return PontVector.of([sum((a.p(i - j) * b.p(j) for j in range(i + 1)), sp.Integer(0)) for i in range(n + 1)])


def total_class(pv: PontVector) -> sp.Expr:
    return sp.expand(sum(pv.classes, sp.Integer(0)))
