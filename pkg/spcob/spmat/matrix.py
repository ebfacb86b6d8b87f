"""Square matrices over Z[t] and the standard symplectic form."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from spcob.core.errors import DomainError, ParseError
from spcob.lib.linalg import cofactor_det
from spcob.lib.serialize import coeff_in, require, small_int_out
from spcob.spmat.tpoly import ONE, ZERO, TPoly

Entry = TPoly | int


@dataclass(frozen=True)
class TMatrix:
    rows: tuple[tuple[TPoly, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0 or n % 2 or any(len(row) != n for row in self.rows):
            raise DomainError(f"expected a square matrix of even size, got {n} rows of lengths {[len(r) for r in self.rows]}")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]]) -> "TMatrix":
        return cls(tuple(tuple(e if isinstance(e, TPoly) else TPoly.const(e) for e in row) for row in rows))

    @classmethod
    def identity(cls, size: int) -> "TMatrix":
        return cls.of([[ONE if i == j else ZERO for j in range(size)] for i in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> TPoly:
        i, j = ij
        return self.rows[i][j]

    def _check(self, other: "TMatrix") -> None:
        if other.size != self.size:
            raise DomainError(f"size mismatch: {self.size} vs {other.size}")

    def __matmul__(self, other: "TMatrix") -> "TMatrix":
        self._check(other)
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return TMatrix(tuple(out))

    def __add__(self, other: "TMatrix") -> "TMatrix":
        self._check(other)
        return TMatrix(tuple(tuple(a + b for a, b in zip(r, s, strict=True)) for r, s in zip(self.rows, other.rows, strict=True)))

    def __neg__(self) -> "TMatrix":
        return TMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __sub__(self, other: "TMatrix") -> "TMatrix":
        return self + (-other)

    def scale(self, c: Entry) -> "TMatrix":
        return TMatrix(tuple(tuple(a * c for a in row) for row in self.rows))

    @property
    def T(self) -> "TMatrix":
        n = self.size
        return TMatrix(tuple(tuple(self.rows[j][i] for j in range(n)) for i in range(n)))

    def at(self, t: int) -> list[list[int]]:
        return [[a(t) for a in row] for row in self.rows]

    def evaluate(self, t: int) -> "TMatrix":
        return TMatrix.of(self.at(t))

    def is_zero(self) -> bool:
        return not any(a for row in self.rows for a in row)

    def nonzero_entries(self) -> list[tuple[int, int, TPoly]]:
        return [(i, j, a) for i, row in enumerate(self.rows) for j, a in enumerate(row) if a]

    def column(self, j: int) -> tuple[TPoly, ...]:
        return tuple(row[j] for row in self.rows)

    def det(self) -> TPoly:
        return cofactor_det(self.rows, ZERO, ONE)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows)

    def to_json(self) -> dict[str, Any]:
        return {"size": self.size, "entries": [[[small_int_out(c) for c in a.coeffs] for a in row] for row in self.rows]}


def matrix_in(data: Any) -> TMatrix:
    data = require(data, "size", "entries")
    size, entries = data["size"], data["entries"]
    if not isinstance(entries, list) or len(entries) != size:
        raise ParseError(f"'entries' must hold {size} rows")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != size:
            raise ParseError(f"every row must hold {size} coefficient arrays")
        cells = []
        for cell in row:
            if not isinstance(cell, list):
                raise ParseError(f"entry must be a coefficient array, got {cell!r}")
            cells.append(TPoly(tuple(coeff_in(c) for c in cell)))
        rows.append(tuple(cells))
    try:
        return TMatrix(tuple(rows))
    except DomainError as e:
        raise ParseError(str(e)) from e


def omega(two_n: int) -> TMatrix:
    """Block diagonal with copies of [[0, 1], [-1, 0]]."""
    if two_n <= 0 or two_n % 2:
        raise DomainError(f"symplectic form needs an even positive size, got {two_n}")
    rows = [[0] * two_n for _ in range(two_n)]
    for k in range(0, two_n, 2):
        rows[k][k + 1] = 1
        rows[k + 1][k] = -1
    return TMatrix.of(rows)


def symplectic_defect(M: TMatrix) -> TMatrix:
    """M^T omega M - omega; zero exactly when M is symplectic."""
    w = omega(M.size)
    return M.T @ w @ M - w


def is_symplectic(M: TMatrix) -> bool:
    return symplectic_defect(M).is_zero()


def block_permutation(N: int, sigma: Sequence[int]) -> TMatrix:
    """The 2N x 2N matrix sending block j to block sigma[j]."""
    if sorted(sigma) != list(range(N)):
        raise DomainError(f"not a permutation of {N} blocks: {list(sigma)}")
    rows = [[0] * (2 * N) for _ in range(2 * N)]
    for j, target in enumerate(sigma):
        rows[2 * target][2 * j] = 1
        rows[2 * target + 1][2 * j + 1] = 1
    return TMatrix.of(rows)
