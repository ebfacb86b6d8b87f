"""Exact linear algebra shared by the polynomial modules.

Determinants are expanded by cofactors with memoized minors, which works over any
commutative ring whose elements support ``+``, ``-``, ``*`` and truthiness as a zero
test.  Ranks and kernels of integer matrices go through ``sympy``.
"""

from collections.abc import Sequence
from typing import Any

import sympy as sp


def cofactor_det[T](rows: Sequence[Sequence[T]], zero: T, one: T) -> T:
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError(f"determinant needs a square grid, got {n} rows of lengths {[len(r) for r in rows]}")
    memo: dict[tuple[int, int], T] = {}

    def minor(i: int, mask: int) -> T:
        if i == n:
            return one
        key = (i, mask)
        if key in memo:
            return memo[key]
        total = zero
        position = 0
        for j in range(n):
            if not mask >> j & 1:
                continue
            entry = rows[i][j]
            if entry:
                term = entry * minor(i + 1, mask & ~(1 << j))
                total = total + term if position % 2 == 0 else total - term
            position += 1
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def _matrix(rows: Sequence[Sequence[int]], ncols: int) -> sp.Matrix:
    flat = [int(v) for row in rows for v in row]
    return sp.Matrix(len(rows), ncols, flat)


def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return int(_matrix(rows, ncols).rank())


def kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[list[str]]:
    """Rational basis of the right kernel, each entry as an exact fraction string."""
    if ncols == 0:
        return []
    if not rows:
        return [[str(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    return [[str(v) for v in vec] for vec in _matrix(rows, ncols).nullspace()]


def full_column_rank(rows: Sequence[Sequence[int]], ncols: int) -> tuple[bool, Any]:
    """Returns (injective, witness) where the witness is a kernel basis when not injective."""
    if rank(rows, ncols) == ncols:
        return True, None
    return False, kernel(rows, ncols)
