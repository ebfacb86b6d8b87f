from collections.abc import Iterable, Iterator

from spcob.core.errors import DomainError, ParseError


class Partition(tuple[int, ...]):
    """Weakly decreasing positive parts; trailing zeros are stripped on construction."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        if any(p <= 0 for p in values):
            raise DomainError(f"partition parts must be positive: {values}")
        if any(a < b for a, b in zip(values, values[1:], strict=False)):
            raise DomainError(f"partition parts must be weakly decreasing: {values}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        return f"Partition({', '.join(str(p) for p in self)})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        cleaned = text.strip().strip("()[]").strip()
        if not cleaned:
            return cls()
        try:
            parts = [int(chunk) for chunk in cleaned.split(",") if chunk.strip()]
        except ValueError as e:
            raise ParseError(f"invalid partition {text!r}: expected comma-separated integers") from e
        try:
            return cls(parts)
        except DomainError as e:
            raise ParseError(str(e)) from e


EMPTY = Partition()


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def fits_box(lam: Partition, r: int, m: int) -> bool:
    return len(lam) <= r and (not lam or lam[0] <= m)


def _descending(d: int, max_parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in _descending(d - first, max_parts - 1, first):
            yield (first, *rest)


def partitions_of(d: int, max_parts: int, max_part: int) -> list[Partition]:
    """Partitions of d inside a max_parts x max_part box, lexicographically descending."""
    if d < 0 or max_parts < 0 or max_part < 0:
        return []
    return [Partition(p) for p in _descending(d, max_parts, max_part)]


def enumerate_box(r: int, m: int) -> list[Partition]:
    """All partitions with at most r parts and largest part at most m, graded then lex descending."""
    if r < 0 or m < 0:
        raise DomainError(f"box dimensions must be nonnegative: r={r}, m={m}")
    return [lam for d in range(r * m + 1) for lam in partitions_of(d, r, m)]


def add_full_column(mu: Partition, r: int) -> Partition:
    if r < 1:
        raise DomainError(f"column height must be positive: r={r}")
    if len(mu) > r:
        raise DomainError(f"partition {tuple(mu)} has more than {r} parts")
    padded = list(mu) + [0] * (r - len(mu))
    return Partition(p + 1 for p in padded)


def remove_full_column(lam: Partition, r: int) -> Partition:
    if len(lam) != r:
        raise DomainError(f"partition {tuple(lam)} does not have exactly {r} parts")
    return Partition(p - 1 for p in lam)


def basis_key(lam: Partition) -> tuple[int, list[int]]:
    """Sort key matching enumerate_box: by weight, then lexicographically descending."""
    return weight(lam), [-p for p in lam]
