import pytest
from hypothesis import given
from hypothesis import strategies as st

from spcob.core.errors import DomainError, ParseError
from spcob.symfun.partitions import (
    Partition,
    add_full_column,
    conjugate,
    enumerate_box,
    fits_box,
    partitions_of,
    remove_full_column,
    weight,
)

partitions = st.lists(st.integers(min_value=1, max_value=6), max_size=6).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)


def test_trailing_zeros_are_dropped():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    assert Partition([0]) == Partition()


@pytest.mark.parametrize("parts", [[1, 2], [2, -1], [0, 1]])
def test_invalid_parts_rejected(parts):
    with pytest.raises(DomainError):
        Partition(parts)


def test_parse():
    assert Partition.parse("3,1") == Partition([3, 1])
    assert Partition.parse("") == Partition()
    assert Partition.parse("0") == Partition()
    with pytest.raises(ParseError):
        Partition.parse("3,x")
    with pytest.raises(ParseError):
        Partition.parse("1,2")


@pytest.mark.parametrize(
    ("lam", "dual"),
    [((3, 1), (2, 1, 1)), ((2, 2), (2, 2)), ((), ())],
)
def test_conjugate_examples(lam, dual):
    assert conjugate(Partition(lam)) == Partition(dual)


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert weight(conjugate(lam)) == weight(lam)


def test_enumerate_box_examples():
    assert enumerate_box(2, 2) == [
        Partition(()),
        Partition([1]),
        Partition([2]),
        Partition([1, 1]),
        Partition([2, 1]),
        Partition([2, 2]),
    ]
    assert enumerate_box(1, 3) == [Partition(()), Partition([1]), Partition([2]), Partition([3])]
    assert enumerate_box(3, 0) == [Partition(())]


@pytest.mark.parametrize(("r", "m", "count"), [(2, 2, 6), (2, 3, 10), (3, 3, 20), (1, 5, 6)])
def test_box_sizes_are_binomial(r, m, count):
    box = enumerate_box(r, m)
    assert len(box) == count
    assert len(set(box)) == count
    assert all(fits_box(lam, r, m) for lam in box)


def test_box_negative_size_is_domain_error():
    with pytest.raises(DomainError):
        enumerate_box(-1, 2)


def test_partitions_of_is_lex_descending():
    assert partitions_of(4, 4, 4) == [
        Partition([4]),
        Partition([3, 1]),
        Partition([2, 2]),
        Partition([2, 1, 1]),
        Partition([1, 1, 1, 1]),
    ]
    assert partitions_of(4, 2, 2) == [Partition([2, 2])]


def test_add_full_column():
    assert add_full_column(Partition([2]), 3) == Partition([3, 1, 1])
    assert add_full_column(Partition(), 2) == Partition([1, 1])
    with pytest.raises(DomainError):
        add_full_column(Partition([1, 1, 1]), 2)


@given(partitions, st.integers(min_value=1, max_value=7))
def test_remove_full_column_inverts_add(lam, extra):
    r = len(lam) + extra
    assert remove_full_column(add_full_column(lam, r), r) == lam


def test_remove_full_column_needs_exactly_r_parts():
    with pytest.raises(DomainError):
        remove_full_column(Partition([2, 1]), 3)
