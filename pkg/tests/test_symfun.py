import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spcob.core.errors import DomainError, ParseError, RingMismatchError
from spcob.symfun import (
    EPoly,
    Partition,
    SchurVector,
    XPoly,
    e_poly,
    elementary_x,
    enumerate_box,
    epoly_to_schur,
    epoly_to_x,
    h_expand_x,
    h_poly,
    multiply_schur,
    schur_alternant,
    schur_jt_e,
    schur_jt_h,
    schur_to_epoly,
    schur_to_x,
    xpoly_to_schur,
)
from spcob.symfun.codec import poly_in, poly_out


def e(i: int, r: int) -> EPoly:
    return e_poly(i, r)


def test_h_recurrence_small_degrees():
    assert h_poly(0, 2) == EPoly.one(2)
    assert h_poly(1, 2) == e(1, 2)
    assert h_poly(2, 2) == e(1, 2) ** 2 - e(2, 2)
    assert h_poly(3, 2) == e(1, 2) ** 3 - 2 * e(1, 2) * e(2, 2)
    assert h_poly(-1, 2) == EPoly.zero(2)


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_h_matches_complete_homogeneous(r, m):
    assert epoly_to_x(h_poly(m, r)) == h_expand_x(m, r)


def test_e_generators_outside_range():
    assert e_poly(0, 3) == EPoly.one(3)
    assert e_poly(4, 3) == EPoly.zero(3)
    assert e_poly(-1, 3) == EPoly.zero(3)
    assert elementary_x(4, 3) == XPoly.zero(3)


def test_schur_two_one_in_three_variables():
    assert schur_jt_e(Partition([2, 1]), 3) == e(1, 3) * e(2, 3) - e(3, 3)
    assert schur_jt_h(Partition([2, 1]), 3) == e(1, 3) * e(2, 3) - e(3, 3)


def test_schur_of_column_and_row():
    assert schur_jt_e(Partition([1, 1]), 2) == e(2, 2)
    assert schur_jt_e(Partition([3]), 2) == h_poly(3, 2)
    assert schur_jt_e(Partition(), 2) == EPoly.one(2)


def test_schur_rejects_too_many_parts():
    with pytest.raises(DomainError):
        schur_jt_e(Partition([1, 1, 1]), 2)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_jacobi_trudi_forms_agree(r):
    for lam in enumerate_box(r, 3):
        assert schur_jt_e(lam, r) == schur_jt_h(lam, r)


@pytest.mark.parametrize("r", [2, 3])
def test_alternant_matches_determinant(r):
    for lam in enumerate_box(r, 2):
        assert epoly_to_x(schur_jt_e(lam, r)) == schur_alternant(lam, r)


def test_alternant_two_variables():
    # s_(1) = x1 + x2, s_(1,1) = x1 x2
    assert schur_alternant(Partition([1]), 2) == XPoly.from_terms(2, {(1, 0): 1, (0, 1): 1})
    assert schur_alternant(Partition([1, 1]), 2) == XPoly.monomial(2, (1, 1))


def test_straightening_recovers_schur_basis():
    for lam in enumerate_box(3, 2):
        assert xpoly_to_schur(schur_alternant(lam, 3)) == SchurVector.basis(lam, 3)


def test_straightening_rejects_asymmetric():
    with pytest.raises(DomainError):
        xpoly_to_schur(XPoly.monomial(2, (1, 0)))


def test_sorted_representatives_do_not_make_a_polynomial_symmetric():
    p = XPoly.from_terms(3, {(2, 1, 0): 1, (0, 1, 2): 1})
    assert not p.is_symmetric()
    with pytest.raises(DomainError, match="not symmetric"):
        xpoly_to_schur(p)


def test_symmetric_orbit_sum():
    p = XPoly.from_terms(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert p.is_symmetric()
    assert XPoly.zero(3).is_symmetric()


def test_epoly_to_schur():
    v = epoly_to_schur(e(1, 2) ** 2)
    assert v.terms == {Partition([2]): 1, Partition([1, 1]): 1}


def test_multiply_is_littlewood_richardson():
    s1 = SchurVector.basis(Partition([1]), 3)
    s21 = SchurVector.basis(Partition([2, 1]), 3)
    product = multiply_schur(s1, s21)
    assert product.terms == {
        Partition([3, 1]): 1,
        Partition([2, 2]): 1,
        Partition([2, 1, 1]): 1,
    }


def test_multiply_truncates_at_r_rows():
    s1 = SchurVector.basis(Partition([1]), 2)
    s11 = SchurVector.basis(Partition([1, 1]), 2)
    # s_(1,1,1) vanishes with two variables
    assert multiply_schur(s1, s11).terms == {Partition([2, 1]): 1}


def test_multiply_without_variables():
    one = SchurVector.one(0) * 3
    assert multiply_schur(one, SchurVector.one(0) * 2) == SchurVector.one(0) * 6


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from(enumerate_box(2, 2)),
    st.sampled_from(enumerate_box(2, 2)),
)
def test_multiply_has_nonnegative_coefficients(a, b):
    product = multiply_schur(SchurVector.basis(a, 2), SchurVector.basis(b, 2))
    assert all(c > 0 for _, c in product.items)
    assert product.degrees() <= {sum(a) + sum(b)}


def test_schur_vector_arithmetic():
    a = SchurVector.from_terms(2, {Partition([1]): 2, Partition([2]): 1})
    b = SchurVector.from_terms(2, {Partition([1]): -2})
    total = a + b
    assert total.terms == {Partition([2]): 1}
    assert (a - a) == SchurVector.zero(2)
    assert not SchurVector.zero(2)
    assert str(SchurVector.zero(2)) == "0"
    assert str(a) == "2*s(1) + s(2)"


def test_schur_vector_ring_mismatch():
    with pytest.raises(RingMismatchError):
        SchurVector.one(2) + SchurVector.one(3)


def test_epoly_ring_mismatch():
    with pytest.raises(RingMismatchError):
        e(1, 2) + e(1, 3)


def test_epoly_degrees():
    p = e(1, 3) * e(2, 3) + e(3, 3) + EPoly.one(3)
    assert p.degrees() == {0, 3}
    assert not p.is_homogeneous()
    assert p.component(3) == e(1, 3) * e(2, 3) + e(3, 3)
    assert p.truncate(2) == EPoly.one(3)


def test_xpoly_exact_division():
    x1 = XPoly.monomial(2, (1, 0))
    x2 = XPoly.monomial(2, (0, 1))
    assert ((x1 + x2) * x1).exact_div(x1) == x1 + x2


def test_schur_round_trip_through_e_basis():
    v = SchurVector.from_terms(3, {Partition([2, 1]): 1, Partition([1, 1, 1]): -4})
    assert epoly_to_schur(schur_to_epoly(v)) == v
    assert xpoly_to_schur(schur_to_x(v)) == v


def test_codec_accepts_string_and_integer_coefficients():
    data = {"basis": "e", "r": 2, "terms": [{"key": [2, 0], "coeff": "1"}, {"key": [0, 1], "coeff": -1}]}
    assert poly_in(data) == h_poly(2, 2)
    out = poly_out(h_poly(2, 2))
    assert out["basis"] == "e"
    assert {tuple(t["key"]): t["coeff"] for t in out["terms"]} == {(2, 0): "1", (0, 1): "-1"}


def test_codec_big_coefficients_are_exact():
    big = 10**30
    v = SchurVector.basis(Partition([1]), 2, big)
    out = poly_out(v)
    assert out["terms"] == [{"key": [1], "coeff": str(big)}]
    assert poly_in(out) == v


@pytest.mark.parametrize(
    "data",
    [
        {"basis": "q", "r": 2, "terms": []},
        {"basis": "e", "r": -1, "terms": []},
        {"basis": "e", "r": 2},
        {"basis": "e", "r": 2, "terms": [{"key": [1], "coeff": "1"}]},
        {"basis": "schur", "r": 1, "terms": [{"key": [1, 1], "coeff": "1"}]},
        {"basis": "e", "r": 1, "terms": [{"key": [1], "coeff": "x"}]},
    ],
)
def test_codec_rejects_bad_input(data):
    with pytest.raises(ParseError):
        poly_in(data)
