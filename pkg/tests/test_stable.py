import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spcob.core.errors import DomainError, ParseError, RingMismatchError
from spcob.grass import GrassElem, GrassRing
from spcob.stable import (
    HomSeries,
    SeriesRing,
    ThomIdealElem,
    blocks,
    bsp,
    coproduct,
    coproduct_coassociativity,
    coproduct_generator_images,
    coproduct_injectivity,
    coproduct_thom_compatibility,
    identification,
    limit_from_tower,
    monomials,
    msp_basis,
    msp_coproduct,
    msp_ring,
    msp_tower_check,
    restrict,
    sandwich_check,
    series_in,
    substitute,
    thom_ideal_check,
    thom_ideal_embed,
    to_grass,
    whitney_sum,
)
from spcob.symfun import Partition


def p(R: SeriesRing, i: int) -> HomSeries:
    return HomSeries.gen(R, i)


def test_series_ring_validation():
    with pytest.raises(DomainError):
        SeriesRing((), (), 2)
    with pytest.raises(DomainError):
        SeriesRing(("a", "b"), (1,), 2)
    with pytest.raises(DomainError):
        SeriesRing(("a",), (0,), 2)
    with pytest.raises(DomainError):
        bsp(0, 3)
    with pytest.raises(DomainError):
        blocks([1, 0], 2)


def test_products_are_truncated():
    R = bsp(2, 3)
    x = p(R, 1) + p(R, 2)
    square = x**2
    assert square == p(R, 1) ** 2 + 2 * p(R, 1) * p(R, 2)
    assert p(R, 1) ** 4 == HomSeries.zero(R)
    assert x**0 == HomSeries.one(R)


def test_gen_out_of_range():
    with pytest.raises(DomainError):
        HomSeries.gen(bsp(2, 3), 3)
    with pytest.raises(DomainError):
        HomSeries.var(bsp(2, 3), "q1")


def test_monomials_are_lex_descending():
    assert monomials(bsp(2, 4), 4) == [(4, 0), (2, 1), (0, 2)]
    assert monomials(bsp(3, 3), 0) == [(0, 0, 0)]
    assert monomials(bsp(2, 3), -1) == []


def test_grading_helpers():
    R = bsp(2, 4)
    x = p(R, 1) * p(R, 2) + p(R, 2) + HomSeries.one(R)
    assert x.degrees() == {0, 2, 3}
    assert not x.is_homogeneous()
    assert x.component(2) == p(R, 2)
    assert x.truncate(2).ring.trunc == 2
    assert x.truncate(2) == HomSeries.from_terms(bsp(2, 2), {(0, 1): 1, (0, 0): 1})
    assert x.eval_zero(2) == HomSeries.one(R)
    assert (p(R, 1) * p(R, 2)).divisible_by(2)
    assert not x.divisible_by(2)
    with pytest.raises(DomainError):
        x.truncate(5)
    with pytest.raises(DomainError):
        x.widen(1)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        p(bsp(2, 3), 1) + p(bsp(2, 4), 1)


def test_substitute_is_a_ring_map():
    src = bsp(2, 4)
    dst = bsp(1, 4)
    t = p(dst, 1)
    x = p(src, 1) * p(src, 2) + p(src, 2) * 3
    # p1 -> t, p2 -> t^2
    assert substitute(x, [t, t**2], dst) == t**3 + 3 * t**2
    with pytest.raises(DomainError):
        substitute(x, [t], dst)


def test_series_in_defaults_names_and_weights():
    x = series_in({"vars": 2, "trunc": 3, "terms": [{"key": [1, 1], "coeff": "2"}, {"key": [1, 1], "coeff": 1}]})
    R = bsp(2, 3)
    assert x == 3 * p(R, 1) * p(R, 2)
    out = x.to_json()
    assert out["names"] == ["p1", "p2"]
    assert out["weights"] == [1, 2]
    assert out["terms"] == [{"key": [1, 1], "coeff": "3"}]


@pytest.mark.parametrize(
    "data",
    [
        {"vars": 0, "trunc": 3, "terms": []},
        {"vars": 2, "trunc": -1, "terms": []},
        {"vars": 2, "trunc": 3, "terms": [{"key": [1], "coeff": "1"}]},
        {"vars": 2, "trunc": 3, "names": ["a"], "terms": []},
        {"vars": 2, "trunc": 3},
    ],
)
def test_series_in_rejects(data):
    with pytest.raises(ParseError):
        series_in(data)


def test_series_in_drops_terms_above_truncation():
    x = series_in({"vars": 1, "trunc": 2, "terms": [{"key": [3], "coeff": "1"}, {"key": [1], "coeff": "1"}]})
    assert x == p(bsp(1, 2), 1)


def test_to_grass_sends_p_to_e():
    S = bsp(2, 4)
    R = GrassRing(2, 4)
    assert to_grass(p(S, 2), R) == GrassElem.schur(R, Partition([1, 1]))
    assert to_grass(p(S, 1) ** 2, R) == GrassElem.schur(R, Partition([2])) + GrassElem.schur(R, Partition([1, 1]))
    assert to_grass(p(S, 2) ** 3, R) == GrassElem.zero(R)
    with pytest.raises(DomainError):
        to_grass(p(S, 1), GrassRing(3, 5))


@pytest.mark.parametrize(("r", "D"), [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_limit_from_tower(r, D):
    report = limit_from_tower(r, D)
    assert report.check == "stable.tower"
    assert report.passed, report.witness


def test_limit_from_tower_rejects_bad_parameters():
    with pytest.raises(DomainError):
        limit_from_tower(0, 2)


@pytest.mark.parametrize(("r", "n"), [(1, 2), (1, 4), (2, 4), (2, 5), (3, 5)])
def test_sandwich(r, n):
    report = sandwich_check(r, n)
    assert report.passed, report.witness


def test_identification_lists_every_monomial():
    data = identification(1, 2, 3)
    assert data["ring"] == {"r": 1, "n": 3}
    assert [m["monomial"] for m in data["images"]] == [[0], [1], [2]]
    assert data["images"][2]["image"] == [[[2], "1"]]


def test_thom_embedding_and_cofactor():
    R = bsp(2, 3)
    y = thom_ideal_embed(p(R, 1))
    assert y.ring.trunc == 5
    assert y.series == p(bsp(2, 5), 1) * p(bsp(2, 5), 2)
    assert y.cofactor() == p(R, 1)
    with pytest.raises(DomainError):
        ThomIdealElem(p(R, 1))


def test_restrict_kills_last_variable():
    R = bsp(2, 4)
    assert restrict(p(R, 1) + p(R, 2) + p(R, 1) * p(R, 2)) == p(bsp(1, 4), 1)
    with pytest.raises(DomainError):
        restrict(p(bsp(1, 2), 1))


@pytest.mark.parametrize(("r", "D"), [(1, 3), (2, 4), (3, 4), (3, 6)])
def test_thom_ideal_sequence_is_exact(r, D):
    report = thom_ideal_check(r, D)
    assert report.check == "stable.thom_ideal"
    assert report.passed, report.witness


def test_whitney_sum_of_small_blocks():
    T = blocks([2, 1], 3)
    left = [p(T, 1), p(T, 2)]
    right = [p(T, 3)]
    assert whitney_sum(0, left, right, T) == HomSeries.one(T)
    assert whitney_sum(2, left, right, T) == p(T, 2) + p(T, 1) * p(T, 3)
    assert whitney_sum(3, left, right, T) == p(T, 2) * p(T, 3)
    assert whitney_sum(4, left, right, T) == HomSeries.zero(T)


def test_coproduct_of_generators():
    S = bsp(2, 3)
    T = blocks([1, 1], 3)
    assert coproduct(p(S, 1), 1, 1, 3) == HomSeries.var(T, "pa1") + HomSeries.var(T, "pb1")
    assert coproduct(p(S, 2), 1, 1, 3) == HomSeries.var(T, "pa1") * HomSeries.var(T, "pb1")
    assert coproduct(HomSeries.one(S), 1, 1, 3) == HomSeries.one(T)


def test_coproduct_rejects_wrong_source():
    with pytest.raises(DomainError):
        coproduct(p(bsp(3, 3), 1), 1, 1, 3)
    with pytest.raises(DomainError):
        coproduct(p(bsp(2, 3), 1), 0, 2, 3)
    odd = SeriesRing(("q",), (2,), 3)
    with pytest.raises(DomainError):
        coproduct(HomSeries.gen(odd, 1), 1, 1, 3)


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(monomials(bsp(2, 4), 2) + monomials(bsp(2, 4), 3)), st.sampled_from(monomials(bsp(2, 4), 1)))
def test_coproduct_is_multiplicative(a, b):
    S = bsp(2, 4)
    x, y = HomSeries.monomial(S, a), HomSeries.monomial(S, b)
    assert coproduct(x * y, 1, 1, 4) == coproduct(x, 1, 1, 4) * coproduct(y, 1, 1, 4)


@pytest.mark.parametrize(("r", "s", "D"), [(1, 1, 4), (2, 1, 5), (2, 2, 4), (1, 2, 4), (1, 3, 4), (3, 1, 4)])
def test_coproduct_injectivity(r, s, D):
    report = coproduct_injectivity(r, s, D)
    assert report.check == "stable.injectivity"
    assert report.passed, report.witness


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_generator_images_match_closed_forms(r, s):
    report = coproduct_generator_images(r, s, r + s)
    assert report.check == "stable.generator_images"
    assert report.passed, report.witness


def test_generator_images_of_p2():
    R = blocks([2, 1], 2)
    p1, p2, q1 = (HomSeries.gen(R, i) for i in (1, 2, 3))
    assert coproduct(HomSeries.gen(bsp(3, 2), 2), 2, 1, 2) == p2 + p1 * q1


def test_coassociativity():
    assert coproduct_coassociativity(1, 1, 1, 3).passed
    assert coproduct_coassociativity(2, 1, 1, 4).passed


@pytest.mark.parametrize(("r", "s", "D"), [(1, 1, 4), (2, 1, 4), (1, 2, 2)])
def test_thom_compatibility(r, s, D):
    assert coproduct_thom_compatibility(r, s, D).passed


def test_msp_bases():
    assert msp_basis(2, 2) == [(2, 0), (0, 1)]
    assert msp_basis(3, 3) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert msp_basis(2, 3) == []
    assert msp_basis(0, 0) == [(0,)]
    assert msp_ring(0) == bsp(1, 0)
    with pytest.raises(DomainError):
        msp_ring(-1)


@pytest.mark.parametrize("D", [0, 1, 3, 5])
def test_msp_tower(D):
    report = msp_tower_check(D)
    assert report.passed, report.witness


def test_msp_coproduct():
    T = blocks([2, 2], 2)
    x = p(msp_ring(2), 2)
    assert msp_coproduct(x, 2) == HomSeries.var(T, "pa2") + HomSeries.var(T, "pa1") * HomSeries.var(
        T, "pb1"
    ) + HomSeries.var(T, "pb2")
    with pytest.raises(DomainError):
        msp_coproduct(HomSeries.gen(SeriesRing(("q1",), (1,), 2), 1), 2)
