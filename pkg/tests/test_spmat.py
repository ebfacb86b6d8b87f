import pytest

from spcob.core.errors import DomainError, ParseError
from spcob.spmat import (
    TMatrix,
    TPoly,
    block_embed,
    block_permutation,
    fallback_homotopy,
    is_symplectic,
    omega,
    explicit_homotopy_matrix,
    shift_homotopy_product,
    shift_permutation,
    shift_product_report,
    symplectic_defect,
    verify_explicit_matrix,
)
from spcob.spmat.homotopy import SWAP, fallback_factors, fallback_report, homotopy_core
from spcob.spmat.matrix import matrix_in
from spcob.spmat.tpoly import ONE, T, ZERO


def test_tpoly_arithmetic():
    p = TPoly.of(1, 0, -1)
    assert p.degree == 2
    assert TPoly.of(1, 2, 0, 0).coeffs == (1, 2)
    assert (p + 1) == TPoly.of(2, 0, -1)
    assert (ONE - T) * (1 + T) == p
    assert T**3 == TPoly.of(0, 0, 0, 1)
    assert p - p == ZERO
    assert not ZERO
    assert ZERO.degree == -1
    assert p(1) == 0
    assert p(3) == -8


def test_tpoly_str():
    assert str(TPoly.of(1, 0, -1)) == "1 - t^2"
    assert str(TPoly.of(0, -2, 0, 13)) == "-2t + 13t^3"
    assert str(ZERO) == "0"
    assert str(-T) == "-t"


def test_omega():
    assert omega(2).at(0) == [[0, 1], [-1, 0]]
    w = omega(4)
    assert w.at(0) == [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    assert w.T == -w
    assert (w @ w) == -TMatrix.identity(4)


@pytest.mark.parametrize("size", [0, 3, -2])
def test_omega_rejects_odd_or_empty(size):
    with pytest.raises(DomainError):
        omega(size)


def test_matrix_needs_even_square():
    with pytest.raises(DomainError):
        TMatrix.of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(DomainError):
        TMatrix.of([[1, 0], [0]])


def test_is_symplectic_examples():
    assert is_symplectic(TMatrix.identity(6))
    assert is_symplectic(SWAP)
    doubled = TMatrix.identity(4).scale(2)
    assert not is_symplectic(doubled)
    assert symplectic_defect(doubled) == omega(4).scale(3)


def test_explicit_matrix_endpoints():
    M = explicit_homotopy_matrix()
    assert M.at(0) == TMatrix.identity(4).at(0)
    assert M.at(1) == [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    assert M[0, 2] == TPoly.of(0, -2, 0, 13, 0, -14, 0, 4)
    assert M[3, 3] == TPoly.of(1, 0, -3, 0, 2)


def test_explicit_matrix_is_symplectic():
    M = explicit_homotopy_matrix()
    assert is_symplectic(M)
    assert M.det() == ONE


def test_verify_explicit_matrix_report():
    report = verify_explicit_matrix()
    assert report.check == "spmat.explicit_matrix"
    assert report.passed
    assert report.witness is None
    assert homotopy_core()[1] == "explicit"


def test_fallback_homotopy():
    F = fallback_homotopy()
    assert F.at(0) == TMatrix.identity(4).at(0)
    assert F.at(1) == SWAP.at(0)
    assert is_symplectic(F)
    assert all(is_symplectic(f.matrix) for f in fallback_factors())
    report = fallback_report()
    assert report.passed
    assert report.witness["factors"][0] == "U23(t)"
    assert len(report.witness["factors"]) == 9


def test_block_permutation():
    P = block_permutation(3, [1, 2, 0])
    # block 0 goes to block 1
    assert P.column(0)[2] == ONE
    assert is_symplectic(P)
    with pytest.raises(DomainError):
        block_permutation(3, [0, 0, 1])


def test_block_embed():
    M1 = explicit_homotopy_matrix().evaluate(1)
    assert block_embed(1, 3, M1) == block_permutation(3, [1, 0, 2])
    assert block_embed(2, 3, TMatrix.identity(4)) == TMatrix.identity(6)
    assert is_symplectic(block_embed(2, 4, explicit_homotopy_matrix()))
    with pytest.raises(DomainError):
        block_embed(3, 3, M1)
    with pytest.raises(DomainError):
        block_embed(1, 3, TMatrix.identity(6))


def test_shift_permutation_is_a_cycle():
    assert shift_permutation(4, 3) == [1, 2, 3, 0]
    assert shift_permutation(4, 1) == [1, 0, 2, 3]
    assert shift_permutation(5, 0) == [0, 1, 2, 3, 4]


def test_shift_product_examples():
    assert shift_homotopy_product(4, 1).at(1) == block_permutation(4, [1, 0, 2, 3]).at(0)
    P = shift_homotopy_product(4, 3)
    assert P.at(1) == block_permutation(4, [1, 2, 3, 0]).at(0)
    assert P.at(0) == TMatrix.identity(8).at(0)
    with pytest.raises(DomainError):
        shift_homotopy_product(4, 4)


@pytest.mark.parametrize(("N", "K"), [(2, 1), (3, 2), (4, 3), (5, 2)])
def test_shift_product_report(N, K):
    report = shift_product_report(N, K)
    assert report.check == "spmat.shift_product"
    assert report.params == {"N": N, "K": K, "core": "explicit"}
    assert report.passed, report.witness


def test_shift_product_with_fallback_core():
    assert shift_product_report(3, 2, fallback_homotopy(), "fallback").passed


def test_shift_product_with_identity_core_fails_at_one():
    report = shift_product_report(3, 2, TMatrix.identity(4), "identity")
    assert not report.passed
    assert report.witness["reason"] == "P(1) is not the cyclic shift"


def test_closure_under_products():
    A = block_embed(1, 3, explicit_homotopy_matrix())
    B = block_embed(2, 3, fallback_homotopy())
    assert is_symplectic(A @ B)
    assert is_symplectic(A.evaluate(2) @ B.evaluate(-1))


def test_matrix_codec():
    M = matrix_in({"size": 2, "entries": [[[1], []], [["0", 1], [1]]]})
    assert M == TMatrix.of([[1, 0], [T, 1]])
    assert M.to_json() == {"size": 2, "entries": [[[1], []], [[0, 1], [1]]]}
    big = TMatrix.identity(2).scale(2**60)
    assert big.to_json()["entries"][0][0] == [str(2**60)]


@pytest.mark.parametrize(
    "data",
    [
        {"size": 2, "entries": [[[1], []]]},
        {"size": 2, "entries": [[[1], []], [[1]]]},
        {"size": 2, "entries": [[1, 0], [0, 1]]},
        {"size": 1, "entries": [[[1]]]},
        {"entries": []},
    ],
)
def test_matrix_codec_rejects(data):
    with pytest.raises(ParseError):
        matrix_in(data)
