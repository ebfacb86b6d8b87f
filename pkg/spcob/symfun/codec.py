from typing import Any

from spcob.core.errors import DomainError, ParseError
from spcob.lib.serialize import require, terms_in, terms_out
from spcob.symfun.partitions import Partition
from spcob.symfun.polys import EPoly, XPoly
from spcob.symfun.schur import SchurVector

Poly = EPoly | XPoly | SchurVector


def partition_out(lam: Partition) -> list[int]:
    return [int(p) for p in lam]


def poly_out(p: Poly) -> dict[str, Any]:
    if isinstance(p, SchurVector):
        return {"basis": "schur", "r": p.r, "terms": terms_out(p.items)}
    return {"basis": p.basis, "r": p.r, "terms": terms_out(p.items())}


def poly_in(data: Any) -> Poly:
    data = require(data, "basis", "r", "terms")
    basis, r = data["basis"], data["r"]
    if not isinstance(r, int) or isinstance(r, bool) or r < 0:
        raise ParseError(f"'r' must be a nonnegative integer, got {r!r}")
    terms = terms_in(data["terms"])
    try:
        if basis == "schur":
            return SchurVector.from_terms(r, [(Partition(key), c) for key, c in terms])
        if basis == "e":
            return EPoly.from_terms(r, _summed(terms))
        if basis == "x":
            return XPoly.from_terms(r, _summed(terms))
    except DomainError as e:
        raise ParseError(str(e)) from e
    raise ParseError(f"unknown basis {basis!r} (expected e, x or schur)")


def _summed(terms: list[tuple[tuple[int, ...], int]]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for key, c in terms:
        out[key] = out.get(key, 0) + c
    return out
