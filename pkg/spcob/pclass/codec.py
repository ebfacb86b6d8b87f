from typing import Any

import sympy as sp

from spcob.core.errors import ParseError
from spcob.lib.serialize import terms_out
from spcob.pclass.bundle import FormalBundle, PontVector
from spcob.pclass.projective import ZETA


def _gens(exprs: list[sp.Expr]) -> list[sp.Symbol]:
    symbols: set[sp.Symbol] = set()
    for e in exprs:
        symbols |= sp.sympify(e).free_symbols
    return sorted(symbols, key=lambda s: s.name)


def expr_out(expr: sp.Expr, gens: list[sp.Symbol] | None = None) -> dict[str, Any]:
    expr = sp.expand(expr)
    gens = gens if gens is not None else _gens([expr])
    if not gens:
        c = int(expr)
        return {"basis": "symbols", "vars": [], "terms": terms_out([((), c)] if c else [])}
    poly = sp.Poly(expr, *gens)
    return {
        "basis": "symbols",
        "vars": [g.name for g in gens],
        "terms": terms_out((m, int(c)) for m, c in poly.terms() if c),
    }


def vector_out(pv: PontVector) -> dict[str, Any]:
    gens = _gens(list(pv.classes))
    return {"rank": pv.rank, "classes": [expr_out(c, gens) for c in pv.classes]}


def parse_roots(text: str) -> FormalBundle:
    """Comma-separated root names; '0' marks a trivial rank-2 summand, '' the zero bundle."""
    roots: list[sp.Expr] = []
    for raw in (t.strip() for t in text.split(",") if t.strip()):
        if raw == "0":
            roots.append(sp.Integer(0))
        elif raw == ZETA.name:
            raise ParseError(f"{raw!r} is reserved for the projective bundle variable")
        elif raw.isidentifier():
            roots.append(sp.Symbol(raw))
        else:
            raise ParseError(f"bad root {raw!r}: use a symbol name or 0")
    return FormalBundle(tuple(roots))
