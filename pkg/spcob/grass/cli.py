import argparse
from typing import Any

from spcob.core.errors import ParseError
from spcob.grass import maps
from spcob.grass.ring import GrassElem, GrassRing, basis, normal_form, rank, truncate
from spcob.lib.commands import fail, spcob_cmd
from spcob.lib.display.format import emit
from spcob.lib.display.writer import Writer
from spcob.lib.serialize import load_inline_or_file
from spcob.symfun.codec import partition_out, poly_in
from spcob.symfun.polys import EPoly, XPoly
from spcob.symfun.schur import xpoly_to_schur


def elem_from_json(data: Any, R: GrassRing) -> GrassElem:
    """Any polynomial JSON (e, x or schur basis) reduced to a normal form in R."""
    p = poly_in(data)
    if p.r != R.r:
        raise ParseError(f"polynomial has r={p.r} but the ring is {R}")
    if isinstance(p, EPoly):
        return normal_form(p, R)
    if isinstance(p, XPoly):
        return truncate(xpoly_to_schur(p), R)
    return truncate(p, R)


def _elem_arg(text: str, R: GrassRing) -> GrassElem:
    return elem_from_json(load_inline_or_file(text, None), R)


def route(args: argparse.Namespace, out: Writer) -> int:
    return {
        "hgr": _hgr,
        "alpha": _alpha,
        "beta": _beta,
        "thom": _thom,
    }[args.action](args, out)


@spcob_cmd("ring hgr")
def _hgr(args: argparse.Namespace, out: Writer) -> int:
    R = GrassRing(args.r, args.n)
    if args.rank:
        emit(out, args.format, {"ring": R.to_json(), "rank": rank(R)}, f"rank {R} = {rank(R)}")
        return 0
    if args.basis:
        parts = basis(R)
        emit(
            out,
            args.format,
            {"ring": R.to_json(), "basis": [partition_out(lam) for lam in parts]},
            [f"s({','.join(map(str, lam))})" for lam in parts],
        )
        return 0
    if args.normal_form is not None:
        inline = None if args.file else args.normal_form
        x = elem_from_json(load_inline_or_file(inline, args.file), R)
        emit(out, args.format, x.to_json(), str(x))
        return 0
    if args.multiply:
        a, b = (_elem_arg(text, R) for text in args.multiply)
        x = a * b
        emit(out, args.format, x.to_json(), str(x))
        return 0
    fail("ring hgr needs one of --rank, --basis, --normal-form, --multiply")


def _mapped(args: argparse.Namespace, out: Writer, source: GrassRing, fn: Any) -> int:
    x = elem_from_json(load_inline_or_file(args.input, args.file), source)
    y = fn(x)
    emit(out, args.format, y.to_json(), str(y))
    return 0


@spcob_cmd("map alpha")
def _alpha(args: argparse.Namespace, out: Writer) -> int:
    return _mapped(args, out, GrassRing(args.r, args.n + 1), maps.alpha_map)


@spcob_cmd("map beta")
def _beta(args: argparse.Namespace, out: Writer) -> int:
    return _mapped(args, out, GrassRing(args.r + 1, args.n + 1), maps.beta_map)


@spcob_cmd("map thom")
def _thom(args: argparse.Namespace, out: Writer) -> int:
    if args.r < 1:
        fail("map thom needs --r >= 1")
    return _mapped(args, out, GrassRing(args.r, args.n - 1), maps.thom_inclusion)
