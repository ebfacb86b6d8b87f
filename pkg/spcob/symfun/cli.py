import argparse

from spcob.core.errors import ParseError
from spcob.lib.commands import fail, spcob_cmd
from spcob.lib.display.format import emit
from spcob.lib.display.writer import Writer
from spcob.lib.serialize import load_inline_or_file
from spcob.symfun import partitions as parts
from spcob.symfun import schur
from spcob.symfun.codec import Poly, partition_out, poly_in, poly_out
from spcob.symfun.partitions import Partition
from spcob.symfun.polys import EPoly, XPoly
from spcob.symfun.schur import SchurVector


def route(args: argparse.Namespace, out: Writer) -> int:
    return {
        "conjugate": _conjugate,
        "box": _box,
        "add-column": _add_column,
        "remove-column": _remove_column,
        "expand": _expand,
        "multiply": _multiply,
        "convert": _convert,
        "h": _h,
    }[args.action](args, out)


def _label(lam: Partition) -> str:
    return f"({','.join(map(str, lam))})"


def _emit_partition(out: Writer, fmt: str, lam: Partition) -> int:
    emit(out, fmt, {"partition": partition_out(lam)}, _label(lam))
    return 0


def _emit_poly(out: Writer, fmt: str, p: Poly) -> int:
    emit(out, fmt, poly_out(p), str(p))
    return 0


def to_schur(p: Poly) -> SchurVector:
    if isinstance(p, SchurVector):
        return p
    if isinstance(p, EPoly):
        return schur.epoly_to_schur(p)
    return schur.xpoly_to_schur(p)


def convert(p: Poly, basis: str) -> Poly:
    if basis == "schur":
        return to_schur(p)
    if basis == "x":
        if isinstance(p, XPoly):
            return p
        return schur.epoly_to_x(p) if isinstance(p, EPoly) else schur.schur_to_x(p)
    if basis == "e":
        return p if isinstance(p, EPoly) else schur.schur_to_epoly(to_schur(p))
    raise ParseError(f"unknown basis {basis!r} (expected e, x or schur)")


def _operand(text: str, r: int) -> SchurVector:
    """A partition like '2,1' or a polynomial JSON object in any basis."""
    if text.lstrip().startswith("{"):
        v = to_schur(poly_in(load_inline_or_file(text, None)))
        if v.r != r:
            raise ParseError(f"operand has r={v.r}, expected {r}")
        return v
    return SchurVector.basis(Partition.parse(text), r)


@spcob_cmd("partition conjugate")
def _conjugate(args: argparse.Namespace, out: Writer) -> int:
    return _emit_partition(out, args.format, parts.conjugate(Partition.parse(args.lam)))


@spcob_cmd("partition box")
def _box(args: argparse.Namespace, out: Writer) -> int:
    box = parts.enumerate_box(args.r, args.m)
    emit(out, args.format, {"r": args.r, "m": args.m, "partitions": [partition_out(p) for p in box]}, [_label(p) for p in box])
    return 0


@spcob_cmd("partition add-column")
def _add_column(args: argparse.Namespace, out: Writer) -> int:
    return _emit_partition(out, args.format, parts.add_full_column(Partition.parse(args.lam), args.r))


@spcob_cmd("partition remove-column")
def _remove_column(args: argparse.Namespace, out: Writer) -> int:
    return _emit_partition(out, args.format, parts.remove_full_column(Partition.parse(args.lam), args.r))


@spcob_cmd("schur expand")
def _expand(args: argparse.Namespace, out: Writer) -> int:
    lam = Partition.parse(args.lam)
    if args.basis == "e":
        return _emit_poly(out, args.format, schur.schur_jt_e(lam, args.vars))
    if args.basis == "h":
        return _emit_poly(out, args.format, schur.schur_jt_h(lam, args.vars))
    if args.basis == "x":
        return _emit_poly(out, args.format, schur.schur_alternant(lam, args.vars))
    fail(f"unknown basis {args.basis!r}")


@spcob_cmd("schur multiply")
def _multiply(args: argparse.Namespace, out: Writer) -> int:
    a, b = _operand(args.left, args.vars), _operand(args.right, args.vars)
    return _emit_poly(out, args.format, schur.multiply_schur(a, b))


@spcob_cmd("schur convert")
def _convert(args: argparse.Namespace, out: Writer) -> int:
    p = poly_in(load_inline_or_file(args.input, args.file))
    return _emit_poly(out, args.format, convert(p, args.to))


@spcob_cmd("schur h")
def _h(args: argparse.Namespace, out: Writer) -> int:
    if args.basis == "x":
        return _emit_poly(out, args.format, schur.h_expand_x(args.m, args.vars))
    return _emit_poly(out, args.format, schur.h_poly(args.m, args.vars))
