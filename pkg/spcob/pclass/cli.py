import argparse

from spcob.lib.commands import fail, spcob_cmd
from spcob.lib.display.format import emit
from spcob.lib.display.writer import Writer
from spcob.pclass import bundle, projective, thom
from spcob.pclass.bundle import PontVector
from spcob.pclass.codec import expr_out, parse_roots, vector_out


def route(args: argparse.Namespace, out: Writer) -> int:
    return {
        "roots": _roots,
        "sum": _sum,
        "relation": _relation,
        "perp": _perp,
        "thom-sign": _thom_sign,
        "thom": _thom,
    }[args.action](args, out)


def _vector(args: argparse.Namespace) -> PontVector:
    if args.symbolic is not None:
        return PontVector.symbolic("a", args.symbolic)
    if args.roots is None:
        fail("give --roots or --symbolic")
    return bundle.pont_from_roots(parse_roots(args.roots))


def _vector_lines(pv: PontVector) -> list[str]:
    return [f"p{i} = {c}" for i, c in enumerate(pv.classes)]


@spcob_cmd("pclass roots")
def _roots(args: argparse.Namespace, out: Writer) -> int:
    pv = bundle.pont_from_roots(parse_roots(args.roots))
    emit(out, args.format, vector_out(pv), _vector_lines(pv))
    return 0


@spcob_cmd("pclass sum")
def _sum(args: argparse.Namespace, out: Writer) -> int:
    left = bundle.pont_from_roots(parse_roots(args.left))
    right = bundle.pont_from_roots(parse_roots(args.right))
    pv = bundle.cartan_sum(left, right)
    emit(out, args.format, {**vector_out(pv), "total": expr_out(bundle.total_class(pv))}, _vector_lines(pv))
    return 0


@spcob_cmd("pclass relation")
def _relation(args: argparse.Namespace, out: Writer) -> int:
    rel = projective.hp_relation(_vector(args))
    emit(out, args.format, expr_out(rel), f"{rel} = 0")
    return 0


@spcob_cmd("pclass perp")
def _perp(args: argparse.Namespace, out: Writer) -> int:
    pv = _vector(args)
    perp = projective.perp_classes(pv)
    data = {
        "perp": vector_out(perp),
        "relation": expr_out(projective.hp_relation(pv)),
        "consistent": projective.perp_consistent(pv),
    }
    emit(out, args.format, data, _vector_lines(perp))
    return 0


@spcob_cmd("pclass thom-sign")
def _thom_sign(args: argparse.Namespace, out: Writer) -> int:
    sign = thom.thom_top_sign(args.r)
    emit(out, args.format, {"r": args.r, "sign": sign}, str(sign))
    return 0


@spcob_cmd("pclass thom")
def _thom(args: argparse.Namespace, out: Writer) -> int:
    pv = _vector(args)
    th = thom.thom_class(pv)
    emit(out, args.format, {"rank": pv.rank, "thom": expr_out(th)}, f"z*th = {th}")
    return 0
