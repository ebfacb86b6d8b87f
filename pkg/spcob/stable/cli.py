import argparse

from spcob.lib.commands import fail, finish, spcob_cmd
from spcob.lib.display.format import emit, table
from spcob.lib.display.writer import Writer
from spcob.lib.serialize import load_inline_or_file
from spcob.stable import msp, thom, tower, whitney
from spcob.stable.series import HomSeries, bsp, series_in


def route(args: argparse.Namespace, out: Writer) -> int:
    return {
        "tower": _tower,
        "coproduct": _coproduct,
        "injectivity": _injectivity,
        "msp-basis": _msp_basis,
        "msp-tower": _msp_tower,
        "sandwich": _sandwich,
        "thom-ideal": _thom_ideal,
        "thom-compat": _thom_compat,
        "coassoc": _coassoc,
    }[args.action](args, out)


def _series_arg(args: argparse.Namespace, nvars: int) -> HomSeries:
    if args.p is not None:
        return HomSeries.gen(bsp(nvars, args.D), args.p)
    return series_in(load_inline_or_file(args.input, args.file))


@spcob_cmd("stable tower")
def _tower(args: argparse.Namespace, out: Writer) -> int:
    if args.n is not None:
        data = tower.identification(args.r, args.D, args.n)
        rows = [[str(m["monomial"]), " + ".join(f"{c}*s{tuple(lam)}" for lam, c in m["image"]) or "0"] for m in data["images"]]
        lines = table(rows, ["monomial", "image"])
        emit(out, args.format, data, lines)
        return 0
    return finish(out, args.format, [tower.limit_from_tower(args.r, args.D)])


@spcob_cmd("stable coproduct")
def _coproduct(args: argparse.Namespace, out: Writer) -> int:
    if args.msp:
        y = msp.msp_coproduct(_series_arg(args, max(args.D, 1)), args.D)
    else:
        if args.r is None or args.s is None:
            fail("stable coproduct needs --r and --s (or --msp)")
        y = whitney.coproduct(_series_arg(args, args.r + args.s), args.r, args.s, args.D)
    emit(out, args.format, y.to_json(), str(y))
    return 0


@spcob_cmd("stable injectivity")
def _injectivity(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [whitney.coproduct_injectivity(args.r, args.s, args.D)])


@spcob_cmd("stable msp-basis")
def _msp_basis(args: argparse.Namespace, out: Writer) -> int:
    R = msp.msp_ring(args.D)
    basis = msp.msp_basis(args.D, args.degree)
    labels = [str(HomSeries.monomial(R, m)) for m in basis]
    emit(out, args.format, {**R.to_json(), "degree": args.degree, "basis": [list(m) for m in basis]}, labels)
    return 0


@spcob_cmd("stable msp-tower")
def _msp_tower(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [msp.msp_tower_check(args.D)])


@spcob_cmd("stable sandwich")
def _sandwich(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [tower.sandwich_check(args.r, args.n)])


@spcob_cmd("stable thom-ideal")
def _thom_ideal(args: argparse.Namespace, out: Writer) -> int:
    if args.input is None and args.file is None and args.p is None:
        return finish(out, args.format, [thom.thom_ideal_check(args.r, args.D)])
    y = thom.thom_ideal_embed(_series_arg(args, args.r))
    emit(out, args.format, y.to_json(), str(y))
    return 0


@spcob_cmd("stable thom-compat")
def _thom_compat(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [whitney.coproduct_thom_compatibility(args.r, args.s, args.D)])


@spcob_cmd("stable coassoc")
def _coassoc(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [whitney.coproduct_coassociativity(args.r, args.s, args.u, args.D)])
