import argparse

from spcob.core.models import Outcome, Report
from spcob.lib.commands import finish, spcob_cmd
from spcob.lib.display.format import emit
from spcob.lib.display.writer import Writer
from spcob.lib.serialize import load_inline_or_file
from spcob.spmat import homotopy
from spcob.spmat.matrix import TMatrix, is_symplectic, matrix_in, omega, symplectic_defect


def route(args: argparse.Namespace, out: Writer) -> int:
    return {
        "omega": _omega,
        "check": _check,
        "verify-paper-matrix": _verify_explicit,
        "verify-explicit": _verify_explicit,
        "shift-product": _shift_product,
        "embed": _embed,
    }[args.action](args, out)


def _core(args: argparse.Namespace) -> tuple[TMatrix, str]:
    if getattr(args, "fallback", False):
        return homotopy.fallback_homotopy(), "fallback"
    if getattr(args, "identity", False):
        return TMatrix.identity(4), "identity"
    return homotopy.explicit_homotopy_matrix(), "explicit"


def _show(out: Writer, fmt: str, M: TMatrix, at: int | None) -> int:
    M = M.evaluate(at) if at is not None else M
    emit(out, fmt, M.to_json(), str(M))
    return 0


@spcob_cmd("spmat omega")
def _omega(args: argparse.Namespace, out: Writer) -> int:
    return _show(out, args.format, omega(args.size), None)


@spcob_cmd("spmat check")
def _check(args: argparse.Namespace, out: Writer) -> int:
    if args.input is not None or args.file is not None:
        M, label = matrix_in(load_inline_or_file(args.input, args.file)), "input"
    else:
        M, label = _core(args)

    def run() -> Outcome:
        if is_symplectic(M):
            return True, None
        return False, [{"row": i + 1, "col": j + 1, "value": str(a)} for i, j, a in symplectic_defect(M).nonzero_entries()]

    return finish(out, args.format, [Report.timed("spmat.check", {"matrix": label, "size": M.size}, run)])


@spcob_cmd("spmat verify-paper-matrix")
def _verify_explicit(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [homotopy.verify_explicit_matrix()])


@spcob_cmd("spmat shift-product")
def _shift_product(args: argparse.Namespace, out: Writer) -> int:
    core, label = _core(args)
    if args.matrix or args.at is not None:
        return _show(out, args.format, homotopy.shift_homotopy_product(args.N, args.K, core), args.at)
    return finish(out, args.format, [homotopy.shift_product_report(args.N, args.K, core, label)])


@spcob_cmd("spmat embed")
def _embed(args: argparse.Namespace, out: Writer) -> int:
    core, _ = _core(args)
    return _show(out, args.format, homotopy.block_embed(args.n, args.N, core), args.at)
