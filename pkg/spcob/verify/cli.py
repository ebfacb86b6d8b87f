import argparse
from dataclasses import asdict

from spcob.lib import config, logs
from spcob.lib.commands import finish, spcob_cmd
from spcob.lib.display.writer import Writer
from spcob.verify import checks, suite


def route(args: argparse.Namespace, out: Writer) -> int:
    return {
        "prop1": _prop1,
        "prop2": _prop2,
        "exact-seq": _exact_seq,
        "maps": _maps,
        "jacobi-trudi": _jacobi_trudi,
        "straightening": _straightening,
        "lr-positivity": _lr_positivity,
        "hp-ring": _hp_ring,
        "ranks": _ranks,
        "cartan": _cartan,
        "perp": _perp,
        "thom-sign": _thom_sign,
        "closure": _closure,
        "all": _suite,
    }[args.action](args, out)


@spcob_cmd("verify prop1")
def _prop1(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.basis_property(args.r, args.n)])


@spcob_cmd("verify prop2")
def _prop2(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.thom_inclusion_check(args.r, args.n)])


@spcob_cmd("verify exact-seq")
def _exact_seq(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.exact_sequence(args.r, args.n)])


@spcob_cmd("verify maps")
def _maps(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.stabilization_maps(args.r, args.n)])


@spcob_cmd("verify jacobi-trudi")
def _jacobi_trudi(args: argparse.Namespace, out: Writer) -> int:
    reports = [checks.jacobi_trudi(args.r, args.max_deg), checks.h_consistency(args.r, args.max_deg)]
    return finish(out, args.format, reports)


@spcob_cmd("verify straightening")
def _straightening(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.straightening(args.r, args.max_deg)])


@spcob_cmd("verify lr-positivity")
def _lr_positivity(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.lr_positivity(args.r, args.max_deg)])


@spcob_cmd("verify hp-ring")
def _hp_ring(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.hp_ring(args.n)])


@spcob_cmd("verify ranks")
def _ranks(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.ranks(args.max_n)])


@spcob_cmd("verify cartan")
def _cartan(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.cartan(args.max_roots)])


@spcob_cmd("verify perp")
def _perp(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.perp(args.max_roots)])


@spcob_cmd("verify thom-sign")
def _thom_sign(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.thom_sign(args.max_r)])


@spcob_cmd("verify closure")
def _closure(args: argparse.Namespace, out: Writer) -> int:
    return finish(out, args.format, [checks.symplectic_closure(args.N)])


@spcob_cmd("suite all")
def _suite(args: argparse.Namespace, out: Writer) -> int:
    cfg = config.load().suite
    limits = suite.Limits(
        max_r=args.max_r if args.max_r is not None else cfg.max_r,
        max_n=args.max_n if args.max_n is not None else cfg.max_n,
        max_deg=args.max_deg if args.max_deg is not None else cfg.max_deg,
    )
    workers = args.workers if args.workers is not None else cfg.workers
    reports = suite.run_all(limits, workers)
    failed = sum(1 for r in reports if not r.passed)
    logs.info("suite", "all", checks=len(reports), failed=failed, limits=asdict(limits))
    return finish(out, args.format, reports)
