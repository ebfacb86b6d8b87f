import argparse
import logging
import sys
from collections.abc import Sequence

from spcob import __version__
from spcob.core.errors import SpcobError
from spcob.core.types import FORMATS
from spcob.lib import config
from spcob.lib.display import ansi
from spcob.lib.display.writer import Writer, std

_ROUTES = {
    "partition": "spcob.symfun.cli",
    "schur": "spcob.symfun.cli",
    "ring": "spcob.grass.cli",
    "map": "spcob.grass.cli",
    "stable": "spcob.stable.cli",
    "pclass": "spcob.pclass.cli",
    "spmat": "spcob.spmat.cli",
    "verify": "spcob.verify.cli",
    "suite": "spcob.verify.cli",
}


def _leaf() -> argparse.ArgumentParser:
    # lets --format / --verbose follow the subcommand too, without clobbering the top-level value
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format")
    p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="debug logging")
    return p


def _input_args(p: argparse.ArgumentParser, flag: str = "--input") -> None:
    p.add_argument(flag, dest="input", help="inline JSON")
    p.add_argument("--file", help="read the JSON from a file")


def _partition(subs: argparse._SubParsersAction, leaf: argparse.ArgumentParser) -> None:
    g = subs.add_parser("partition", help="partition combinatorics")
    acts = g.add_subparsers(dest="action", required=True)
    p = acts.add_parser("conjugate", parents=[leaf], help="dual partition")
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts, e.g. 3,1")
    p = acts.add_parser("box", parents=[leaf], help="partitions in an r x m box")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    for name, helptext in (("add-column", "prepend a full column of height r"), ("remove-column", "strip a full column")):
        p = acts.add_parser(name, parents=[leaf], help=helptext)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--r", type=int, required=True)


def _schur(subs: argparse._SubParsersAction, leaf: argparse.ArgumentParser) -> None:
    g = subs.add_parser("schur", help="Schur functions")
    acts = g.add_subparsers(dest="action", required=True)
    p = acts.add_parser("expand", parents=[leaf], help="s_lambda in the e, h or x basis")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--basis", choices=["e", "h", "x"], default="e")
    p = acts.add_parser("multiply", parents=[leaf], help="product in the Schur basis")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--left", required=True, help="partition or polynomial JSON")
    p.add_argument("--right", required=True, help="partition or polynomial JSON")
    p = acts.add_parser("convert", parents=[leaf], help="change of basis")
    _input_args(p)
    p.add_argument("--to", choices=["e", "x", "schur"], required=True)
    p = acts.add_parser("h", parents=[leaf], help="complete homogeneous h_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--basis", choices=["e", "x"], default="e")


def _grass(subs: argparse._SubParsersAction, leaf: argparse.ArgumentParser) -> None:
    g = subs.add_parser("ring", help="HGr(r, n) cohomology rings")
    acts = g.add_subparsers(dest="action", required=True)
    p = acts.add_parser("hgr", parents=[leaf], help="rank, basis, normal forms, products")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--rank", action="store_true")
    mode.add_argument("--basis", action="store_true")
    mode.add_argument("--normal-form", dest="normal_form", metavar="JSON", help="polynomial JSON ('-' with --file)")
    mode.add_argument("--multiply", nargs=2, metavar="JSON")
    p.add_argument("--file", help="read the --normal-form JSON from a file")

    g = subs.add_parser("map", help="stabilization maps and the Thom inclusion (r, n name the target)")
    acts = g.add_subparsers(dest="action", required=True)
    for name, helptext in (
        ("alpha", "HGr(r, n+1) -> HGr(r, n)"),
        ("beta", "HGr(r+1, n+1) -> HGr(r, n)"),
        ("thom", "Z[e]/(h_{n-r}..h_{n-1}) -> HGr(r, n)"),
    ):
        p = acts.add_parser(name, parents=[leaf], help=helptext)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        _input_args(p)


def _stable(subs: argparse._SubParsersAction, leaf: argparse.ArgumentParser) -> None:
    g = subs.add_parser("stable", help="truncated power series rings of BSp and MSp")
    acts = g.add_subparsers(dest="action", required=True)

    def add(name: str, helptext: str, *flags: str) -> argparse.ArgumentParser:
        p = acts.add_parser(name, parents=[leaf], help=helptext)
        for flag in flags:
            p.add_argument(f"--{flag}", type=int, required=True)
        return p

    p = add("tower", "limit of the HGr(r, n) tower in degrees <= D", "r", "D")
    p.add_argument("--n", type=int, help="print the identification with HGr(r, n) instead")
    p = acts.add_parser("coproduct", parents=[leaf], help="Whitney coproduct")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--D", type=int, required=True)
    p.add_argument("--p", type=int, help="use the generator p_i as input")
    p.add_argument("--msp", action="store_true", help="stable coproduct on A(MSp)")
    _input_args(p)
    add("injectivity", "coproduct has zero kernel in degrees <= D", "r", "s", "D")
    p = add("msp-basis", "monomial basis of A(MSp) in one degree", "D")
    p.add_argument("--degree", type=int, required=True)
    add("msp-tower", "stabilization of the MSp tower", "D")
    add("sandwich", "I_{r(n-r)+1} in (h) in I_{n-r+1}", "r", "n")
    p = add("thom-ideal", "exactness check, or p_r * x with an input", "r", "D")
    p.add_argument("--p", type=int, help="use the generator p_i as input")
    _input_args(p)
    add("thom-compat", "coproduct sends the Thom ideal into (p'_r p''_s)", "r", "s", "D")
    add("coassoc", "coassociativity on generators", "r", "s", "u", "D")


def _pclass(subs: argparse._SubParsersAction, leaf: argparse.ArgumentParser) -> None:
    g = subs.add_parser("pclass", help="Pontryagin and Thom classes")
    acts = g.add_subparsers(dest="action", required=True)
    p = acts.add_parser("roots", parents=[leaf], help="classes of a root bundle")
    p.add_argument("--roots", required=True, help="comma-separated root names, 0 for a trivial summand")
    p = acts.add_parser("sum", parents=[leaf], help="Cartan sum")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    for name, helptext in (
        ("relation", "relation of the quaternionic projective bundle"),
        ("perp", "classes of the complement of the tautological subbundle"),
        ("thom", "Thom class restricted to the zero section"),
    ):
        p = acts.add_parser(name, parents=[leaf], help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--roots")
        src.add_argument("--symbolic", type=int, metavar="N", help="opaque classes a1..aN")
    p = acts.add_parser("thom-sign", parents=[leaf], help="(-1)^r")
    p.add_argument("--r", type=int, required=True)


def _spmat(subs: argparse._SubParsersAction, leaf: argparse.ArgumentParser) -> None:
    g = subs.add_parser("spmat", help="symplectic matrices over Z[t]")
    acts = g.add_subparsers(dest="action", required=True)

    def cores(p: argparse.ArgumentParser) -> None:
        which = p.add_mutually_exclusive_group()
        which.add_argument("--explicit", action="store_true", help="the explicit M(t) (default)")
        which.add_argument("--fallback", action="store_true", help="the transvection product")
        which.add_argument("--identity", action="store_true")

    p = acts.add_parser("omega", parents=[leaf], help="standard symplectic form")
    p.add_argument("--size", type=int, required=True)
    p = acts.add_parser("check", parents=[leaf], help="is M symplectic")
    cores(p)
    _input_args(p)
    acts.add_parser(
        "verify-paper-matrix",
        aliases=["verify-explicit"],
        parents=[leaf],
        help="endpoints and symplecticity of M(t)",
    )
    p = acts.add_parser("shift-product", parents=[leaf], help="f_1 ... f_K in 2N dimensions")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--matrix", action="store_true", help="print the product instead of checking it")
    p.add_argument("--at", type=int, help="evaluate at t")
    cores(p)
    p = acts.add_parser("embed", parents=[leaf], help="f_n(t) in 2N dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--at", type=int)
    cores(p)


def _verify(subs: argparse._SubParsersAction, leaf: argparse.ArgumentParser) -> None:
    g = subs.add_parser("verify", help="identity checks")
    acts = g.add_subparsers(dest="action", required=True)
    for name, helptext in (
        ("prop1", "Schur truncation is the quotient map"),
        ("prop2", "the Thom inclusion"),
        ("exact-seq", "exactness of the Thom sequence"),
        ("maps", "alpha and beta are onto ring maps"),
    ):
        p = acts.add_parser(name, parents=[leaf], help=helptext)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
    for name, helptext in (
        ("jacobi-trudi", "determinants against alternants"),
        ("straightening", "Schur round trip"),
        ("lr-positivity", "nonnegative structure constants"),
    ):
        p = acts.add_parser(name, parents=[leaf], help=helptext)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--max-deg", dest="max_deg", type=int, default=8)
    p = acts.add_parser("hp-ring", parents=[leaf], help="A(HP^n) = Z[zeta]/(zeta^{n+1})")
    p.add_argument("--n", type=int, required=True)
    p = acts.add_parser("ranks", parents=[leaf], help="binomial ranks of every HGr(r, n)")
    p.add_argument("--max-n", dest="max_n", type=int, default=8)
    for name, default in (("cartan", 5), ("perp", 4)):
        p = acts.add_parser(name, parents=[leaf])
        p.add_argument("--max-roots", dest="max_roots", type=int, default=default)
    p = acts.add_parser("thom-sign", parents=[leaf])
    p.add_argument("--max-r", dest="max_r", type=int, default=6)
    p = acts.add_parser("closure", parents=[leaf], help="symplectic matrices under products")
    p.add_argument("--N", type=int, default=4)

    g = subs.add_parser("suite", help="acceptance battery")
    acts = g.add_subparsers(dest="action", required=True)
    p = acts.add_parser("all", parents=[leaf], help="run every check")
    p.add_argument("--max-r", dest="max_r", type=int)
    p.add_argument("--max-n", dest="max_n", type=int)
    p.add_argument("--max-deg", dest="max_deg", type=int)
    p.add_argument("--workers", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spcob",
        description="Exact algebra of quaternionic Grassmannians, BSp and MSp.",
    )
    parser.add_argument("--version", action="version", version=f"spcob {__version__}")
    parser.add_argument("--format", choices=FORMATS, help="json (default) or text")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    subs = parser.add_subparsers(dest="command", help="Command to run")
    leaf = _leaf()
    for add in (_partition, _schur, _grass, _stable, _pclass, _spmat, _verify):
        add(subs, leaf)
    return parser


def run(argv: Sequence[str], out: Writer) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)
    if not args.command:
        parser.print_help()
        return 0
    logging.getLogger().setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        args.format = config.output_format(args.format)
    except SpcobError as e:
        out.error(str(e))
        return e.exit_code
    if args.format == "text" and not sys.stdout.isatty():
        ansi.use(ansi.PLAIN)
    module = __import__(_ROUTES[args.command], fromlist=["route"])
    return module.route(args, out)


def main() -> None:
    logging.basicConfig(
        level=logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    sys.exit(run(sys.argv[1:], std()))
