"""Command-line entry point.

Subcommands:
- ``nc``: enumerate NC(k), Kreweras and relative complements, pairings
- ``series``: boxed-star products and inverses of JSON series
- ``dist``: transforms, free convolutions and compressions of JSON distributions
- ``verify``: run an identity target through the verification graph

Exit codes: 0 success, 1 verification failed, 2 usage or input error,
3 truncation exceeded.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from app.config import config
from app.errors import FreeTuplesError, InvalidArgumentError, TruncationExceededError
from app.graphs.verify_graph import build_report, run_verification
from app.models.distribution import JointDistribution
from app.models.partition import NCPartition
from app.models.power_series import NCSeries, to_scalar
from app.models.state import TARGETS
from app.tools import applications, codec, freeprob, nc_lattice, oracle, series

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_TRUNCATION = 3


def configure_logging(level: str) -> None:
    """Log to stderr so stdout only carries results."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def _capped(value, args: argparse.Namespace):
    """Truncate loaded values above the --max-degree cap."""
    return codec.cap_degree(value, args.max_degree)


def _load_series(path: str, args: argparse.Namespace) -> NCSeries:
    return _capped(codec.read_series(path), args)


def _load_distribution(path: str, args: argparse.Namespace) -> JointDistribution:
    return _capped(codec.read_distribution(path), args)


def _check_degree(degree: int, args: argparse.Namespace) -> int:
    if degree < 1 or degree > args.max_degree:
        raise InvalidArgumentError(
            f"degree must be between 1 and --max-degree={args.max_degree}, got {degree}"
        )
    return degree


def _emit(value, args: argparse.Namespace) -> int:
    if getattr(args, "out", None):
        codec.write_value(value, args.out)
    else:
        sys.stdout.write(codec.dumps(value))
    return EXIT_OK


# nc


def cmd_nc_enumerate(args: argparse.Namespace) -> int:
    for pi in nc_lattice.enumerate_nc(args.k):
        print(pi.text())
    return EXIT_OK


def cmd_nc_kreweras(args: argparse.Namespace) -> int:
    print(nc_lattice.kreweras(NCPartition.parse(args.pi, args.k)).text())
    return EXIT_OK


def cmd_nc_relative(args: argparse.Namespace) -> int:
    pi = NCPartition.parse(args.pi, args.k)
    rho = NCPartition.parse(args.rho, args.k)
    print(nc_lattice.relative_kreweras(pi, rho).text())
    return EXIT_OK


def cmd_nc_ncp(args: argparse.Namespace) -> int:
    for pi in nc_lattice.enumerate_ncp(args.k):
        print(pi.text())
    return EXIT_OK


def cmd_nc_twice(args: argparse.Namespace) -> int:
    print(nc_lattice.twice(NCPartition.parse(args.rho, args.k)).text())
    return EXIT_OK


# series


def cmd_series_star(args: argparse.Namespace) -> int:
    f = _load_series(args.lhs, args)
    g = _load_series(args.rhs, args)
    return _emit(series.boxstar(f, g), args)


def cmd_series_invert(args: argparse.Namespace) -> int:
    return _emit(series.boxstar_inverse(_load_series(args.input, args)), args)


# dist


def cmd_dist_r(args: argparse.Namespace) -> int:
    return _emit(freeprob.r_transform(_load_distribution(args.input, args)), args)


def cmd_dist_m(args: argparse.Namespace) -> int:
    return _emit(freeprob.from_r_series(_load_series(args.input, args)), args)


def cmd_dist_freeadd(args: argparse.Namespace) -> int:
    mu_a = _load_distribution(args.a, args)
    mu_b = _load_distribution(args.b, args)
    return _emit(freeprob.free_additive(mu_a, mu_b), args)


def cmd_dist_freemul(args: argparse.Namespace) -> int:
    mu_a = _load_distribution(args.a, args)
    mu_b = _load_distribution(args.b, args)
    return _emit(freeprob.multiply_free_tuples(mu_a, mu_b, args.formula), args)


def cmd_dist_freeprod_oracle(args: argparse.Namespace) -> int:
    mu_a = _load_distribution(args.a, args)
    mu_b = _load_distribution(args.b, args)
    degree = _check_degree(args.degree, args)
    return _emit(oracle.free_product_centering(mu_a, mu_b, degree), args)


def cmd_dist_compress(args: argparse.Namespace) -> int:
    mu = _load_distribution(args.input, args)
    return _emit(applications.compress(mu, to_scalar(args.alpha)), args)


def cmd_dist_conjugate_sc(args: argparse.Namespace) -> int:
    mu = _load_distribution(args.input, args)
    return _emit(applications.conjugate_by_semicircular(mu, to_scalar(args.s)), args)


def cmd_dist_semigroup(args: argparse.Namespace) -> int:
    mu = _load_distribution(args.input, args)
    return _emit(applications.semigroup_t(mu, to_scalar(args.t)), args)


# verify


def cmd_verify(args: argparse.Namespace) -> int:
    degree = _check_degree(args.degree, args)
    params = {
        "a": args.a,
        "b": args.b,
        "s": args.s,
        "alpha": args.alpha,
        "p": args.p,
        "n": args.n,
        "seed": args.seed,
        "max_degree": args.max_degree,
    }
    state = run_verification(args.target, degree, params)
    if args.json:
        sys.stdout.write(build_report(state).model_dump_json(indent=2) + "\n")
    else:
        for line in state.get("report", []):
            print(line)
    return EXIT_OK if state.get("status") == "passed" else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="free-tuples",
        description="Exact non-crossing partition and R-transform calculus.",
    )
    parser.add_argument("--max-degree", type=int, default=config.MAX_DEGREE,
                        help="cap on requested and loaded degrees (default %(default)s)")
    parser.add_argument("--log-level", default=config.LOG_LEVEL,
                        help="logging level for stderr (default %(default)s)")
    commands = parser.add_subparsers(dest="command", required=True)

    nc = commands.add_parser("nc", help="non-crossing partitions").add_subparsers(dest="action", required=True)
    p = nc.add_parser("enumerate", help="list NC(k)")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_nc_enumerate)
    p = nc.add_parser("kreweras", help="Kreweras complement")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", required=True, help='partition such as "1,4,8|2,3|5,6|7"')
    p.set_defaults(handler=cmd_nc_kreweras)
    p = nc.add_parser("relative", help="relative Kreweras complement K_rho(pi)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--rho", required=True)
    p.set_defaults(handler=cmd_nc_relative)
    p = nc.add_parser("ncp", help="non-crossing pairings of 2k points")
    p.add_argument("--k", type=int, required=True, help="number of points (even)")
    p.set_defaults(handler=cmd_nc_ncp)
    p = nc.add_parser("twice", help="rho on odd points, K(rho) on even points")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rho", required=True)
    p.set_defaults(handler=cmd_nc_twice)

    sr = commands.add_parser("series", help="boxed-star calculus").add_subparsers(dest="action", required=True)
    p = sr.add_parser("star", help="boxed-star product of two series")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_series_star)
    p = sr.add_parser("invert", help="boxed-star inverse")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_series_invert)

    ds = commands.add_parser("dist", help="joint distributions").add_subparsers(dest="action", required=True)
    p = ds.add_parser("r", help="distribution -> R-transform")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_dist_r)
    p = ds.add_parser("m", help="R-transform -> distribution")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_dist_m)
    for name, handler in (("freeadd", cmd_dist_freeadd), ("freemul", cmd_dist_freemul)):
        p = ds.add_parser(name, help=f"free {'sum' if name == 'freeadd' else 'product'} of two families")
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        p.add_argument("--out")
        if name == "freemul":
            p.add_argument("--formula", choices=["rr", "rm", "mr"], default="rr")
        p.set_defaults(handler=handler)
    p = ds.add_parser("freeprod-oracle", help="joint distribution of two free families")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_dist_freeprod_oracle)
    p = ds.add_parser("compress", help="compression by a free projection of trace alpha")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_dist_compress)
    p = ds.add_parser("conjugate-sc", help="R-transform of b a_i b for a free semicircular b")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--s", required=True, help="variance r^2/4")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_dist_conjugate_sc)
    p = ds.add_parser("semigroup", help="mu_t with R(mu_t) = t R(mu)")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_dist_semigroup)

    p = commands.add_parser("verify", help="check identities, exit 1 on the first failing one")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--a", help="distribution of the a-family (random if omitted)")
    p.add_argument("--b", help="distribution of the b-family (random if omitted)")
    p.add_argument("--s", help="semicircular variance, default 1/2")
    p.add_argument("--alpha", help="projection trace, default 1/2")
    p.add_argument("--p", type=int, help="letter of the projection in --b, default 1")
    p.add_argument("--n", type=int, help="size of generated families")
    p.add_argument("--seed", type=int, help="seed for generated inputs")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.set_defaults(handler=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except TruncationExceededError as e:
        print(f"error: truncation exceeded: {e}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (FreeTuplesError, ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> int:
    """Main entry point."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
