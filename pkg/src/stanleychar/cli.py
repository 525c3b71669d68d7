"""Command-line front end: compute characters, polynomials and cross-checks."""

from __future__ import annotations

import argparse
import json
import sys

from . import kerov, maps, mn_oracle, stanley, verify
from .jack import jack_fixture
from .perm import Permutation
from .shapes import MultirectangularShape, Partition

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

DEGREE_GUARD = 7


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list: {text!r}") from exc


def _partition(text: str) -> Partition:
    try:
        return Partition(_parse_int_list(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _guard(parser: argparse.ArgumentParser, k: int, force: bool) -> None:
    if k > DEGREE_GUARD and not force:
        parser.error(
            f"degree {k} exceeds the default guard {DEGREE_GUARD} "
            f"(factorial cost); pass --force to override"
        )


def _emit_poly(poly, output: str) -> None:
    if output == "json":
        print(poly.to_json())
    else:
        print(poly)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stanleychar",
        description="Exact symmetric-group characters on multirectangular Young diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", help="normalized character value")
    p_char.add_argument("--pi", type=_partition, required=True, metavar="K1,K2,...")
    group = p_char.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", type=_partition, metavar="L1,L2,...")
    group.add_argument("--p", type=_parse_int_list, metavar="P1,P2,...")
    p_char.add_argument("--q", type=_parse_int_list, metavar="Q1,Q2,...")
    p_char.add_argument("--output", choices=("text", "json"), default="text")

    p_stanley = sub.add_parser("stanley", help="Stanley character polynomial")
    p_stanley.add_argument("--pi", type=_partition, required=True, metavar="K1,K2,...")
    p_stanley.add_argument("--ell", type=int, default=1)
    p_stanley.add_argument("--output", choices=("text", "json"), default="text")
    p_stanley.add_argument("--threads", type=int, default=1)
    p_stanley.add_argument("--force", action="store_true")

    p_kerov = sub.add_parser("kerov", help="Kerov character polynomial")
    p_kerov.add_argument("--k", type=int, required=True)
    p_kerov.add_argument("--output", choices=("text", "json"), default="text")
    p_kerov.add_argument("--no-cache", action="store_true")
    p_kerov.add_argument("--cache-dir", default=None)
    p_kerov.add_argument("--force", action="store_true")

    p_cum = sub.add_parser("cumulant", help="free cumulant in Stanley coordinates")
    p_cum.add_argument("--j", type=int, required=True)
    p_cum.add_argument("--ell", type=int, default=1)
    p_cum.add_argument("--output", choices=("text", "json"), default="text")
    p_cum.add_argument("--force", action="store_true")

    p_maps = sub.add_parser("maps", help="bipartite map data for a factorization pair")
    p_maps.add_argument("--sigma1", type=_parse_int_list, required=True,
                        metavar="ONE,LINE,...", help="one-line notation")
    p_maps.add_argument("--sigma2", type=_parse_int_list, required=True,
                        metavar="ONE,LINE,...")
    p_maps.add_argument("--lambda", dest="lam", type=_partition, default=None,
                        help="also count embeddings into this diagram")
    p_maps.add_argument("--dot", action="store_true", help="emit DOT instead of a summary")
    p_maps.add_argument("--output", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run cross-verification suites")
    p_verify.add_argument("--suite", default="all",
                          choices=["all"] + list(verify.SUITES))
    p_verify.add_argument("--kmax", type=int, default=6)
    p_verify.add_argument("--threads", type=int, default=1)

    return parser


def _cmd_char(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.lam is not None:
        lam = args.lam
        value = mn_oracle.normalized_character(args.pi, lam)
    else:
        if args.q is None:
            parser.error("--p requires --q")
        shape = MultirectangularShape(args.p, args.q)
        try:
            lam = shape.to_diagram()
        except ValueError as exc:
            parser.error(str(exc))
        value = stanley.evaluate_character(args.pi, shape)
    if args.output == "json":
        print(json.dumps({"pi": list(args.pi), "lambda": list(lam), "value": value}))
    else:
        print(value)
    return EXIT_OK


def _cmd_maps(args: argparse.Namespace) -> int:
    m = maps.build_map(Permutation(args.sigma1), Permutation(args.sigma2))
    if args.dot:
        print(m.to_dot())
        return EXIT_OK
    data = {
        "white_vertices": [list(c) for c in m.white_vertices],
        "black_vertices": [list(c) for c in m.black_vertices],
        "faces": [list(c) for c in m.faces],
        "euler_characteristic": m.euler_characteristic(),
        "genus_per_component": m.genus_per_component(),
    }
    if args.lam is not None:
        data["embeddings"] = maps.count_embeddings(m, args.lam)
    if args.output == "json":
        print(json.dumps(data))
    else:
        print(f"white vertices: {len(m.white_vertices)}  {m.sigma1}")
        print(f"black vertices: {len(m.black_vertices)}  {m.sigma2}")
        print(f"faces: {len(m.faces)}  {m.sigma1 * m.sigma2}")
        print(f"euler characteristic: {data['euler_characteristic']}")
        print(f"genus per component: {data['genus_per_component']}")
        if args.lam is not None:
            print(f"embeddings into {args.lam}: {data['embeddings']}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "char":
        return _cmd_char(parser, args)

    if args.command == "stanley":
        _guard(parser, args.pi.size, args.force)
        if args.ell < 1:
            parser.error("--ell must be >= 1")
        poly = stanley.stanley_polynomial(args.pi, args.ell, threads=args.threads)
        _emit_poly(poly, args.output)
        return EXIT_OK

    if args.command == "kerov":
        if args.k < 1:
            parser.error("--k must be >= 1")
        _guard(parser, args.k, args.force)
        poly = kerov.kerov_polynomial(
            args.k, cache_dir=args.cache_dir, use_cache=not args.no_cache
        )
        _emit_poly(poly, args.output)
        return EXIT_OK

    if args.command == "cumulant":
        if args.j < 2:
            parser.error("--j must be >= 2")
        _guard(parser, args.j - 1, args.force)
        if args.ell < 1:
            parser.error("--ell must be >= 1")
        _emit_poly(kerov.free_cumulant_poly(args.j, args.ell), args.output)
        return EXIT_OK

    if args.command == "maps":
        return _cmd_maps(args)

    if args.command == "verify":
        names = verify.resolve_suites(args.suite)
        report, ok, first_failure = verify.run_suites(
            names, kmax=args.kmax, threads=args.threads
        )
        print(report)
        if not ok:
            print(json.dumps({"first_mismatch": first_failure}, sort_keys=True))
            return EXIT_VERIFY_FAILED
        return EXIT_OK

    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


# Housed here so the front end owns the embedded fixture it verifies.
__all__ = ["main", "build_parser", "entrypoint", "jack_fixture"]

if __name__ == "__main__":
    entrypoint()
