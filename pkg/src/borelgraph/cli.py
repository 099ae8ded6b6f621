"""Command-line surface.

Subcommands: lattice, contract, rho, transport, diagram, atypicality,
characters, verify.  Weight arguments name the shifted parameter nu
(for a Verma with highest weight lam at the empty-partition Borel,
nu = lam + rho):

* --weight-tuple "t_1,..,t_m|t_{m+1},..": the pairings (nu, eps_i);
  these equal the tuple encoding of lam;
* --weight-eps "a_1,..,a_m|b_1,..,b_n": the eps/delta coefficients
  of nu itself.

The two encodings differ by the rho shift and a sign on the delta
block; every weight-consuming command states on stderr (or as a DOT
comment) how it read its input.  Output is byte-stable for fixed input.

Exit codes: 0 ok, 1 usage error, 2 verification violations, 3 internal
consistency assertion (e.g. a color conflict while contracting).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import analysis, lattice
from .analysis import SUITES, SweepConfig, render_report_table, run_all
from .borels import Partition, monotone_walk, rho_b, transport_simple
from .characters import verma_numerator
from .lattice import (
    ContractionColorError,
    RainbowConflictError,
    build_lattice,
    contract_at_weight,
    graph_from_json,
    to_dot,
    to_json,
)
from .weights import Rank, TupleWeight, Weight, atypicality, format_weight, parse_weight

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures to exit code 1
        raise UsageError(message)


def _add_rank(p: argparse.ArgumentParser) -> None:
    p.add_argument("-m", type=int, required=True, help="even block size (>= 1)")
    p.add_argument("-n", type=int, required=True, help="odd block size (>= 1)")


def _add_weight(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--weight-tuple",
        metavar="T",
        help='pairings (nu, eps_i) as "t1,..|..,tk"; rationals like 3/2 allowed',
    )
    group.add_argument(
        "--weight-eps",
        metavar="W",
        help='eps/delta coefficients of the shifted parameter nu',
    )


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output", metavar="FILE", help="write here instead of stdout")


def _rank(args) -> Rank:
    try:
        return Rank(args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_weight(args, rank: Rank) -> tuple[Weight, str]:
    """The shifted parameter nu, plus a banner describing the reading."""
    try:
        if args.weight_tuple is not None:
            t = parse_weight(args.weight_tuple, rank)
            nu = Weight.from_raw_tuple(rank, t.coeffs)
            return nu, "weight read as tuple encoding: entries are (nu, eps_i)"
        nu = parse_weight(args.weight_eps, rank)
        return nu, "weight read as eps/delta coefficients of the shifted parameter nu"
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_partition(text: str, rank: Rank) -> Partition:
    try:
        return Partition.parse(text, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_graph(graph, args, banner: str | None = None) -> None:
    if args.format == "dot":
        text = to_dot(graph)
        if banner:
            text = f"// {banner}\n" + text
    else:
        text = to_json(graph)
        if banner:
            print(f"# {banner}", file=sys.stderr)
    _emit(text, args)


def _cmd_lattice(args) -> int:
    rank = _rank(args)
    _emit_graph(build_lattice(rank), args)
    return EXIT_OK


def _cmd_contract(args) -> int:
    rank = _rank(args)
    nu, banner = _read_weight(args, rank)
    if args.from_json:
        with open(args.from_json) as fh:
            graph = graph_from_json(fh.read())
        if graph.rank != rank:
            raise UsageError(f"graph file has rank {graph.rank}, arguments say {rank}")
    else:
        graph = build_lattice(rank)
    _emit_graph(contract_at_weight(graph, nu), args, banner)
    return EXIT_OK


def _cmd_rho(args) -> int:
    rank = _rank(args)
    p = _read_partition(args.partition, rank)
    w = rho_b(p)
    _emit(f"rho[{p.text()}] = {format_weight(w.coeffs, rank.m)}\n", args)
    return EXIT_OK


def _cmd_transport(args) -> int:
    rank = _rank(args)
    nu, banner = _read_weight(args, rank)
    p = _read_partition(args.partition, rank)
    print(f"# {banner}", file=sys.stderr)
    result = transport_simple(nu, Partition.empty(rank), monotone_walk(p))
    out = [
        f"parameter at {p.text()} (eps coefficients): {format_weight(result.coeffs, rank.m)}",
        f"parameter at {p.text()} (tuple entries):    {format_weight(result.raw_tuple(), rank.m)}",
    ]
    _emit("\n".join(out) + "\n", args)
    return EXIT_OK


def _cmd_diagram(args) -> int:
    rank = _rank(args)
    nu, banner = _read_weight(args, rank)
    print(f"# {banner}", file=sys.stderr)
    t = TupleWeight(rank, nu.raw_tuple())
    try:
        diagram = analysis.weight_diagram(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(diagram.render(), args)
    return EXIT_OK


def _cmd_atypicality(args) -> int:
    rank = _rank(args)
    nu, banner = _read_weight(args, rank)
    print(f"# {banner}", file=sys.stderr)
    _emit(f"{atypicality(nu)}\n", args)
    return EXIT_OK


def _cmd_characters(args) -> int:
    rank = _rank(args)
    nu, banner = _read_weight(args, rank)
    print(f"# {banner}", file=sys.stderr)
    p = _read_partition(args.partition, rank)
    p2 = _read_partition(args.partition2, rank)
    if args.weight2_tuple or args.weight2_eps:
        sub = argparse.Namespace(
            weight_tuple=args.weight2_tuple, weight_eps=args.weight2_eps
        )
        nu2, _ = _read_weight(sub, rank)
    else:
        nu2 = nu
    num = verma_numerator(p, nu)
    num2 = verma_numerator(p2, nu2)
    lines = [
        f"numerator at {p.text()}: {num.n_terms} terms",
        f"numerator at {p2.text()}: {num2.n_terms} terms",
        f"equal: {str(num == num2).lower()}",
        f"shifted weights equal: {str(nu == nu2).lower()}",
    ]
    if args.show_terms:
        lines += ["--- first numerator ---", num.render().rstrip()]
        lines += ["--- second numerator ---", num2.render().rstrip()]
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    rank = _rank(args)
    cfg = SweepConfig(bound=args.bound)
    if args.suite == "all":
        reports = run_all(rank, cfg)
    elif args.suite in SUITES:
        reports = [SUITES[args.suite](rank, cfg)]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all")
    if args.format == "json":
        text = "\n".join(r.to_json() for r in reports) + "\n"
    else:
        text = render_report_table(reports)
    _emit(text, args)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def _build_parser() -> _Parser:
    parser = _Parser(prog="borelgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="emit the colored Young lattice")
    _add_rank(p)
    _add_output(p)
    p.set_defaults(fn=_cmd_lattice)

    p = sub.add_parser("contract", help="emit the contraction at a weight")
    _add_rank(p)
    _add_weight(p)
    _add_output(p)
    p.add_argument("--from-json", metavar="FILE", help="contract this graph instead of building one")
    p.set_defaults(fn=_cmd_contract)

    p = sub.add_parser("rho", help="print the Weyl vector of a Borel")
    _add_rank(p)
    p.add_argument("--partition", default="()", metavar="P", help='rows like "2,1"; "()" is empty')
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(fn=_cmd_rho)

    p = sub.add_parser("transport", help="relabel a simple highest weight at another Borel")
    _add_rank(p)
    _add_weight(p)
    p.add_argument("--partition", required=True, metavar="P", help="target Borel")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(fn=_cmd_transport)

    p = sub.add_parser("diagram", help="ASCII weight diagram of a regular dominant weight")
    _add_rank(p)
    _add_weight(p)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(fn=_cmd_diagram)

    p = sub.add_parser("atypicality", help="maximum orthogonal set of vanishing odd roots")
    _add_rank(p)
    _add_weight(p)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(fn=_cmd_atypicality)

    p = sub.add_parser("characters", help="compare two Verma character numerators")
    _add_rank(p)
    _add_weight(p)
    p.add_argument("--partition", default="()", metavar="P")
    p.add_argument("--partition2", default="()", metavar="P2")
    p.add_argument("--weight2-tuple", metavar="T2")
    p.add_argument("--weight2-eps", metavar="W2")
    p.add_argument("--show-terms", action="store_true")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(fn=_cmd_characters)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(SUITES)}, all")
    _add_rank(p)
    p.add_argument("--bound", type=int, default=3, help="sweep box half-width (default 3)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ContractionColorError, RainbowConflictError, AssertionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
