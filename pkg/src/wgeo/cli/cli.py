#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Command-line interface for wgeo.

This module provides the CLI entrypoint for building and minimizing
Whitehead graphs, certifying words as not virtually geometric,
re-verifying certificates and running splice simulations.
"""

import argparse

try:
    import argcomplete
except ImportError:
    argcomplete = None
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from .. import config
from ..core.certify import (
    Verdict,
    certify,
    scan_words,
    verify_certificate,
)
from ..core.connectivity import edge_connectivity
from ..core.isomorphism import is_isomorphic
from ..core.multigraph import MultiGraph
from ..core.planarity import is_planar
from ..core.report import ReportGenerator
from ..core.splice import cover_trial, splice_trial
from ..core.whitehead import build_whitehead_graph, whitehead_reduce
from ..core.word import (
    Alphabet,
    CyclicWord,
    format_word,
    infer_rank,
    parse_collection,
    total_length,
)
from ..file.file_handler import FileHandler
from ..file.json_handler import JSONHandler, dumps
from ..utils.rng import trial_seeds

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

SELFTEST_WORDS = (("bbaaccabc", 3), ("baabccACBBCA", 4))


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log search progress to stderr",
    )
    common.add_argument(
        "--rank",
        type=int,
        help="Rank of the free group (default: highest letter used)",
    )
    common.add_argument(
        "--orbit-cap",
        type=int,
        help="Largest number of minimal-orbit members examined "
        f"(default: WGEO_ORBIT_CAP or {config.DEFAULT_ORBIT_CAP})",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="wgeo",
        description="Whitehead graphs and virtually geometric words.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Whitehead graph
    graph_p = subparsers.add_parser(
        "graph", parents=[common], help="Build the Whitehead graph"
    )
    graph_p.add_argument(
        "words", nargs="+", help="Words, or comma-separated collections"
    )
    fmt_group = graph_p.add_mutually_exclusive_group()
    fmt_group.add_argument(
        "--dot", action="store_true", help="Emit Graphviz DOT (default)"
    )
    fmt_group.add_argument("--json", action="store_true", help="Emit JSON")
    graph_p.add_argument(
        "--stats",
        action="store_true",
        help="Report valences, edge connectivity and planarity",
    )

    # Minimization
    min_p = subparsers.add_parser(
        "minimize", parents=[common], help="Minimize by Whitehead moves"
    )
    min_p.add_argument("words", nargs="+")
    min_p.add_argument(
        "--strategy",
        choices=["enumerate", "cut"],
        default="enumerate",
        help="How shortening automorphisms are found",
    )
    min_p.add_argument("-o", "--output", help="Also save the JSON here")

    # Certification
    cert_p = subparsers.add_parser(
        "certify",
        parents=[common],
        help="Certify words as not virtually geometric",
    )
    cert_p.add_argument("words", nargs="+")
    cert_p.add_argument(
        "--json",
        action="store_true",
        help="Emit the certificate JSON; the verdict goes to stderr",
    )
    cert_p.add_argument("-o", "--output", help="Also save the certificate")

    verify_p = subparsers.add_parser(
        "verify", parents=[common], help="Re-verify a certificate file"
    )
    verify_p.add_argument("file", help="Certificate JSON file")

    scan_p = subparsers.add_parser(
        "scan",
        parents=[common],
        help="Certify every cyclic word of a rank and length",
    )
    scan_p.add_argument("--length", "-l", type=int, required=True)

    # Splice simulation
    sim_p = subparsers.add_parser(
        "splice-sim", parents=[common], help="Run splice simulations"
    )
    source = sim_p.add_mutually_exclusive_group(required=True)
    source.add_argument("--word", help="Simulate covers of this W graph")
    source.add_argument(
        "--regular",
        metavar="N,K",
        help="Splice random K-valent graphs on N vertices",
    )
    sim_p.add_argument(
        "--copies", "-d", type=int, default=2, help="Copies per cover"
    )
    sim_p.add_argument(
        "--trials", "-t", type=int, default=10, help="Number of trials"
    )
    sim_p.add_argument("--seed", "-s", type=int, default=0)
    sim_p.add_argument(
        "--any-label",
        action="store_true",
        help="Splice any equal-valence vertices, not only x with X",
    )
    sim_p.add_argument("--csv", help="Write per-trial rows to this file")
    sim_p.add_argument("-o", "--output", help="Also save the JSON here")

    subparsers.add_parser(
        "selftest", parents=[common], help="Run the embedded regression"
    )

    if argcomplete:
        argcomplete.autocomplete(parser)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments, with argcomplete enabled.

    Returns:
        argparse.Namespace: Parsed arguments.
    """
    return build_parser().parse_args(argv)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _read_words(
    texts: Sequence[str], rank: int | None
) -> tuple[list[CyclicWord], Alphabet]:
    alphabet = Alphabet(rank if rank is not None else infer_rank(texts))
    words: list[CyclicWord] = []
    for text in texts:
        words.extend(parse_collection(text, alphabet))
    return words, alphabet


def _orbit_cap(args: argparse.Namespace) -> int:
    if args.orbit_cap is None:
        return config.orbit_cap_from_env()
    if args.orbit_cap < 1:
        raise ValueError(f"--orbit-cap must be positive, got {args.orbit_cap}")
    return args.orbit_cap


def _emit(data: Any, output: str | None) -> None:
    print(dumps(data), end="")
    if output:
        path = JSONHandler.save_json(data, output)
        print(f"Saved to: {path}", file=sys.stderr)


def graph_stats(g: MultiGraph) -> dict[str, Any]:
    """Vertices, edges, valences, edge connectivity and planarity."""
    return {
        "vertices": g.number_of_vertices(),
        "edges": g.number_of_edges(),
        "valences": {
            g.label(v).name(): k for v, k in sorted(g.valences().items())
        },
        "regular": g.is_regular(),
        "edge_connectivity": edge_connectivity(g)[0],
        "planar": is_planar(g)[0],
    }


def cmd_graph(args: argparse.Namespace) -> int:
    words, alphabet = _read_words(args.words, args.rank)
    g = build_whitehead_graph(words, alphabet)
    if args.json:
        data = g.to_dict()
        if args.stats:
            data["stats"] = graph_stats(g)
        print(dumps(data), end="")
    elif args.stats:
        stats = graph_stats(g)
        valences = " ".join(f"{n}={k}" for n, k in stats["valences"].items())
        print(f"vertices: {stats['vertices']}")
        print(f"edges: {stats['edges']}")
        print(f"valences: {valences}")
        print(f"regular: {stats['regular']}")
        print(f"edge_connectivity: {stats['edge_connectivity']}")
        print(f"planar: {str(stats['planar']).lower()}")
    else:
        print(g.to_dot(), end="")
    return EXIT_OK


def cmd_minimize(args: argparse.Namespace) -> int:
    words, alphabet = _read_words(args.words, args.rank)
    minimal, applied = whitehead_reduce(words, alphabet, args.strategy)
    _emit(
        {
            "minimal_words": [format_word(w) for w in minimal],
            "automorphisms": [phi.encode() for phi in applied],
            "initial_length": total_length(words),
            "final_length": total_length(minimal),
        },
        args.output,
    )
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    words, alphabet = _read_words(args.words, args.rank)
    cert = certify(words, _orbit_cap(args), alphabet)
    summary = f"{cert.verdict.value}"
    if cert.verdict is Verdict.NOT_VIRTUALLY_GEOMETRIC:
        summary += f" (k={cert.k}, representative: "
        summary += ", ".join(cert.representative_words) + ")"
    if cert.orbit["truncated"]:
        summary += f" [orbit truncated at {cert.orbit['cap']}]"
    if args.json:
        print(summary, file=sys.stderr)
        _emit(cert.to_dict(), args.output)
    else:
        print(summary)
        if args.output:
            path = JSONHandler.save_json(cert.to_dict(), args.output)
            print(f"Saved to: {path}", file=sys.stderr)
    return cert.exit_code


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        data = JSONHandler.load_json(Path(args.file).resolve())
    except (OSError, ValueError) as e:
        print(f"Cannot read certificate: {e}", file=sys.stderr)
        return EXIT_INPUT
    result = verify_certificate(data)
    if not result:
        print(f"Invalid certificate: {result.reason}", file=sys.stderr)
        return EXIT_VIOLATION
    print("Certificate verified")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    rank = args.rank if args.rank is not None else 2
    found = 0
    for w, cert in scan_words(rank, args.length, _orbit_cap(args)):
        if cert.verdict is Verdict.NOT_VIRTUALLY_GEOMETRIC:
            found += 1
            print(f"{format_word(w)} k={cert.k}")
    print(f"{found} words certified", file=sys.stderr)
    return EXIT_OK


def _parse_regular(text: str) -> tuple[int, int]:
    try:
        n, k = (int(part) for part in text.split(","))
    except ValueError as e:
        raise ValueError(f"--regular expects N,K, got {text!r}") from e
    return n, k


def cmd_splice_sim(args: argparse.Namespace) -> int:
    if args.trials < 1 or args.copies < 1:
        raise ValueError("--trials and --copies must be positive")
    seeds = trial_seeds(args.seed, args.trials)
    extra: dict[str, Any] = {}
    if args.regular:
        n, k = _parse_regular(args.regular)
        results = [
            splice_trial(k, n, n, s, trial=i) for i, s in enumerate(seeds)
        ]
        d = None
        extra.update(n=n, k=k)
    else:
        words, alphabet = _read_words([args.word], args.rank)
        base = build_whitehead_graph(words, alphabet)
        results = [
            cover_trial(
                base, args.copies, s, trial=i, label_matched=not args.any_label
            )
            for i, s in enumerate(seeds)
        ]
        d = args.copies
        extra.update(
            word=",".join(format_word(w) for w in words),
            base=graph_stats(base),
        )
    report = ReportGenerator.simulation_report(
        results, args.seed, d, **extra
    )
    _emit(report, args.output)
    if args.csv:
        path = ReportGenerator.export_to_csv(
            results, FileHandler.prepare_output(args.csv, ".csv")
        )
        print(f"Exported to: {path}", file=sys.stderr)

    summary = report["summary"]
    print(
        f"{summary['passed']}/{summary['trials']} trials passed",
        file=sys.stderr,
    )
    for r in results:
        if not r.ok:
            print(
                f"Trial {r.trial} (seed {r.seed}): {', '.join(r.violations)}",
                file=sys.stderr,
            )
    return EXIT_OK if summary["failed"] == 0 else EXIT_VIOLATION


def run_selftest() -> list[tuple[str, bool]]:
    """Run the embedded regression and return (check, passed) pairs."""
    checks: list[tuple[str, bool]] = []
    for text, k in SELFTEST_WORDS:
        words, alphabet = _read_words([text], None)
        cert = certify(words, config.DEFAULT_ORBIT_CAP, alphabet)
        checks.append(
            (
                f"certify {text}: NotVirtuallyGeometric, k={k}",
                cert.verdict is Verdict.NOT_VIRTUALLY_GEOMETRIC
                and cert.k == k
                and bool(verify_certificate(cert)),
            )
        )
    words, alphabet = _read_words(["bbaaccabc"], None)
    g = build_whitehead_graph(words, alphabet)
    checks.append(
        (
            "W(bbaaccabc) is K3,3",
            is_isomorphic(g, MultiGraph.complete_bipartite(3, 3))[0],
        )
    )
    return checks


def cmd_selftest(args: argparse.Namespace) -> int:
    checks = run_selftest()
    for name, passed in checks:
        print(f"{'ok' if passed else 'FAIL'}  {name}")
    return EXIT_OK if all(p for _, p in checks) else EXIT_VIOLATION


COMMANDS = {
    "graph": cmd_graph,
    "minimize": cmd_minimize,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "splice-sim": cmd_splice_sim,
    "selftest": cmd_selftest,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point for the CLI.

    Returns:
        int: Exit code: 0 success or NotVirtuallyGeometric, 1 violated
            invariant or invalid certificate, 2 input error,
            3 NotGeometric, 4 Inconclusive.
    """
    args = parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except RuntimeError as e:
        print(f"Simulation failed: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except KeyError as e:
        print(e.args[0] if e.args else e, file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"{e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
