"""Command-line interface.

Subcommands: graphical, realize, split, recognize, p4s, generate,
eggleton (construct/decompose), switch-path, export-dot.  Exit status is 0
on success, 1 on a negative verdict (NO / NOT-SPLIT / SWITCHABLE / NONE),
2 on input errors.  Output depends only on argv, so identical invocations
produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import fileio
from .generation import GenConfig, chord_frequencies, find_all_p4s, generate_unswitchable
from .graphs import QuadKind
from .realization import NonGraphicalError, realize, reduce_head
from .split import split_partition, split_sides
from .switching import two_switch_path
from .unswitchable import NotUnswitchableError, eggleton_construct, eggleton_decompose, recognize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _parse_sequence(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"sequence must be comma-separated integers, got {text!r}")
    if not values:
        raise ValueError("sequence must be non-empty")
    return values


def _sorted_sequence(text: str) -> list[int]:
    values = _parse_sequence(text)
    ordered = sorted(values, reverse=True)
    if ordered != values:
        print("note: sequence reordered non-increasing: " + _fmt(ordered))
    return ordered


def _fmt(values) -> str:
    return ",".join(str(v) for v in values)


def _fmt_quad(quad) -> str:
    kind = {QuadKind.P4: "P4", QuadKind.C4: "C4", QuadKind.TWO_K2: "2K2"}[quad.kind]
    return f"{kind} " + " ".join(str(v) for v in quad.vertices)


def _cmd_graphical(args) -> int:
    vals = _sorted_sequence(args.sequence)
    print(_fmt(vals))
    if any(v < 0 for v in vals):
        print("NO (negative entry)")
        return EXIT_NEGATIVE
    if vals[0] > len(vals) - 1:
        print("NO (head degree exceeds length-1)")
        return EXIT_NEGATIVE
    if sum(vals) % 2:
        print("NO (odd degree sum)")
        return EXIT_NEGATIVE
    while vals and vals[0] > 0:
        try:
            vals = list(reduce_head(vals).values)
        except NonGraphicalError:
            print("NO (reduction forces a negative entry)")
            return EXIT_NEGATIVE
        print("reduce: " + _fmt(vals))
    print("YES")
    return EXIT_OK


def _cmd_realize(args) -> int:
    vals = _sorted_sequence(args.sequence)
    try:
        g = realize(vals)
    except NonGraphicalError:
        print("NOT GRAPHICAL")
        return EXIT_NEGATIVE
    text = fileio.write_edge_list(g)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_split(args) -> int:
    if os.path.exists(args.target):
        g = fileio.load_graph(args.target)
        from .graphs import degree_sequence

        ds = degree_sequence(g)
    else:
        g = None
        ds = _sorted_sequence(args.target)
    from .split import NotSplitError, split_index

    m = split_index(ds)
    lhs, rhs = split_sides(ds)
    verdict = "SPLIT" if lhs == rhs else "NOT-SPLIT"
    print(f"m={m} lhs={lhs} rhs={rhs} {verdict}")
    if verdict == "NOT-SPLIT":
        return EXIT_NEGATIVE
    if g is not None:
        part = split_partition(g)
        print("clique: " + " ".join(str(v) for v in sorted(part.clique)))
        print("independent: " + " ".join(str(v) for v in sorted(part.independent)))
    return EXIT_OK


def _cmd_recognize(args) -> int:
    g = fileio.load_graph(args.graph)
    verdict = recognize(g)
    if verdict.switchable:
        print("SWITCHABLE")
        print("witness: " + _fmt_quad(verdict.witness))
        return EXIT_NEGATIVE
    print("UNSWITCHABLE")
    return EXIT_OK


def _cmd_p4s(args) -> int:
    g = fileio.load_graph(args.graph)
    independent = frozenset(_parse_sequence(args.independent))
    records = find_all_p4s(g, independent)
    print(f"p4s: {len(records)}")
    for r in records:
        print(f"p4: {r.v1} {r.a} {r.b} {r.v2}")
    for (u, v), count in chord_frequencies(records).items():
        print(f"chord: {u} {v} count={count}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    config = GenConfig(n1=args.n1, n2=args.n2, seed=args.seed)
    from .generation import random_split_graph

    base = random_split_graph(config)
    g = generate_unswitchable(config)
    text = fileio.write_edge_list(g)
    sys.stdout.write(text)
    print(f"repair-edges: {g.m - base.m}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_eggleton(args) -> int:
    if args.action == "construct":
        family = fileio.load_family(args.path)
        g = eggleton_construct(family)
        sys.stdout.write(fileio.write_edge_list(g))
        return EXIT_OK
    g = fileio.load_graph(args.path)
    try:
        family = eggleton_decompose(g)
    except NotUnswitchableError:
        verdict = recognize(g)
        print("NOT UNSWITCHABLE")
        print("witness: " + _fmt_quad(verdict.witness))
        return EXIT_NEGATIVE
    sys.stdout.write(fileio.write_family(family))
    return EXIT_OK


def _cmd_switch_path(args) -> int:
    g = fileio.load_graph(args.source)
    h = fileio.load_graph(args.target)
    path = two_switch_path(g, h, max_states=args.max_states)
    if path is None:
        print("NONE")
        return EXIT_NEGATIVE
    print(f"switches: {len(path)}")
    for s in path:
        (r1, r2), (a1, a2) = s.removed, s.added
        print(
            f"switch: remove {r1[0]}-{r1[1]} {r2[0]}-{r2[1]}"
            f" add {a1[0]}-{a1[1]} {a2[0]}-{a2[1]}"
        )
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    g = fileio.load_graph(args.graph)
    sys.stdout.write(fileio.to_dot(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchgraphs",
        description="Degree sequences, 2-switches, split and unswitchable graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graphical", help="test a degree sequence, printing the reduction chain")
    p.add_argument("sequence")
    p.set_defaults(func=_cmd_graphical)

    p = sub.add_parser("realize", help="realize a graphical sequence as an edge list")
    p.add_argument("sequence")
    p.add_argument("--out", help="also write the edge list to this file")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("split", help="split test for a sequence or an edge-list file")
    p.add_argument("target", help="edge-list file path, or a comma-separated sequence")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("recognize", help="decide whether a graph admits a 2-switch")
    p.add_argument("graph", help="edge-list file")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("p4s", help="list induced P4s and chord frequencies of a split graph")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--independent", required=True, help="comma-separated independent vertices")
    p.set_defaults(func=_cmd_p4s)

    p = sub.add_parser("generate", help="generate a random unswitchable graph")
    p.add_argument("--n1", type=int, required=True, help="independent-set size")
    p.add_argument("--n2", type=int, required=True, help="clique size (at least 2)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="also write the edge list to this file")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("eggleton", help="set-family construction and decomposition")
    p.add_argument("action", choices=("construct", "decompose"))
    p.add_argument("path", help="family file (construct) or edge-list file (decompose)")
    p.set_defaults(func=_cmd_eggleton)

    p = sub.add_parser("switch-path", help="2-switch sequence between two graphs")
    p.add_argument("source", help="edge-list file")
    p.add_argument("target", help="edge-list file")
    p.add_argument("--max-states", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_switch_path)

    p = sub.add_parser("export-dot", help="DOT text for an edge-list file")
    p.add_argument("graph", help="edge-list file")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())
