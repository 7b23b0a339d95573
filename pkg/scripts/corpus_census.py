#!/usr/bin/env python3
"""Census of small graphs: how many are split, how many unswitchable.

Enumerates one representative per isomorphism class up to --max-n vertices,
tallies split and unswitchable counts per size, and cross-checks the
recognizer against the exhaustive and elimination oracles on every graph.

Example:
    python3 scripts/corpus_census.py --max-n 6 --cache corpus.txt
"""

import argparse
import os
import sys
import time

from switchgraphs.graphs import degree_sequence
from switchgraphs.oracle import (
    forbidden_free_exhaustive,
    load_corpus,
    nonisomorphic_graphs,
    save_corpus,
    threshold_elimination,
)
from switchgraphs.split import is_split_sequence
from switchgraphs.unswitchable import recognize


def parse_args(argv):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6, help="largest vertex count")
    parser.add_argument(
        "--cache",
        help="corpus file: loaded when present, written after enumeration otherwise",
    )
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    start = time.perf_counter()
    if args.cache and os.path.exists(args.cache):
        levels = load_corpus(args.cache)
        source = f"loaded from {args.cache}"
    else:
        levels = nonisomorphic_graphs(args.max_n)
        source = "enumerated"
        if args.cache:
            save_corpus(args.cache, levels)
    print(f"corpus {source} in {time.perf_counter() - start:.2f}s")
    print(f"{'n':>3} {'graphs':>7} {'split':>7} {'unswitchable':>13}")
    disagreements = 0
    for n in sorted(levels):
        graphs = levels[n]
        split = sum(
            1 for g in graphs if g.n and is_split_sequence(degree_sequence(g))
        )
        unswitchable = 0
        for g in graphs:
            verdict = recognize(g)
            if not verdict.switchable:
                unswitchable += 1
            agreed = {
                not verdict.switchable,
                forbidden_free_exhaustive(g),
                threshold_elimination(g) is not None,
            }
            if len(agreed) != 1:
                disagreements += 1
                print(f"DISAGREEMENT on {g!r}", file=sys.stderr)
        print(f"{n:>3} {len(graphs):>7} {split:>7} {unswitchable:>13}")
    print(f"oracle disagreements: {disagreements}")
    return 0 if disagreements == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
