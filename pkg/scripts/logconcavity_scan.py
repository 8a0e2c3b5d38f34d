#!/usr/bin/env python3
"""Empirical log-concavity scan of coefficient sequences (diagnostic only).

Log-concavity of the sequence is a theorem, so any counterexample reported
here would point at a bug in the polynomial computation rather than at
mathematics. The scan doubles as a stress test of the random corpus.
"""

import argparse
import random

from chromabounds import char_poly, chromatic_poly, coeff_sequence, is_logconcave
from chromabounds.corpus import random_arrangements, random_graphs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--graphs", type=int, default=500)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--arrangements", type=int, default=100)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    failures = 0
    longest = (0, None)
    for g in random_graphs(rng, args.graphs, args.max_n):
        s = coeff_sequence(chromatic_poly(g), g.m)
        if not is_logconcave(s):
            failures += 1
            print(f"NOT log-concave (bug!): n={g.n} edges={sorted(g.edges)} a={s.a}")
        if s.r > longest[0]:
            longest = (s.r, s.a)
    for arr in random_arrangements(rng, args.arrangements, 4, 7):
        s = coeff_sequence(char_poly(arr), arr.m)
        if not is_logconcave(s):
            failures += 1
            print(f"NOT log-concave (bug!): dim={arr.dim} m={arr.m} a={s.a}")

    checked = args.graphs + args.arrangements
    print(f"checked {checked} sequences: {failures} violations")
    print(f"longest sequence seen (r={longest[0]}): {longest[1]}")


if __name__ == "__main__":
    main()
