#!/usr/bin/env python3
"""Survey composition multiplicity series across nilpotent-part weights.

For a fixed Cartan type and highest weight, walk through a few qualitatively
different choices of mu (fully degenerate, partially degenerate with a
non-standard centralizer, nondegenerate) and print the reduction data and
the resulting series side by side.  Handy for getting a feel for how block
structure collapses as mu becomes less degenerate.

Usage: python3 scripts/block_survey.py [--type A2] [--height 6]
"""

import argparse
from fractions import Fraction

from takiffo import (
    KLCache,
    PartitionCache,
    build_root_system,
    minimal_levi_reduction,
    parse_cartan_type,
    takiff_mult_series,
)


def describe(rs, lam, mu, height, kl, pc):
    w, image, levi = minimal_levi_reduction(mu, rs)
    word = "".join(str(i + 1) for i in w.word) or "e"
    print(f"  mu = {tuple(map(str, mu.coroot))}")
    print(f"  reduction: w = {word}, levi rank {levi.rank}, "
          f"levi simples {[list(b.coeffs) for b in levi.simple_system]}")
    series = takiff_mult_series(lam, mu, height, rs, kl, pc)
    for lam2, value in series:
        coords = ",".join(str(c) for c in lam2.coroot)
        print(f"    [{coords}]  {value}")
    print(f"  ({len(series)} nonzero entries up to height {height})")
    print()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--type", default="A2")
    ap.add_argument("--height", type=int, default=6)
    args = ap.parse_args()

    rs = build_root_system(parse_cartan_type(args.type))
    n = rs.semisimple_rank
    lam = rs.zero_weight()
    kl, pc = KLCache(), PartitionCache()

    mus = {
        "fully degenerate (mu = 0)": rs.zero_weight(),
        "nondegenerate": rs.weight(
            tuple(Fraction(2 * i + 1, 3) for i in range(n))
        ),
    }
    if n >= 2:
        # pairs to zero exactly on the highest root: non-standard centralizer
        coords = [Fraction(0)] * n
        coords[0], coords[-1] = Fraction(1), Fraction(-1)
        mus["partially degenerate (highest root)"] = rs.weight(tuple(coords))

    print(f"type {args.type}, lambda = 0, height <= {args.height}\n")
    for label, mu in mus.items():
        print(label)
        describe(rs, lam, mu, args.height, kl, pc)


if __name__ == "__main__":
    main()
