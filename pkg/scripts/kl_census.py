#!/usr/bin/env python3
"""Count nontrivial Kazhdan-Lusztig polynomials for a Weyl group.

Enumerates all pairs x <= w, reports how many have P_{x,w} != 1, and prints
the distribution of polynomials.  With --cache the results are persisted and
a second run is instant.

Usage: python3 scripts/kl_census.py --type A3 [--cache kl.jsonl]
"""

import argparse
from collections import Counter

from takiffo import (
    KLCache,
    build_root_system,
    full_weyl_group,
    kl_polynomial,
    parse_cartan_type,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--type", default="A3")
    ap.add_argument("--cache", help="optional cache file")
    args = ap.parse_args()

    rs = build_root_system(parse_cartan_type(args.type))
    g = full_weyl_group(rs).group
    cache = KLCache(args.cache)

    histogram = Counter()
    pairs = 0
    for w in g.elements():
        for x in g.elements():
            if not g.bruhat_leq(x, w):
                continue
            pairs += 1
            histogram[kl_polynomial(g, x, w, cache).coeffs] += 1
    cache.save()

    print(f"W({args.type}): {len(g)} elements, {pairs} Bruhat pairs")
    for coeffs, count in sorted(histogram.items(), key=lambda kv: (len(kv[0]), kv[0])):
        poly = " + ".join(
            ("" if c == 1 and i else str(c)) + ("" if i == 0 else "q" if i == 1 else f"q^{i}")
            for i, c in enumerate(coeffs) if c
        ) or "0"
        print(f"  P = {poly:<16} x{count}")
    if args.cache:
        print(f"cache: {cache.stats()}")


if __name__ == "__main__":
    main()
