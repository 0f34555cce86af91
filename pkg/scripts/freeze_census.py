#!/usr/bin/env python3
"""Recompute the census regression constants with two independent routes.

Prints, for each size: the count of left restriction semigroupoids from
the pruned enumerator, the same census recounted by a naive full-product
enumeration with the complete checker at every leaf, and the count of
locally inductive constellations from the separate constellation-side
enumerator.  All three must agree before a constant is frozen in
constella.theorems.FROZEN_CENSUS_COUNTS.
"""

import argparse
import time
from itertools import product

from constella.core import PartialTable, check_left_restriction, check_semigroupoid
from constella.enumerate import (
    carrier_labels,
    enumerate_li_constellations,
    enumerate_lr_semigroupoids,
)


def naive_lr_count(n):
    carrier = carrier_labels(n)
    pairs = sorted(product(carrier, repeat=2))
    count = 0
    for mask in range(1 << len(pairs)):
        defined = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        for values in product(carrier, repeat=len(defined)):
            table = PartialTable(carrier, dict(zip(defined, values)))
            if not check_semigroupoid(table).valid:
                continue
            for images in product(carrier, repeat=n):
                plus = dict(zip(carrier, images))
                if check_left_restriction(table, plus).valid:
                    count += 1
    return count


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=3)
    parser.add_argument("--skip-naive", action="store_true",
                        help="skip the slow naive recount")
    args = parser.parse_args()

    for n in range(1, args.max_size + 1):
        t0 = time.time()
        lrs = sum(1 for _ in enumerate_lr_semigroupoids(n, cap=args.max_size))
        lic = sum(1 for _ in enumerate_li_constellations(n, cap=args.max_size))
        line = f"size {n}: lrs={lrs} lic={lic}"
        if not args.skip_naive:
            line += f" naive={naive_lr_count(n)}"
        print(line + f"  [{time.time() - t0:.1f}s]")


if __name__ == "__main__":
    main()
