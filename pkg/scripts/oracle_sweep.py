#!/usr/bin/env python3
"""Exhaustive cross-validation of the support condition against the
determinant oracle over every family of (k-1)-subsets of [n].

    python scripts/oracle_sweep.py --n 4 --k 3
    python scripts/oracle_sweep.py --n 5 --k 3 --mode randomized --seed 7
"""

import argparse
import sys
from itertools import combinations, product

from cyclogab import SupportSpec, check_condition, det_is_nonzero


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--mode", choices=("symbolic", "randomized"), default="symbolic")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    subsets = list(combinations(range(1, args.n + 1), args.k - 1))
    total = len(subsets) ** args.k
    if total > 100_000:
        parser.error(f"{total} families is above the sweep guard")

    counts = {(True, True): 0, (True, False): 0, (False, True): 0, (False, False): 0}
    mismatches = []
    for zeros in product(subsets, repeat=args.k):
        spec = SupportSpec(args.n, args.k, zeros)
        condition = check_condition(spec)[0]
        nonzero, _ = det_is_nonzero(spec, mode=args.mode, seed=args.seed)
        counts[(condition, nonzero)] += 1
        if condition != nonzero:
            mismatches.append(spec.to_obj())

    print(f"families                      {total}")
    print(f"condition true,  det nonzero  {counts[(True, True)]}")
    print(f"condition false, det zero     {counts[(False, False)]}")
    print(f"condition true,  det zero     {counts[(True, False)]}")
    print(f"condition false, det nonzero  {counts[(False, True)]}")
    print(f"agreement                     {total - len(mismatches)}/{total}")
    for bad in mismatches:
        print(f"MISMATCH: {bad}")
    return 0 if not mismatches else 1


if __name__ == "__main__":
    sys.exit(main())
