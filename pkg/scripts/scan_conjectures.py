#!/usr/bin/env python3
"""Scan the two open statements and estimate the reduced profile's kernel rank.

Everything printed here is empirical evidence: the scans report agreement
ranges and the unexplained sign pattern of the mod-4 gap, and the rank
table shows whether the subsequence space stops growing with depth.
"""

import argparse
import sys

from reduxwords import (
    profile_kernel_rank,
    reduced_factor_complexity,
    scan_mod4_gap,
    scan_odd_halving,
    thue_morse,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=256, help="scan range (default 256)")
    parser.add_argument("--depth", type=int, default=5, help="kernel depth (default 5)")
    parser.add_argument("--terms", type=int, default=64, help="terms per kernel row (default 64)")
    args = parser.parse_args()

    counterexamples = 0

    odd = scan_odd_halving(args.n_max)
    print(f"odd-halving scan, n=0..{args.n_max}: {len(odd.counterexamples)} counterexamples")
    counterexamples += len(odd.counterexamples)

    gap = scan_mod4_gap(args.n_max)
    print(f"mod-4 gap scan, n=1..{args.n_max}: {len(gap.counterexamples)} counterexamples")
    details = gap.details
    print(
        f"  gap signs: {details['zero']} zero, {details['positive']} positive, "
        f"{details['negative']} negative (the sign rule is the open part)"
    )
    print(f"  pattern: {details['sign_pattern']}")
    counterexamples += len(gap.counterexamples)

    n_needed = 2**args.depth * args.terms
    profile = reduced_factor_complexity(thue_morse(), n_needed)
    estimate = profile_kernel_rank(profile, base=2, depth=args.depth, terms=args.terms)
    print(
        f"kernel rank of the reduced profile (base 2, {args.terms} terms): "
        f"{list(estimate.ranks)} by depth"
    )
    print(
        "rank stopped growing" if estimate.stabilized else "rank still growing",
        "at the deepest level scanned",
    )
    return 0 if counterexamples == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
