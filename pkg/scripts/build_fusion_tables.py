#!/usr/bin/env python3
"""Prebuild and persist the fusion tables behind the worked examples and the
dual-oracle sweeps, so later runs hit a warm cache.

Usage: python scripts/build_fusion_tables.py [cache_dir]
"""

import itertools
import sys
import time

from thetablocks.fusion import FusionTable

CONFIGS = [
    # (rank, level): full product table
    (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 7),
    (3, 1), (3, 2), (3, 3), (3, 5), (3, 9),
    (4, 7),
]


def main(cache_dir: str) -> None:
    for r, ell in CONFIGS:
        t0 = time.monotonic()
        table = FusionTable(r, ell, cache_dir=cache_dir)
        ws = table.weights()
        for a, b in itertools.combinations_with_replacement(ws, 2):
            table.product(a, b)
        table.save()
        print(
            f"so({2*r+1}) level {ell}: {len(ws)} weights, "
            f"{len(ws)*(len(ws)+1)//2} products   [{time.monotonic()-t0:.1f} s]"
        )


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".theta-blocks-cache")
