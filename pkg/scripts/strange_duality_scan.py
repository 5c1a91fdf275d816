#!/usr/bin/env python3
"""Scan the elliptic rank-level matrix over small (r, s) and all diagrams in
the r x (s-1) box with first row exactly s-1, printing each matrix and its
determinant.  Every determinant comes out exactly zero in Q[sqrt(2)]: the
sigma-orbit pair of columns is dependent, which is the strange-duality
failure mechanism.

Usage: python scripts/strange_duality_scan.py [rmax] [smax]
"""

import sys
import time

from thetablocks.fock import ranklevel_matrix
from thetablocks.weights import young_diagrams


def main(rmax: int = 3, smax: int = 3) -> int:
    nonzero = 0
    for r in range(2, rmax + 1):
        for s in range(2, smax + 1):
            for y in young_diagrams(r, s - 1):
                if y.row(1) != s - 1:
                    continue
                t0 = time.monotonic()
                m = ranklevel_matrix(y, r, s)
                flat = [str(e) for row in m.entries for e in row]
                status = "det = 0" if not m.determinant else f"det = {m.determinant}  *** NONZERO"
                if m.determinant:
                    nonzero += 1
                print(
                    f"(r,s)=({r},{s})  Y={str(y):8s}  A = [{flat[0]}, {flat[1]}; "
                    f"{flat[2]}, {flat[3]}]  {status}   [{time.monotonic()-t0:.2f} s]"
                )
    print("all determinants vanish" if not nonzero else f"{nonzero} NONZERO determinants")
    return 1 if nonzero else 0


if __name__ == "__main__":
    rmax = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    smax = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    sys.exit(main(rmax, smax))
