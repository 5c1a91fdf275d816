#!/usr/bin/env python3
"""Reproduce the headline golden numbers in one run: level-one closed forms,
the Oxbury-Wilson symmetry, the rank-level comparison examples, and the
strange-duality determinant.  Equivalent to `theta-blocks paper-check`."""

import sys

from thetablocks.cli import main

if __name__ == "__main__":
    sys.exit(main(["paper-check", *sys.argv[1:]]))
