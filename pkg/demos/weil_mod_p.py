#!/usr/bin/env python3
"""The mod-p table remembers the Weil zeta mod p.

The Weil series collects ideal counts into degree blocks a_d; the mod-p
table keeps one residue per monic modulus.  Summing the table over a
degree block and reducing a_d mod p land on the same number, for every
block and every extension in the standard test set.  So the mod-p zeta
determines the Weil zeta mod p, while the reverse direction fails, as
the quadratic pair demo shows.
"""

import sys

from gosslift.demos import run_demo

if __name__ == "__main__":
    report = run_demo("gossrem")
    print(report.text())
    sys.exit(0 if report.ok else 1)
