#!/usr/bin/env python3
"""Two non-isomorphic groups of order 27 that Sym(27) cannot separate.

The elementary abelian group of order 27 and the Heisenberg group of
upper unitriangular 3x3 matrices over F_3 both embed into Sym(27) by
acting on themselves by translation.  Every non-identity element of
either group has order 3, so both images consist of the identity plus
26 permutations of cycle type 3^9: identical cycle statistics, hence a
Gassmann equivalent pair of subgroups of Sym(27).  One group is
abelian and the other is not, so they are certainly not conjugate.
"""

import sys

from gosslift.demos import run_demo

if __name__ == "__main__":
    report = run_demo("komatsu")
    print(report.text())
    sys.exit(0 if report.ok else 1)
