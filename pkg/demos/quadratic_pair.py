#!/usr/bin/env python3
"""Two quadratic extensions the Weil zeta cannot tell apart.

Adjoin a square root of T, or of T + 1, to F_3(T).  Counting ideals by
degree blocks gives the same answers for both fields through degree 6,
so the Weil series agree there.  Counting ideals at each individual
modulus n does not: already at n = T one field has 1 ideal and the
other has 2, visible both mod 3 and in the exact integer tables.  On
the group side the two fields correspond to distinct index-2 subgroups
of the Klein four group, which are not Gassmann equivalent.
"""

import sys

from gosslift.demos import run_demo

if __name__ == "__main__":
    report = run_demo("malakie")
    print(report.text())
    sys.exit(0 if report.ok else 1)
