#!/usr/bin/env python3
"""A degree-3 cover whose mod-3 ideal counts see only cubes.

X^3 - X - T cuts out a cyclic cover of F_3(T) of degree 3, unramified
at every finite prime.  Each unramified prime has all its inertia
degrees equal, so the number of ideals with a given monic norm n is,
mod 3, just the indicator that n is a perfect cube.  Summing n^-s over
the table therefore turns s into 3s: the mod-3 zeta of the cover equals
the mod-3 zeta of the rational base field evaluated at 3s.
"""

import sys

from gosslift.demos import run_demo

if __name__ == "__main__":
    report = run_demo("pgalois")
    print(report.text())
    sys.exit(0 if report.ok else 1)
